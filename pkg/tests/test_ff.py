# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Tests for hecgen/ff.py"""

import pytest


class TestPrimeField:
    @pytest.mark.parametrize("p, error", [(2, "EvenCharacteristic"), (9, "NotPrime")])
    def test_rejected_characteristic(self, p, error):
        from hecgen import errors
        from hecgen.ff import prime_field

        with pytest.raises(getattr(errors, error)):
            prime_field(p)

    def test_prime_field_is_cached(self):
        from hecgen.ff import prime_field

        assert prime_field(7) is prime_field(7)

    def test_arithmetic(self, f5):
        a, b = f5(3), f5(4)
        assert a + b == 2
        assert a - b == 4
        assert a * b == 2
        assert a / b == 2
        assert -a == 2
        assert a ** -1 == 2
        assert 1 - a == 3

    def test_zero_has_no_inverse(self, f3):
        from hecgen.errors import DivisionByZero

        with pytest.raises(DivisionByZero):
            f3.zero().inverse()

    def test_fields_do_not_mix(self, f3, f5):
        from hecgen.errors import FieldMismatch
        from hecgen.ff import field_arith

        with pytest.raises(FieldMismatch):
            f3(1) + f5(1)
        with pytest.raises(FieldMismatch):
            field_arith(f3(1), f5(1), "add")

    def test_field_arith(self, f5):
        from hecgen.ff import field_arith

        assert field_arith(f5(2), f5(3), "div") == 4
        with pytest.raises(ValueError):
            field_arith(f5(2), f5(3), "pow")

    def test_squares(self, f3):
        assert f3(1).is_square()
        assert not f3(2).is_square()
        assert f3(0).quadratic_character() == 0
        assert f3(2).quadratic_character() == -1
        assert f3(2).sqrt() is None


class TestExtensionField:
    def test_canonical_order(self, f9):
        from hecgen.ff import enumerate_field

        elements = list(enumerate_field(f9))
        assert [x.index() for x in elements] == list(range(9))
        assert elements[3] == f9.gen()
        assert f9.gen().to_text() == "0;1"

    def test_generator_squares_to_minus_one(self, f9):
        i = f9.gen()
        assert i * i == -1
        assert f9.modulus().coeffs == tuple(f9.subfield(3)(c) for c in (1, 0, 1))

    def test_multiplicative_group(self, f9):
        from hecgen.ff import enumerate_field

        for x in list(enumerate_field(f9))[1:]:
            assert x**8 == 1
            assert x * x.inverse() == 1

    def test_square_roots(self, f9):
        from hecgen.ff import enumerate_field

        for x in enumerate_field(f9):
            root = (x * x).sqrt()
            assert root * root == x * x
        # every element of F_3 is a square in F_9
        assert f9(2).is_square()

    def test_frobenius(self, f9):
        i = f9.gen()
        assert i.frobenius(3) == -i
        assert i.frobenius(3, 2) == i
        assert not i.in_subfield(3)
        assert f9(2).in_subfield(3)

    def test_hash_agrees_with_int_equality(self, f9):
        from hecgen.ff import make_field

        f81 = make_field(3, [2, 2])
        for field in (f9, f81):
            for n in range(3):
                element = field(n)
                assert element == n
                assert hash(element) == hash(n)
                assert n in {element}
                assert element in {n}
            assert {field(2): "two"}[2] == "two"
        assert hash(f9.gen()) != hash(f9(1))

    def test_frobenius_is_multiplicative(self):
        from hecgen.ff import enumerate_field, make_field

        f81 = make_field(3, [2, 2])
        elements = list(enumerate_field(f81))
        for a, b in zip(elements[::7], elements[3::11]):
            assert (a * b).frobenius(9) == a.frobenius(9) * b.frobenius(9)
            assert (a + b).frobenius(3) == a.frobenius(3) + b.frobenius(3)
            assert a.frobenius(9, 2) == a

    def test_frobenius_needs_tower_level(self):
        from hecgen.errors import InvalidSubfield
        from hecgen.ff import frobenius_power, make_field

        f81 = make_field(3, [2, 2])
        with pytest.raises(InvalidSubfield):
            frobenius_power(f81.gen(), 27, 1)
        with pytest.raises(ValueError):
            frobenius_power(f81.gen(), 3, -1)

    def test_lift_into_tower(self, f3):
        from hecgen.ff import make_field

        f81 = make_field(3, [2, 2])
        f9 = f81.subfield(9)
        assert f81.level_cardinalities == (3, 9, 81)
        assert f81(f3(2)) == f81(2)
        assert f81(f9.gen()).in_subfield(9)
        assert f81.total_degree == 4
        assert len(f81.gen().to_text().split(";")) == 4

    def test_unknown_subfield(self, f9):
        from hecgen.errors import InvalidSubfield

        with pytest.raises(InvalidSubfield):
            f9.subfield(27)

    def test_reducible_modulus(self, f3):
        from hecgen.errors import ReducibleModulus
        from hecgen.poly import Polynomial

        with pytest.raises(ReducibleModulus):
            f3.extend(2, Polynomial(f3, [2, 0, 1]))

    def test_text_form(self, f9):
        from hecgen.ff import enumerate_field

        for x in enumerate_field(f9):
            assert f9.from_text(x.to_text()) == x
        with pytest.raises(ValueError):
            f9.from_text("3")
        with pytest.raises(ValueError):
            f9.from_text("1;1;1")

    def test_enumeration_budget(self, f9):
        from hecgen.errors import TooLarge
        from hecgen.ff import enumerate_field

        with pytest.raises(TooLarge):
            enumerate_field(f9, budget=8)


class TestIrreducibility:
    @pytest.mark.parametrize(
        "coefficients, expected",
        [([1, 0, 1], True), ([2, 0, 1], False), ([2, 1, 1], True), ([1, 2, 0, 1], True)],
    )
    def test_is_irreducible(self, f3, coefficients, expected):
        from hecgen.ff import is_irreducible
        from hecgen.poly import Polynomial

        assert is_irreducible(Polynomial(f3, coefficients)) is expected

    def test_smallest_irreducible(self, f3):
        from hecgen.ff import smallest_irreducible

        assert [c.index() for c in smallest_irreducible(f3, 2).coeffs] == [1, 0, 1]


class TestFieldSpec:
    @pytest.mark.parametrize(
        "text, p, degrees, moduli",
        [
            ("3", 3, (1,), []),
            ("5^3", 5, (3,), []),
            ("3^2^2:1,0,1/", 3, (2, 2), [["1", "0", "1"], None]),
        ],
    )
    def test_parse_field_spec(self, text, p, degrees, moduli):
        from hecgen.ff import parse_field_spec

        assert parse_field_spec(text) == (p, degrees, moduli)

    def test_bad_field_spec(self):
        from hecgen.ff import parse_field_spec

        with pytest.raises(ValueError):
            parse_field_spec("three")

    @pytest.mark.parametrize("text", ["3", "3^2", "3^2^2", "5^2"])
    def test_format_inverts_build(self, text):
        from hecgen.ff import build_field_spec, format_field_spec

        levels = build_field_spec(text)
        rebuilt = build_field_spec(format_field_spec(levels))
        assert rebuilt[-1] == levels[-1]
        assert rebuilt[-1].cardinality == levels[-1].cardinality

    def test_make_field_rejects_degrees(self):
        from hecgen.ff import make_field

        with pytest.raises(ValueError):
            make_field(3, [0])
        with pytest.raises(ValueError):
            make_field(3, [])
