# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Tests for hecgen/frobgen.py"""

import random

import pytest


@pytest.fixture()
def divisor(jacobian_f9):
    """A weight-2 divisor of ``J_C(F_9)`` with no special order."""
    from hecgen.jacobian import random_divisor

    return random_divisor(jacobian_f9, random.Random(5))


@pytest.fixture()
def order_two(curve_x5_x):
    """The prime-order element found for ``J_C(F_9)``; here ``ell = 2``."""
    from hecgen.jacobian import find_prime_order_element

    return find_prime_order_element(curve_x5_x, 2, rng_seed=0)


class TestDigitSet:
    def test_ascending(self):
        from hecgen.frobgen import DigitSet

        ds = DigitSet(3)
        assert list(ds) == [-4, -3, -2, -1, 0, 1, 2, 3, 4]
        assert (ds.first, ds.last, ds.half) == (-4, 4, 4)
        assert ds.successor(-1) == 0
        assert ds.successor(4) is None

    def test_balanced(self):
        from hecgen.config import DigitOrder
        from hecgen.frobgen import DigitSet

        ds = DigitSet(3, DigitOrder.balanced)
        assert list(ds) == [0, 1, -1, 2, -2, 3, -3, 4, -4]
        assert ds.successor(1) == -1
        assert len(ds) == 9
        assert -4 in ds and 5 not in ds

    def test_even_q(self):
        from hecgen.frobgen import DigitSet

        with pytest.raises(ValueError):
            DigitSet(4)

    def test_vector_at_matches_enumeration(self):
        from hecgen.config import DigitOrder
        from hecgen.frobgen import DigitSet, lex_enumerate

        for order in DigitOrder:
            ds = DigitSet(3, order)
            vectors = list(lex_enumerate(ds, 2))
            assert len(vectors) == 81
            assert [ds.vector_at(i, 2) for i in range(81)] == vectors
        assert DigitSet(3).vector_at(0, 2) == (-4, -4)
        assert DigitSet(3).vector_at(1, 2) == (-4, -3)
        assert DigitSet(3).vector_at(80, 2) == (4, 4)

    def test_lex_budget(self):
        from hecgen.errors import TooLarge
        from hecgen.frobgen import DigitSet, lex_enumerate

        with pytest.raises(TooLarge):
            lex_enumerate(DigitSet(3), 3, budget=700)
        with pytest.raises(ValueError):
            lex_enumerate(DigitSet(3), 0)


class TestFrobeniusTable:
    def test_multiples(self, divisor):
        from hecgen.frobgen import DigitSet, FrobeniusTable
        from hecgen.jacobian import frobenius_divisor

        table = FrobeniusTable(divisor, 2, DigitSet(3))
        assert table[(0, 0)].is_identity()
        assert table[(3, 0)] == divisor * 3
        assert table[(-2, 1)] == frobenius_divisor(divisor, 1) * -2
        assert table.images == [divisor, frobenius_divisor(divisor, 1)]

    def test_generate_divisor(self, divisor):
        from hecgen.frobgen import DigitSet, FrobeniusTable, generate_divisor, naive_divisor

        table = FrobeniusTable(divisor, 2, DigitSet(3))
        for m in [(0, 0), (1, 0), (-4, 3), (2, -2)]:
            assert generate_divisor(m, divisor, table) == naive_divisor(m, divisor)

    def test_table_mismatch(self, divisor, jacobian_f9):
        from hecgen.errors import TableMismatch
        from hecgen.frobgen import DigitSet, FrobeniusTable, generate_divisor
        from hecgen.jacobian import random_divisor

        table = FrobeniusTable(divisor, 1, DigitSet(3))
        other = random_divisor(jacobian_f9, random.Random(99))
        with pytest.raises(TableMismatch):
            generate_divisor((1, 1), divisor, table)
        with pytest.raises(TableMismatch):
            generate_divisor((5,), divisor, table)
        if other != divisor:
            with pytest.raises(TableMismatch):
                generate_divisor((1,), other, table)


class TestCoordinateFunction:
    def test_arguments(self):
        from hecgen.frobgen import CoordinateFunction

        with pytest.raises(ValueError):
            CoordinateFunction()
        with pytest.raises(ValueError):
            CoordinateFunction(tag="u1", function=lambda d: d.coordinate("u0"))
        with pytest.raises(ValueError):
            CoordinateFunction(tag="w2")
        with pytest.raises(ValueError):
            CoordinateFunction(tag="u1", degree=0)

    def test_zero_on_theta(self, divisor, jacobian_f9):
        from hecgen.frobgen import CoordinateFunction

        f = CoordinateFunction(tag="v0")
        assert f(jacobian_f9.identity()).is_zero()
        assert f(jacobian_f9.point_divisor(0, 0)).is_zero()
        assert f(divisor) == divisor.coordinate("v0")

    def test_custom_function(self, divisor):
        from hecgen.frobgen import CoordinateFunction

        def trace(d):
            return d.coordinate("u1") + d.coordinate("u0")

        f = CoordinateFunction(function=trace, degree=2)
        assert f.name == "trace"
        assert f(divisor) == trace(divisor)


class TestSequence:
    @pytest.mark.parametrize("order", ["ascending", "balanced"])
    @pytest.mark.parametrize("tag", ["u1", "u0", "v1", "v0"])
    def test_incremental_matches_naive(self, divisor, order, tag):
        from hecgen.config import DigitOrder
        from hecgen.frobgen import CoordinateFunction, generate_sequence, generate_sequence_naive

        f = CoordinateFunction(tag=tag)
        fast = generate_sequence(divisor, 2, f, digit_order=DigitOrder(order))
        slow = generate_sequence_naive(divisor, 2, f, digit_order=DigitOrder(order))
        assert len(fast) == 81
        assert fast == slow

    def test_ranges_concatenate(self, divisor):
        from hecgen.frobgen import CoordinateFunction, generate_sequence, generate_sequence_range

        f = CoordinateFunction(tag="u1")
        whole = generate_sequence(divisor, 2, f)
        parts = []
        for start, stop in [(0, 10), (10, 10), (10, 47), (47, 81)]:
            parts += generate_sequence_range(divisor, 2, f, start, stop)
        assert parts == whole

    def test_range_bounds(self, divisor):
        from hecgen.frobgen import CoordinateFunction, generate_sequence_range

        with pytest.raises(ValueError):
            generate_sequence_range(divisor, 1, CoordinateFunction(tag="u1"), 5, 10)

    def test_k_exceeds_n(self, divisor):
        from hecgen.frobgen import CoordinateFunction, generate_sequence

        with pytest.raises(ValueError):
            generate_sequence(divisor, 3, CoordinateFunction(tag="u1"))

    def test_sequence_budget(self, divisor):
        from hecgen.errors import TooLarge
        from hecgen.frobgen import CoordinateFunction, generate_sequence

        with pytest.raises(TooLarge):
            generate_sequence(divisor, 2, CoordinateFunction(tag="u1"), budget=80)

    def test_multiples_of_prime_order_element(self, order_two):
        from hecgen.frobgen import DigitSet, FrobeniusTable, walk_divisors

        d, ell = order_two.divisor, order_two.ell
        table = FrobeniusTable(d, 2, DigitSet(3))
        for dm in walk_divisors(d, 2, 0, 81, table):
            assert dm.is_identity() or (dm * ell).is_identity()

    def test_warns_on_composite_order(self, divisor, caplog):
        from hecgen.frobgen import CoordinateFunction, generate_sequence

        generate_sequence(divisor, 1, CoordinateFunction(tag="u1"), ell=4)
        assert "not prime" in caplog.text
        caplog.clear()
        generate_sequence(divisor, 1, CoordinateFunction(tag="u1"), ell=3)
        assert "characteristic" in caplog.text


class TestCollisions:
    def test_order_two_element(self, order_two):
        from hecgen.frobgen import collision_stats

        stats = collision_stats(order_two.divisor, 1, order_two.ell)
        # m D is O for even m and D for odd m, m in -4..4
        assert (stats.distinct, stats.max_t) == (2, 5)
        assert stats.histogram == {4: 1, 5: 1}
        assert stats.vacuous
        assert stats.largest_e is None
        assert stats.proposition_holds
        assert not stats.informative

    def test_broken_bound_is_reported(self, order_two, caplog):
        from hecgen.frobgen import collision_stats

        stats = collision_stats(order_two.divisor, 1, 10**6)
        assert stats.admissible_e == [1]
        assert not stats.proposition_holds
        assert "breaks the collision bound" in caplog.text

    def test_collisions_cover_all_vectors(self, divisor):
        from hecgen.frobgen import collision_stats

        stats = collision_stats(divisor, 2, 7)
        assert sum(t * count for t, count in stats.histogram.items()) == 81

    @pytest.mark.parametrize(
        "q, ell, e, admitted",
        [(3, 10**6, 1, True), (3, 10**5, 1, False), (3, 10**6, 2, False), (5, 10**8, 1, True)],
    )
    def test_proposition_admits(self, q, ell, e, admitted):
        from hecgen.frobgen import proposition_admits

        assert proposition_admits(q, ell, e) is admitted

    @pytest.mark.slow
    def test_non_vacuous_instance(self, f3):
        from hecgen.curve import jacobian_order, char_poly, make_curve
        from hecgen.frobgen import collision_stats, proposition_admits
        from hecgen.jacobian import factor_order, find_prime_order_element

        for b in [(0, 0, 1, 0, 1), (1, 0, 2, 0, 1), (0, 1, 0, 1, 2), (2, 1, 0, 0, 1)]:
            try:
                c = make_curve(f3, b)
            except ValueError:
                continue
            order = jacobian_order(char_poly(c), 6)
            if not proposition_admits(3, max(p for p, _ in factor_order(order)), 1):
                continue
            element = find_prime_order_element(c, 6, rng_seed=1)
            stats = collision_stats(element.divisor, 1, element.ell)
            assert not stats.vacuous
            assert stats.proposition_holds
            assert stats.max_t == 1
            return
        pytest.skip("no curve in the list has a large enough prime factor")


class TestTheoremBound:
    def test_order_limited(self):
        import sympy

        from hecgen.frobgen import theorem_bound

        bound = theorem_bound(3, 2, 2, 7, 1)
        assert bound.bound == sympy.Rational(7, 59049)
        assert not bound.nontrivial
        assert float(bound) == pytest.approx(7 / 59049)

    def test_growth_limited(self):
        from hecgen.frobgen import theorem_bound

        bound = theorem_bound(3, 2, 2, 3**12, 1)
        assert bound.bound == 3
        assert bound.nontrivial

    def test_irrational_growth(self):
        import sympy

        from hecgen.frobgen import theorem_bound

        bound = theorem_bound(3, 1, 1, 3**20, 2)
        assert bound.bound == sympy.sqrt(3) / 2
        assert bound.nontrivial

    def test_degree(self):
        from hecgen.frobgen import theorem_bound

        with pytest.raises(ValueError):
            theorem_bound(3, 2, 2, 7, 0)
