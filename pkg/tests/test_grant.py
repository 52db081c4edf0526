# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Tests for hecgen/grant.py"""

import itertools

import pytest


@pytest.fixture()
def affine_point(curve_x5_x, f3):
    """Build an affine point from ``(z12, z22, z222, z122)`` using f1, f2, f3 and f5."""
    from hecgen.grant import GrantPoint, _lift_b, _solve_rest, _z11_from_f5

    b = _lift_b(curve_x5_x, f3)

    def _point(z12, z22, z222, z122):
        z12, z22, z222, z122 = (f3(v) for v in (z12, z22, z222, z122))
        z11 = _z11_from_f5(b, z12, z22, z222)
        return GrantPoint.from_affine(_solve_rest(f3, b, z11, z12, z22, z222, z122))

    return _point


class TestDefiningEquations:
    def test_table(self):
        from hecgen.grant import AFFINE_EQUATIONS, DEFINING_EQUATIONS, PROJECTIVE_EQUATIONS

        assert len(DEFINING_EQUATIONS) == 14
        assert list(AFFINE_EQUATIONS) == [1, 2, 3, 4, 5, 6]
        assert list(PROJECTIVE_EQUATIONS) == list(range(1, 14))

    def test_homogenisation(self):
        from hecgen.grant import defining_polynomials

        affine = defining_polynomials()
        homogeneous = defining_polynomials(homogeneous=True)
        assert all(poly.is_homogeneous for poly in homogeneous)
        assert [p.total_degree() for p in homogeneous] == [p.total_degree() for p in affine]
        # f1 is quadratic, f5 and f7 are cubic
        assert [affine[i].total_degree() for i in (1, 5, 7)] == [2, 3, 3]

    def test_evaluate_all(self, curve_x5_x, f3):
        from hecgen.grant import evaluate_all

        residues = evaluate_all([f3(0)] * 8, curve_x5_x)
        assert len(residues) == 14
        # f1 at the origin is b4 = 1
        assert residues[1] == 1

    def test_solved_point_satisfies_defining_relations(self, curve_x5_x, affine_point):
        from hecgen.grant import evaluate_all

        point = affine_point(1, 2, 1, 0)
        residues = evaluate_all(point.affine(), curve_x5_x)
        for i in (1, 2, 3, 5):
            assert residues[i].is_zero()

    @pytest.mark.parametrize("curve", ["curve_x5_x", "curve_f5"])
    def test_every_equation_vanishes_on_u(self, curve, request):
        from hecgen.grant import enumerate_U, evaluate_all

        c = request.getfixturevalue(curve)
        points = enumerate_U(c, 1)
        assert points
        for point in points:
            residues = evaluate_all(point.affine(), c)
            assert [i for i, value in enumerate(residues) if not value.is_zero()] == []


class TestGrantPoint:
    def test_normalisation(self, f3):
        from hecgen.grant import GrantPoint

        point = GrantPoint(tuple(f3(v) for v in (0, 2, 1, 0, 0, 0, 0, 0, 2)))
        assert [c.index() for c in point.coords] == [0, 1, 2, 0, 0, 0, 0, 0, 1]
        assert not point.is_affine()
        assert point["z11"] == 1

    def test_invalid(self, f3):
        from hecgen.grant import GrantPoint

        with pytest.raises(ValueError):
            GrantPoint((f3(0),) * 9)
        with pytest.raises(ValueError):
            GrantPoint((f3(1),) * 8)

    def test_affine_part(self, f3):
        from hecgen.errors import NotInU
        from hecgen.grant import GrantPoint

        z = tuple(f3(v) for v in (1, 2, 0, 1, 1, 2, 0, 2))
        point = GrantPoint.from_affine(z)
        assert point.affine() == z
        assert point.to_text() == "1:1:2:0:1:1:2:0:2"
        with pytest.raises(NotInU):
            GrantPoint((f3(0),) + z).affine()

    def test_negate(self, f3):
        from hecgen.grant import ODD_COORDINATES, GrantPoint

        point = GrantPoint.from_affine(tuple(f3(v) for v in (1, 2, 0, 1, 1, 2, 0, 2)))
        negated = point.negate()
        assert negated.negate() == point
        for name in ODD_COORDINATES:
            assert negated[name] == -point[name]
        assert negated["z"] == point["z"]


INTRINSIC = (1, 0, -1, 0, 1, 1, 1)


def _intrinsic():
    from fractions import Fraction

    from hecgen.grant import GrantConvention

    *signs, scale = INTRINSIC
    return GrantConvention(*signs, Fraction(scale))


class TestSpecialPoints:
    def test_identity(self, jacobian_f9):
        from hecgen.grant import iota_special

        point = iota_special(jacobian_f9.identity())
        assert [c.index() for c in point.coords] == [0, 0, 0, 0, 1, 0, 0, 0, 0]

    def test_weight_one(self, curve_x5_x):
        from hecgen.grant import iota_special
        from hecgen.jacobian import get_jacobian

        point = iota_special(get_jacobian(curve_x5_x, 1).point_divisor(2, 1))
        # x = 2, y = 1: (0 : 0 : 0 : 0 : -x^3 : x^2 : -x : 1 : -y)
        assert [c.index() for c in point.coords] == [0, 0, 0, 0, 1, 1, 1, 1, 2]

    @pytest.mark.parametrize("curve, m", [("curve_x5_x", 1), ("curve_x5_x", 2), ("curve_f5", 1)])
    def test_theta_lies_on_the_projective_model(self, curve, m, request):
        from hecgen.grant import iota_special, is_on_jacobian_projective
        from hecgen.jacobian import get_jacobian, theta_elements

        c = request.getfixturevalue(curve)
        theta = theta_elements(get_jacobian(c, m))
        assert theta[0].weight == 0
        for t in theta:
            assert is_on_jacobian_projective(iota_special(t), c), t

    def test_wrong_weight(self, jacobian_f9):
        import random

        from hecgen.errors import WrongWeight
        from hecgen.grant import iota_special, mumford_to_grant
        from hecgen.jacobian import random_divisor

        rng = random.Random(0)
        d = random_divisor(jacobian_f9, rng)
        while d.weight != 2:
            d = random_divisor(jacobian_f9, rng)
        with pytest.raises(WrongWeight):
            iota_special(d)
        with pytest.raises(WrongWeight):
            mumford_to_grant(jacobian_f9.identity())


class TestAddition:
    def test_q_is_antisymmetric(self, curve_x5_x, affine_point):
        from hecgen.grant import q_forms

        a, r = affine_point(1, 2, 1, 0), affine_point(0, 1, 2, 1)
        assert q_forms(a, r, curve_x5_x).q == -q_forms(r, a, curve_x5_x).q

    def test_doubling_vanishes(self, curve_x5_x, affine_point):
        from hecgen.errors import QFormVanishes
        from hecgen.grant import grant_add

        a = affine_point(1, 2, 1, 0)
        with pytest.raises(QFormVanishes):
            grant_add(a, a, curve_x5_x)

    @pytest.mark.parametrize("curve", ["curve_x5_x", "curve_f5"])
    def test_sum_lies_on_u(self, curve, request):
        from hecgen.grant import enumerate_U, grant_add, is_on_U, q_forms

        c = request.getfixturevalue(curve)
        points = enumerate_U(c, 1)
        added = 0
        for a in points:
            for r in points:
                if q_forms(a, r, c).q.is_zero():
                    continue
                total = grant_add(a, r, c)
                assert total.is_affine()
                assert is_on_U(total.affine(), c), (a, r)
                added += 1
        assert added > 0

    @pytest.mark.parametrize("curve", ["curve_x5_x", "curve_f5"])
    def test_sum_matches_cantor(self, curve, request):
        from hecgen.grant import grant_add
        from hecgen.jacobian import add, enumerate_jacobian, negate

        c = request.getfixturevalue(curve)
        convention = _intrinsic()
        divisors = [d for d in enumerate_jacobian(c, 1) if d.weight == 2]
        checked = 0
        for d1, d2 in itertools.islice(itertools.combinations(divisors, 2), 300):
            total = add(d1, d2)
            if total.weight != 2 or add(d1, negate(d2)).weight != 2:
                continue
            image = grant_add(convention.apply(d1, c), convention.apply(d2, c), c)
            assert image == convention.apply(total, c), (d1, d2)
            checked += 1
        assert checked > 0

    def test_printed_z_variant(self, curve_f5):
        from hecgen.grant import enumerate_U, grant_add, q_forms

        points = enumerate_U(curve_f5, 1)
        a, r = next(
            (a, r) for a in points for r in points if not q_forms(a, r, curve_f5).q.is_zero()
        )
        default = grant_add(a, r, curve_f5)
        printed = grant_add(a, r, curve_f5, printed_z=True)
        assert default.coords[:8] == printed.coords[:8]


class TestEnumeration:
    @pytest.mark.parametrize("curve", ["curve_x5_x", "curve_f5"])
    def test_points_lie_on_u(self, curve, request):
        from hecgen.grant import enumerate_U, is_on_U

        c = request.getfixturevalue(curve)
        points = enumerate_U(c, 1)
        assert len(set(points)) == len(points)
        for point in points:
            assert point.is_affine()
            assert is_on_U(point.affine(), c)

    def test_budget(self, curve_x5_x):
        from hecgen.errors import TooLarge
        from hecgen.grant import enumerate_U

        with pytest.raises(TooLarge):
            enumerate_U(curve_x5_x, 2, budget=700)

    def test_u_count(self, curve_x5_x):
        from hecgen.grant import enumerate_U

        # |J(F_3)| - |C(F_3)| = 12 - 4
        assert len(enumerate_U(curve_x5_x, 1)) == 8

    @pytest.mark.parametrize("curve", ["curve_x5_x", "curve_f5"])
    def test_affine_divisor_is_a_bijection(self, curve, request):
        from hecgen.grant import affine_divisor, enumerate_U
        from hecgen.jacobian import enumerate_jacobian, get_jacobian

        c = request.getfixturevalue(curve)
        jacobian = get_jacobian(c, 1)
        images = {affine_divisor(p, jacobian) for p in enumerate_U(c, 1)}
        weight_two = {d for d in enumerate_jacobian(c, 1) if d.weight == 2}
        assert images == weight_two

    def test_bezout(self, curve_x5_x, rng):
        from hecgen.grant import bezout_check, enumerate_U

        count, bound = bezout_check(enumerate_U(curve_x5_x, 1), curve_x5_x, rng)
        assert count <= bound
        assert bezout_check([], curve_x5_x, rng) == (0, 0)


class TestCalibration:
    def test_search_space(self):
        from hecgen.grant import conventions

        candidates = conventions()
        assert len(candidates) == 432
        assert len(set(candidates)) == 432
        assert candidates.index(_intrinsic()) == 36

    def test_unresolved_convention_is_reported(self, curve_x5_x):
        from unittest.mock import patch

        from hecgen.errors import ConventionUnresolved
        from hecgen.grant import calibrate_convention

        calibrate_convention.cache_clear()
        with patch("hecgen.grant.conventions", return_value=[]):
            with pytest.raises(ConventionUnresolved):
                calibrate_convention(curve_x5_x, 10, 0)
        calibrate_convention.cache_clear()

    def test_intrinsic_convention_inverts_affine_divisor(self, curve_f5):
        from hecgen.grant import affine_divisor
        from hecgen.jacobian import enumerate_jacobian, get_jacobian

        jacobian = get_jacobian(curve_f5, 1)
        for d in enumerate_jacobian(curve_f5, 1):
            if d.weight == 2:
                assert affine_divisor(_intrinsic().apply(d, curve_f5), jacobian) == d

    def test_calibration_resolves(self, curve_f5):
        from hecgen.grant import calibrate_convention

        calibrate_convention.cache_clear()
        convention = calibrate_convention(curve_f5)
        calibrate_convention.cache_clear()
        assert convention == _intrinsic()
        assert convention.s222 == convention.s122

    def test_mumford_to_grant_lands_on_u(self, curve_x5_x):
        from hecgen.grant import calibrate_convention, is_on_U, mumford_to_grant
        from hecgen.jacobian import enumerate_jacobian

        calibrate_convention.cache_clear()
        for d in enumerate_jacobian(curve_x5_x, 1):
            if d.weight == 2:
                assert is_on_U(mumford_to_grant(d).affine(), curve_x5_x)
        calibrate_convention.cache_clear()


class TestVerifyReport:
    @pytest.mark.parametrize("curve", ["curve_x5_x", "curve_f5"])
    def test_structural_checks(self, curve, request):
        from hecgen.grant import calibrate_convention, verify_intersection_lemmas

        c = request.getfixturevalue(curve)
        calibrate_convention.cache_clear()
        report = verify_intersection_lemmas(c, 1, pair_budget=40)
        calibrate_convention.cache_clear()
        assert report.u_points == report.expected_u_points
        assert report.convention_error is None
        assert {name: verdict for name, verdict in report.checks.items() if verdict is not True} == {}
        assert report.passed
        assert report.max_theta_overlap <= 2
        assert report.cantor_pairs > 0
        assert report.cantor_agreements == report.cantor_pairs
        assert report.unexplained_vanishing == 0

    def test_u_count_on_the_reference_curve(self, curve_x5_x):
        from hecgen.grant import verify_intersection_lemmas

        report = verify_intersection_lemmas(curve_x5_x, 1, pair_budget=5)
        assert report.expected_u_points == 8

    def test_rows(self, curve_x5_x):
        from hecgen.grant import verify_intersection_lemmas

        report = verify_intersection_lemmas(curve_x5_x, 1, pair_budget=5)
        rows = report.rows()
        names = [row["check"] for row in rows]
        for check in report.checks:
            assert check in names
        assert {"check": "q", "verdict": "3"} in rows
        assert all(row["verdict"] in ("pass", "FAIL", "n/a") for row in rows[: len(report.checks)])
