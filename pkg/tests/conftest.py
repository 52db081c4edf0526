# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration for hecgen."""

from __future__ import absolute_import, print_function

import pytest


@pytest.fixture()
def f3():
    """The prime field ``F_3``."""
    from hecgen.ff import prime_field

    return prime_field(3)


@pytest.fixture()
def f5():
    """The prime field ``F_5``."""
    from hecgen.ff import prime_field

    return prime_field(5)


@pytest.fixture()
def f9():
    """``F_9 = F_3[i]`` with ``i^2 = -1``."""
    from hecgen.ff import make_field

    return make_field(3, [2])


@pytest.fixture()
def curve_x5_x(f3):
    """``Y^2 = X^5 + X`` over ``F_3``.

    ``|C(F_3)| = 4``, ``|C(F_9)| = 14``, ``chi = T^4 + 2T^2 + 9`` and
    ``|J_C(F_3)| = 12``, ``|J_C(F_9)| = 144``.
    """
    from hecgen.curve import make_curve

    return make_curve(f3, [0, 0, 0, 1, 0])


@pytest.fixture()
def curve_x5_1(f3):
    """``Y^2 = X^5 + 1`` over ``F_3``."""
    from hecgen.curve import make_curve

    return make_curve(f3, [0, 0, 0, 0, 1])


@pytest.fixture()
def curve_f5(f5):
    """``Y^2 = X^5 + 2X + 1`` over ``F_5``."""
    from hecgen.curve import make_curve

    return make_curve(f5, [0, 0, 0, 2, 1])


@pytest.fixture()
def jacobian_f9(curve_x5_x):
    """``J_C(F_9)`` for ``Y^2 = X^5 + X``."""
    from hecgen.jacobian import get_jacobian

    return get_jacobian(curve_x5_x, 2)


@pytest.fixture()
def rng():
    """Seeded random generator."""
    import random

    return random.Random(20261017)


@pytest.fixture()
def elements():
    """Build a list of field elements from integers."""

    def _elements(field, values):
        return [field(v) for v in values]

    return _elements


@pytest.fixture()
def record():
    """Build an experiment record with plausible values."""
    from hecgen.harness.experiment import ExperimentRecord

    def _record(index=0, **overrides):
        values = dict(
            index=index,
            q=3,
            n=2,
            k=1,
            ell=2,
            deg_f=2,
            length=9,
            linear_complexity=4,
            bound=0.5,
            bound_exact="1/2",
            nontrivial=False,
            irreducible=False,
            ell_large=False,
            hypotheses_met=False,
            distinct=2,
            max_t=5,
            collision_e=None,
            collision_vacuous=True,
            collision_holds=True,
            digit_order="ascending",
            coordinate="u1",
            curve="0,0,0,1,0",
            seed=0,
            wall_time=0.25,
        )
        values.update(overrides)
        return ExperimentRecord(**values)

    return _record
