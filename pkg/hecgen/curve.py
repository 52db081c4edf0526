# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Genus-2 curves ``Y^2 = h(X)`` and their Frobenius characteristic polynomial."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from hecgen.config import FIELD_ENUMERATION_BUDGET, ROOT_MODULUS_TOLERANCE
from hecgen.errors import InvariantFailure, NonIntegralS2, SingularCurve, TooLarge
from hecgen.ff import FieldDesc, FieldElement, enumerate_field
from hecgen.poly import Polynomial, poly_gcd

logger = logging.getLogger("hecgen")

T = sympy.Symbol("T")


@dataclass(frozen=True)
class CurveParams:
    """Curve ``Y^2 = X^5 + b1 X^4 + b2 X^3 + b3 X^2 + b4 X + b5`` over ``F_q``."""

    field: FieldDesc
    b: Tuple[FieldElement, ...]

    @property
    def q(self) -> int:  # noqa: D102
        return self.field.cardinality

    @property
    def p(self) -> int:  # noqa: D102
        return self.field.p

    @property
    def h(self) -> Polynomial:
        """The quintic as a polynomial over ``F_q``."""
        return Polynomial(self.field, list(reversed(self.b)) + [1])

    def h_over(self, field: FieldDesc) -> Polynomial:
        """The quintic with coefficients lifted into an extension."""
        return self.h.lift(field)

    def b_text(self) -> str:
        """Comma-separated coefficient texts ``b1,...,b5``."""
        return ",".join(c.to_text() for c in self.b)

    def __str__(self) -> str:
        return f"Y^2 = {self.h} over F_{self.q}"


@dataclass(frozen=True)
class CurvePoint:
    """Affine point ``(x, y)``; ``x is None`` stands for the point at infinity."""

    x: Optional[FieldElement] = None
    y: Optional[FieldElement] = None

    @property
    def is_infinity(self) -> bool:  # noqa: D102
        return self.x is None

    def __neg__(self) -> "CurvePoint":
        if self.is_infinity:
            return self
        return CurvePoint(self.x, -self.y)


@dataclass(frozen=True)
class CharPoly:
    """``chi(T) = T^4 + s1 T^3 + s2 T^2 + s1 q T + q^2``."""

    q: int
    s1: int
    s2: int

    def coefficients(self) -> List[int]:
        """Integer coefficients, constant term first."""
        return [self.q**2, self.s1 * self.q, self.s2, self.s1, 1]

    def evaluate(self, t: int) -> int:  # noqa: D102
        return sum(c * t**i for i, c in enumerate(self.coefficients()))

    def as_expr(self) -> sympy.Expr:  # noqa: D102
        return sum(c * T**i for i, c in enumerate(self.coefficients()))

    def __str__(self) -> str:
        return (
            f"T^4 + ({self.s1})T^3 + ({self.s2})T^2 + ({self.s1 * self.q})T + {self.q ** 2}"
        )


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Outcome of :func:`charpoly_irreducible`; truthy when irreducible.

    ``factor`` is a monic integer factor (constant term first) witnessing
    reducibility.
    """

    irreducible: bool
    factor: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.irreducible


def make_curve(fd: FieldDesc, b: Sequence) -> CurveParams:
    """Validate ``b1..b5`` and return the curve.

    ``h`` must be squarefree. When ``h' = 0`` (only possible for
    ``h = X^5 + c`` in characteristic 5) the quintic is a fifth power and is
    rejected without computing a gcd.
    """
    if len(b) != 5:
        raise ValueError(f"a genus-2 quintic needs 5 coefficients, got {len(b)}")
    curve = CurveParams(fd, tuple(fd(c) for c in b))
    h = curve.h
    derivative = h.derivative()
    if derivative.is_zero():
        raise SingularCurve(f"{h} has zero derivative over {fd}")
    common = poly_gcd(h, derivative)
    if common.degree() > 0:
        raise SingularCurve(f"{h} shares the factor {common} with its derivative")
    return curve


def random_curve(fd: FieldDesc, rng) -> CurveParams:
    """Draw coefficients until the quintic is squarefree."""
    while True:
        try:
            return make_curve(fd, [fd.random_element(rng) for _ in range(5)])
        except SingularCurve:
            continue


def _squares(field: FieldDesc) -> set:
    return {(x * x).value for x in enumerate_field(field, budget=field.cardinality)}


def count_points(
    c: CurveParams, n: int, budget: int = FIELD_ENUMERATION_BUDGET
) -> int:
    """Return ``|C(F_{q^n})|``, the point at infinity included."""
    if n < 1:
        raise ValueError(f"extension degree must be positive, got {n}")
    size = c.q**n
    if size > budget:
        raise TooLarge("point count", size, budget)
    field = c.field.extend(n)
    h = c.h_over(field)
    squares = _squares(field)
    total = 1
    for x in enumerate_field(field, budget):
        value = h(x)
        if value.is_zero():
            total += 1
        elif value.value in squares:
            total += 2
    return total


def curve_points(c: CurveParams, field: FieldDesc) -> List[CurvePoint]:
    """All affine points over ``field`` in canonical ``x`` order."""
    h = c.h_over(field)
    points = []
    for x in enumerate_field(field):
        y = h(x).sqrt()
        if y is None:
            continue
        points.append(CurvePoint(x, y))
        if not y.is_zero():
            points.append(CurvePoint(x, -y))
    return points


def hasse_weil_holds(q: int, n: int, count: int) -> bool:
    """Exact check of ``| count - (q^n + 1) | <= 4 q^(n/2)``."""
    return (count - q**n - 1) ** 2 <= 16 * q**n


def char_poly(c: CurveParams, budget: int = FIELD_ENUMERATION_BUDGET) -> CharPoly:
    """Frobenius characteristic polynomial from counts over ``F_q`` and ``F_{q^2}``."""
    q = c.q
    n1 = count_points(c, 1, budget)
    n2 = count_points(c, 2, budget)
    s1 = n1 - q - 1
    numerator = s1 * s1 - q * q - 1 + n2
    if numerator % 2:
        raise NonIntegralS2(f"odd numerator {numerator} for s2 (counts {n1}, {n2})")
    cp = CharPoly(q, s1, numerator // 2)
    logger.debug(f"{c}: counts {n1}, {n2} give {cp}")
    return cp


def power_sums(cp: CharPoly, n: int) -> List[int]:
    """``sum tau_i^k`` for ``k = 1..n`` by Newton's identities."""
    e = [1, -cp.s1, cp.s2, -cp.s1 * cp.q, cp.q**2]
    sums: List[int] = []
    for k in range(1, n + 1):
        total = 0
        for i in range(1, min(k, 4) + 1):
            sign = 1 if i % 2 else -1
            if i < k:
                total += sign * e[i] * sums[k - i - 1]
            else:
                total += sign * k * e[i]
        sums.append(total)
    return sums


def points_from_charpoly(cp: CharPoly, n: int) -> int:
    """``|C(F_{q^n})| = q^n + 1 - sum tau_i^n``."""
    return cp.q**n + 1 - power_sums(cp, n)[-1]


def jacobian_order(cp: CharPoly, n: int) -> int:
    """``prod (1 - tau_i^n)`` as the integer resultant ``Res(T^n - 1, chi)``."""
    if n < 1:
        raise ValueError(f"extension degree must be positive, got {n}")
    order = int(sympy.resultant(T**n - 1, cp.as_expr(), T))
    if n == 1 and order != cp.evaluate(1):
        raise InvariantFailure(f"resultant {order} differs from chi(1) = {cp.evaluate(1)}")
    return order


def order_within_bounds(q: int, n: int, order: int) -> bool:
    """``(q^(n/2) - 1)^4 <= order <= (q^(n/2) + 1)^4``, decided exactly."""
    root = sympy.sqrt(sympy.Integer(q) ** n)
    return bool((root - 1) ** 4 <= order) and bool(order <= (root + 1) ** 4)


def charpoly_irreducible(cp: CharPoly) -> IrreducibilityVerdict:
    """Decide irreducibility of ``chi`` over the integers by finite search.

    A monic quartic with integer coefficients is reducible iff it has an
    integer root (a divisor of ``q^2``) or splits into two monic integer
    quadratics ``(T^2 + aT + b)(T^2 + cT + d)`` with ``bd = q^2``.
    """
    q, s1, s2 = cp.q, cp.s1, cp.s2
    divisors = sympy.divisors(q * q)
    for d in divisors:
        for root in (d, -d):
            if cp.evaluate(root) == 0:
                return IrreducibilityVerdict(False, (-root, 1))
    for b in divisors + [-d for d in divisors]:
        d = q * q // b
        for a, c in _quadratic_pairs(q, s1, s2, b, d):
            return IrreducibilityVerdict(False, (b, a, 1))
    return IrreducibilityVerdict(True)


def _quadratic_pairs(q: int, s1: int, s2: int, b: int, d: int):
    # a + c = s1, ad + bc = s1 q, b + d + ac = s2
    if d != b:
        numerator = s1 * (q - b)
        if numerator % (d - b):
            return
        a = numerator // (d - b)
        c = s1 - a
        if b + d + a * c == s2:
            yield a, c
        return
    if s1 * (q - b) != 0:
        return
    product = s2 - 2 * b
    discriminant = s1 * s1 - 4 * product
    if discriminant < 0:
        return
    root = sympy.integer_nthroot(discriminant, 2)
    if not root[1] or (s1 + root[0]) % 2:
        return
    a = (s1 + root[0]) // 2
    yield a, s1 - a


def root_moduli_ok(cp: CharPoly, tolerance: float = ROOT_MODULUS_TOLERANCE) -> bool:
    """Numeric diagnostic that every root of ``chi`` has ``|tau|^2 = q``."""
    roots = sympy.Poly(cp.as_expr(), T).nroots(n=30)
    ok = all(
        abs(abs(complex(r)) ** 2 / cp.q - 1) <= tolerance for r in roots
    )
    if not ok:
        logger.warning(f"roots of {cp} do not all have modulus sqrt({cp.q})")
    return ok


def curve_info(c: CurveParams, max_n: int) -> List[Dict]:
    """Rows describing the curve over ``F_{q^n}`` for ``n = 1..max_n``."""
    cp = char_poly(c)
    verdict = charpoly_irreducible(cp)
    rows = []
    for n in range(1, max_n + 1):
        rows.append(
            {
                "q": c.q,
                "b": c.b_text(),
                "n": n,
                "points": points_from_charpoly(cp, n),
                "s1": cp.s1,
                "s2": cp.s2,
                "charpoly": str(cp),
                "irreducible": verdict.irreducible,
                "factor": "" if verdict.factor is None else str(verdict.factor),
                "jacobian_order": jacobian_order(cp, n),
            }
        )
    return rows
