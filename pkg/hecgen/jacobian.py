# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Group arithmetic on ``J_C(F_{q^n})`` in Mumford representation.

A reduced divisor is a pair ``[u, v]`` with ``u`` monic, ``deg v < deg u <= 2``
and ``u | h - v^2``. Addition is Cantor's composition followed by reduction.
Divisors with coefficients in ``F_{q^n}`` are exactly the classes defined over
``F_{q^n}``, so the coefficient test stands in for Galois stability.
"""

import logging
import math
import random
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import sympy

from hecgen.config import (
    JACOBIAN_ENUMERATION_BUDGET,
    SAMPLING_RETRY_BUDGET,
    TORSION_BOUND_TWO,
)
from hecgen.curve import CharPoly, CurveParams, char_poly, curve_points, jacobian_order
from hecgen.errors import (
    CharacteristicDivides,
    CurveNotOverSubfield,
    DegreeViolation,
    FieldMismatch,
    InvariantFailure,
    NoAdmissiblePrime,
    NotMonic,
    NotOnJacobian,
    OrderViolation,
    SamplingExhausted,
    TooLarge,
)
from hecgen.ff import FieldDesc, enumerate_field, frobenius_power
from hecgen.poly import Polynomial, poly_gcd, poly_xgcd

logger = logging.getLogger("hecgen")


class Jacobian:
    """``J_C`` over a tower extension ``field`` of the curve's base field."""

    def __init__(self, curve: CurveParams, field: FieldDesc):
        if curve.q not in field.level_cardinalities:
            raise FieldMismatch(f"{field} does not contain F_{curve.q}")
        self.curve = curve
        self.field = field
        self.n = round(math.log(field.cardinality, curve.q))
        self.h = curve.h_over(field)
        self._x = Polynomial.x(field)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Jacobian)
            and self.curve == other.curve
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.curve, self.field))

    def __repr__(self) -> str:
        return f"J({self.curve}) over {self.field}"

    def identity(self) -> "MumfordDivisor":  # noqa: D102
        return MumfordDivisor(
            self, Polynomial.constant(self.field, 1), Polynomial(self.field)
        )

    def poly(self, coeffs: Sequence) -> Polynomial:
        """Polynomial over the working field from little-endian coefficients."""
        return Polynomial(self.field, coeffs)

    def point_divisor(self, x, y) -> "MumfordDivisor":
        """The weight-1 divisor ``P - O`` for ``P = (x, y)``."""
        return make_divisor(self.poly([-self.field(x), 1]), self.poly([y]), self)


@lru_cache(maxsize=None)
def get_jacobian(curve: CurveParams, n: int) -> Jacobian:
    """``J_C(F_{q^n})`` with the default extension modulus."""
    return Jacobian(curve, curve.field.extend(n))


class MumfordDivisor:
    """Reduced divisor ``[u, v]``; build validated instances with :func:`make_divisor`."""

    __slots__ = ("jacobian", "u", "v")

    def __init__(self, jacobian: Jacobian, u: Polynomial, v: Polynomial):
        self.jacobian = jacobian
        self.u = u
        self.v = v

    @property
    def weight(self) -> int:  # noqa: D102
        return self.u.degree()

    def is_identity(self) -> bool:  # noqa: D102
        return self.u.degree() == 0

    def coordinate(self, tag: str):
        """Mumford coordinate ``u1``, ``u0``, ``v1`` or ``v0``."""
        polynomial = self.u if tag[0] == "u" else self.v
        return polynomial.coefficient(int(tag[1]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __add__(self, other: "MumfordDivisor") -> "MumfordDivisor":
        return add(self, other)

    def __neg__(self) -> "MumfordDivisor":
        return negate(self)

    def __sub__(self, other: "MumfordDivisor") -> "MumfordDivisor":
        return add(self, negate(other))

    def __mul__(self, m: int) -> "MumfordDivisor":
        return scalar_mul(self, m)

    __rmul__ = __mul__

    def sort_key(self) -> Tuple:
        """Canonical order: weight, then ``u`` and ``v`` coefficient indices."""
        return (
            self.weight,
            tuple(c.index() for c in reversed(self.u.coeffs)),
            tuple(self.v.coefficient(i).index() for i in (1, 0)),
        )

    def to_text(self) -> str:
        """``[u2,u1,u0 | v1,v0]@weight``."""
        u = ",".join(self.u.coefficient(i).to_text() for i in (2, 1, 0))
        v = ",".join(self.v.coefficient(i).to_text() for i in (1, 0))
        return f"[{u} | {v}]@{self.weight}"

    def __repr__(self) -> str:
        return self.to_text()


def parse_divisor(text: str, jacobian: Jacobian) -> MumfordDivisor:
    """Inverse of :meth:`MumfordDivisor.to_text`."""
    body, _, weight = text.strip().partition("@")
    u_text, _, v_text = body.strip().strip("[]").partition("|")
    field = jacobian.field
    u = [field(c.strip()) for c in u_text.split(",")]
    v = [field(c.strip()) for c in v_text.split(",")]
    divisor = make_divisor(
        jacobian.poly(list(reversed(u))), jacobian.poly(list(reversed(v))), jacobian
    )
    if weight and int(weight) != divisor.weight:
        raise DegreeViolation(f"'{text}' declares weight {weight}, found {divisor.weight}")
    return divisor


def make_divisor(u: Polynomial, v: Polynomial, context) -> MumfordDivisor:
    """Validate ``[u, v]`` against a :class:`Jacobian` or a :class:`CurveParams`."""
    jacobian = context if isinstance(context, Jacobian) else Jacobian(context, u.field)
    u = Polynomial(jacobian.field, u.coeffs)
    v = Polynomial(jacobian.field, v.coeffs)
    if not u.is_monic():
        raise NotMonic(f"u = {u} is not monic")
    if u.degree() > 2 or v.degree() >= u.degree():
        raise DegreeViolation(f"need deg v < deg u <= 2, got u = {u}, v = {v}")
    if not ((jacobian.h - v * v) % u).is_zero():
        raise NotOnJacobian(f"u = {u} does not divide h - v^2 for v = {v}")
    return MumfordDivisor(jacobian, u, v)


def _same_group(d1: MumfordDivisor, d2: MumfordDivisor) -> Jacobian:
    if d1.jacobian is not d2.jacobian and d1.jacobian != d2.jacobian:
        raise FieldMismatch(f"{d1.jacobian} and {d2.jacobian} differ")
    return d1.jacobian


def _reduce(jacobian: Jacobian, u: Polynomial, v: Polynomial) -> MumfordDivisor:
    while u.degree() > 2:
        u = (jacobian.h - v * v) // u
        v = (-v) % u
    u = u.monic()
    return MumfordDivisor(jacobian, u, v % u)


def add(d1: MumfordDivisor, d2: MumfordDivisor) -> MumfordDivisor:
    """Cantor composition with ``d = gcd(u1, u2, v1 + v2)`` and reduction."""
    jacobian = _same_group(d1, d2)
    if d1.is_identity():
        return d2
    if d2.is_identity():
        return d1
    u1, v1, u2, v2 = d1.u, d1.v, d2.u, d2.v
    g1, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(g1, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2) // (d * d)
    v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + jacobian.h)) // d) % u
    return _reduce(jacobian, u, v)


def negate(d: MumfordDivisor) -> MumfordDivisor:
    """``[u, -v mod u]``."""
    return MumfordDivisor(d.jacobian, d.u, (-d.v) % d.u)


def scalar_mul(d: MumfordDivisor, m: int) -> MumfordDivisor:
    """``m * d`` by double-and-add."""
    if m < 0:
        return scalar_mul(negate(d), -m)
    result = d.jacobian.identity()
    addend = d
    while m:
        if m & 1:
            result = add(result, addend)
        addend = add(addend, addend)
        m >>= 1
    return result


def frobenius_divisor(d: MumfordDivisor, j: int) -> MumfordDivisor:
    """``sigma^j(d)``: every coefficient of ``u`` and ``v`` raised to ``q^j``."""
    jacobian = d.jacobian
    q = jacobian.curve.q
    if q not in jacobian.field.level_cardinalities or not all(
        b.in_subfield(q) for b in jacobian.curve.b
    ):
        raise CurveNotOverSubfield(f"{jacobian.curve} is not defined over F_{q}")
    if j == 0 or d.is_identity():
        return d

    def power(c):
        return frobenius_power(c, q, j)

    return MumfordDivisor(
        jacobian, d.u.map_coefficients(power), d.v.map_coefficients(power)
    )


def charpoly_annihilates(d: MumfordDivisor, cp: CharPoly) -> bool:
    """Whether ``sigma^4 + s1 sigma^3 + s2 sigma^2 + s1 q sigma + q^2`` kills ``d``."""
    images = [d]
    for _ in range(4):
        images.append(frobenius_divisor(images[-1], 1))
    total = images[4]
    for coefficient, image in zip(
        (cp.s1, cp.s2, cp.s1 * cp.q, cp.q**2), (images[3], images[2], images[1], d)
    ):
        total = add(total, scalar_mul(image, coefficient))
    return total.is_identity()


def factor_order(order: int) -> List[Tuple[int, int]]:
    """Prime factorisation ``[(prime, exponent), ...]`` in increasing order."""
    return sorted(sympy.factorint(order).items())


def element_order(
    d: MumfordDivisor, order: int, factors: Optional[Sequence[Tuple[int, int]]] = None
) -> int:
    """Exact order of ``d`` given a multiple ``order`` that annihilates it."""
    if not scalar_mul(d, order).is_identity():
        raise OrderViolation(f"{order} * {d} is not the identity")
    if factors is None:
        factors = factor_order(order)
    for prime, exponent in factors:
        for _ in range(exponent):
            if scalar_mul(d, order // prime).is_identity():
                order //= prime
            else:
                break
    return order


def random_divisor(jacobian: Jacobian, rng: random.Random) -> MumfordDivisor:
    """Draw a weight-2 divisor with a random monic ``u``.

    ``v`` is a square root of ``h`` modulo ``u``: interpolated from the two
    roots when ``u`` splits, and computed in ``F[X]/(u)`` when ``u`` is
    irreducible. Repeated roots and non-squares are redrawn, so the result is
    not uniform on the group.
    """
    field = jacobian.field
    h = jacobian.h
    while True:
        a, b = field.random_element(rng), field.random_element(rng)
        u = jacobian.poly([b, a, 1])
        discriminant = a * a - 4 * b
        if discriminant.is_zero():
            continue
        root = discriminant.sqrt()
        if root is not None:
            x1, x2 = (-a + root) / 2, (-a - root) / 2
            y1, y2 = h(x1).sqrt(), h(x2).sqrt()
            if y1 is None or y2 is None:
                continue
            if rng.randrange(2):
                y1 = -y1
            if rng.randrange(2):
                y2 = -y2
            slope = (y1 - y2) / (x1 - x2)
            v = jacobian.poly([y1 - slope * x1, slope])
        else:
            # u splits over the quadratic extension into conjugate roots
            quadratic = field.extend(2)
            x1 = (-quadratic.lift(a) + quadratic.lift(discriminant).sqrt()) / 2
            y1 = h.lift(quadratic)(x1).sqrt()
            if y1 is None:
                continue
            if rng.randrange(2):
                y1 = -y1
            x2 = frobenius_power(x1, field.cardinality, 1)
            y2 = frobenius_power(y1, field.cardinality, 1)
            slope = (y1 - y2) / (x1 - x2)
            v = jacobian.poly(
                [quadratic.to_coefficients(c)[0] for c in (y1 - slope * x1, slope)]
            )
        return make_divisor(u, v, jacobian)


class PrimeOrderElement(NamedTuple):
    """Output of :func:`find_prime_order_element`."""

    divisor: MumfordDivisor
    ell: int
    cofactor: int
    group_order: int


def find_prime_order_element(
    c: CurveParams,
    n: int,
    rng_seed: int,
    retries: int = SAMPLING_RETRY_BUDGET,
) -> PrimeOrderElement:
    """Divisor of the largest prime order ``ell != p`` dividing ``|J_C(F_{q^n})|``."""
    jacobian = get_jacobian(c, n)
    group_order = jacobian_order(char_poly(c), n)
    factors = dict(factor_order(group_order))
    admissible = [prime for prime in factors if prime != c.p]
    if not admissible:
        raise NoAdmissiblePrime(f"|J| = {group_order} has no prime factor other than {c.p}")
    ell = max(admissible)
    cofactor = group_order // ell
    # kills everything but the ell-primary part, which need not be cyclic
    clearing = group_order // ell ** factors[ell]
    rng = random.Random(rng_seed)
    for _ in range(retries):
        candidate = scalar_mul(random_divisor(jacobian, rng), clearing)
        if candidate.is_identity():
            continue
        multiple = scalar_mul(candidate, ell)
        while not multiple.is_identity():
            candidate, multiple = multiple, scalar_mul(multiple, ell)
        if frobenius_divisor(candidate, 1).is_identity():
            raise InvariantFailure(f"Frobenius image of {candidate} is the identity")
        logger.info(f"found divisor of prime order {ell} (cofactor {cofactor})")
        return PrimeOrderElement(candidate, ell, cofactor, group_order)
    raise SamplingExhausted(f"no element of order {ell} after {retries} draws")


def _check_budget(jacobian: Jacobian, budget: int) -> None:
    bound = (math.sqrt(jacobian.field.cardinality) + 1) ** 4
    if bound > budget:
        raise TooLarge("Jacobian enumeration", int(bound), budget)


def theta_elements(jacobian: Jacobian) -> List[MumfordDivisor]:
    """The identity followed by every ``P - O`` over the working field."""
    points = curve_points(jacobian.curve, jacobian.field)
    return [jacobian.identity()] + [jacobian.point_divisor(p.x, p.y) for p in points]


def _weight_two(jacobian: Jacobian) -> Iterator[MumfordDivisor]:
    field = jacobian.field
    elements = list(enumerate_field(field))
    for u1 in elements:
        for u0 in elements:
            u = jacobian.poly([u0, u1, 1])
            remainder = jacobian.h % u
            alpha, beta = remainder.coefficient(1), remainder.coefficient(0)
            # v^2 mod u = (2 v1 v0 - v1^2 u1) X + (v0^2 - v1^2 u0)
            for v1 in elements:
                if v1.is_zero():
                    if not alpha.is_zero():
                        continue
                    root = beta.sqrt()
                    if root is None:
                        continue
                    roots = [root] if root.is_zero() else [root, -root]
                    for v0 in roots:
                        yield MumfordDivisor(jacobian, u, jacobian.poly([v0]))
                    continue
                v0 = (alpha + v1 * v1 * u1) / (2 * v1)
                if v0 * v0 - v1 * v1 * u0 == beta:
                    yield MumfordDivisor(jacobian, u, jacobian.poly([v0, v1]))


def enumerate_jacobian(
    c: CurveParams, n: int, budget: int = JACOBIAN_ENUMERATION_BUDGET
) -> List[MumfordDivisor]:
    """Every element of ``J_C(F_{q^n})`` once: ``O``, weight 1, then weight 2."""
    jacobian = get_jacobian(c, n)
    _check_budget(jacobian, budget)
    return theta_elements(jacobian) + list(_weight_two(jacobian))


def two_torsion_scan(jacobian: Jacobian) -> int:
    """Count ``D`` with ``2D = O``: the ``[u, 0]`` with ``u | h``, ``deg u <= 2``.

    With ``r`` roots of ``h`` and ``s`` irreducible quadratic factors over the
    working field the count is ``1 + r + r(r-1)/2 + s``.
    """
    field = jacobian.field
    h = jacobian.h
    x = Polynomial.x(field)
    frobenius = x.pow_mod(field.cardinality, h)
    roots = poly_gcd(h, frobenius - x).degree()
    frobenius2 = frobenius.pow_mod(field.cardinality, h)
    quadratic = (poly_gcd(h, frobenius2 - x).degree() - roots) // 2
    count = 1 + roots + roots * (roots - 1) // 2 + quadratic
    if count > TORSION_BOUND_TWO:
        raise InvariantFailure(
            f"{count} points of order dividing 2, at most {TORSION_BOUND_TWO} exist"
        )
    return count


def count_torsion(
    c: CurveParams, m: int, n: int, budget: int = JACOBIAN_ENUMERATION_BUDGET
) -> int:
    """Number of ``D`` in ``J_C(F_{q^n})`` with ``mD = O``."""
    if m < 1:
        raise ValueError(f"torsion level must be positive, got {m}")
    if math.gcd(m, c.p) != 1:
        raise CharacteristicDivides(f"gcd({m}, {c.p}) != 1")
    if m == 1:
        return 1
    jacobian = get_jacobian(c, n)
    if m == 2:
        return two_torsion_scan(jacobian)
    return sum(
        1 for d in enumerate_jacobian(c, n, budget) if scalar_mul(d, m).is_identity()
    )


def theta_translate_overlap(d: MumfordDivisor, theta: Sequence[MumfordDivisor]) -> int:
    """``|(Theta + d) ∩ Theta|`` over the working field."""
    return sum(1 for t in theta if is_theta(add(t, d)))


def is_theta(d: MumfordDivisor) -> bool:
    """Whether ``d`` lies on ``Theta``, the classes of weight at most 1."""
    return d.weight <= 1
