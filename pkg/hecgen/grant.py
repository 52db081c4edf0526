# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Grant's embedding of ``J_C`` into ``P^8``.

Coordinates are ordered ``(z0 : z11 : z12 : z22 : z111 : z112 : z122 : z222 : z)``.
The affine part ``U = J_C \\ Theta`` is cut out by ``f1, ..., f6``; the
projective closure by the homogenisations of ``f1, ..., f13`` in ``Z0``.
The polynomials are kept in one sympy table and compiled per curve into
term lists evaluated over :class:`~hecgen.ff.FieldElement`.
"""

import itertools
import logging
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from hecgen.config import (
    GRANT_ENUMERATION_BUDGET,
    INTERSECTION_LEMMA_BOUND,
    INTERSECTION_PAIR_BUDGET,
    THETA_TRANSLATE_BOUND,
)
from hecgen.curve import CurveParams, char_poly, count_points, jacobian_order
from hecgen.errors import (
    ConventionUnresolved,
    InvariantFailure,
    NotInU,
    QFormVanishes,
    TooLarge,
    WrongWeight,
)
from hecgen.ff import FieldDesc, FieldElement, enumerate_field
from hecgen.jacobian import (
    Jacobian,
    MumfordDivisor,
    add,
    enumerate_jacobian,
    get_jacobian,
    make_divisor,
    negate,
    theta_elements,
    theta_translate_overlap,
)

logger = logging.getLogger("hecgen")

COORDINATES = ("z0", "z11", "z12", "z22", "z111", "z112", "z122", "z222", "z")
"""Names of the nine projective coordinates in order."""

EVEN_COORDINATES = ("z11", "z12", "z22")
ODD_COORDINATES = ("z111", "z112", "z122", "z222")

Z0, Z11, Z12, Z22, Z111, Z112, Z122, Z222, Z = sympy.symbols(
    "Z0 Z11 Z12 Z22 Z111 Z112 Z122 Z222 Z"
)
B1, B2, B3, B4, B5 = sympy.symbols("b1 b2 b3 b4 b5")
GENERATORS = (Z0, Z11, Z12, Z22, Z111, Z112, Z122, Z222, Z)
PARAMETERS = (B1, B2, B3, B4, B5)

DEFINING_EQUATIONS = (
    # f0
    Z**2 + Z11**2 * Z12 - B1 * Z11**2 * Z22 + B2 * Z11 * Z12 * Z22
    - B3 * Z11 * Z22**2 + B4 * Z12 * Z22**2 - B5 * Z22**3
    + 2 * B1 * Z * Z11 - 2 * B2 * Z * Z12 + 2 * B3 * Z * Z22
    + (B3 - B1 * B2) * Z11 * Z12 + (B2**2 - B1 * B3) * Z11 * Z22
    + (B1 * B4 - B2 * B3 - B5) * Z12 * Z22 - B1 * B5 * Z22**2
    + 2 * (B1 * B3 - B2**2) * Z + (B1 * B4 - B5) * Z11
    + B2 * (B2**2 - B1 * B3) * Z12 + (B3 * B4 - B2 * B5) * Z22
    + B1 * B3 * B4 - B2**2 * B4 - B3 * B5,
    # f1
    2 * Z - Z11 * Z22 + Z12**2 - B2 * Z12 + B4,
    # f2
    Z112 - Z222 * Z12 + Z122 * Z22,
    # f3
    Z111 + Z222 * Z11 + Z122 * Z12 - 2 * Z112 * Z22 - 2 * B1 * Z112 + B2 * Z122,
    # f4
    Z122**2 - Z11 * Z22**2 + 2 * Z * Z22 + Z11 * Z12 - B1 * Z11 * Z22
    - B2 * Z12 * Z22 + 2 * B1 * Z - B1 * B2 * Z12 + B4 * Z22 + B1 * B4 - B5,
    # f5
    Z222**2 - Z22**3 - Z12 * Z22 - B1 * Z22**2 - Z11 - B2 * Z22 - B3,
    # f6
    Z122 * Z222 - Z12 * Z22**2 + Z - B2 * Z12 - B1 * Z12 * Z22,
    # f7
    Z111**2 - Z11**3 - B3 * Z11**2 - B4 * Z11 * Z12 + 3 * B5 * Z11 * Z22
    + 2 * B5 * Z + (4 * B1 * B5 - B2 * B4) * Z11 - 3 * B2 * B5 * Z12
    + (4 * B3 * B5 - B4**2) * Z22
    + 4 * B1 * B3 * B5 + B4 * B5 - B1 * B4**2 - B2**2 * B5,
    # f8
    -Z111 * Z112 + B1 * Z111 * Z122 - B2 * Z112 * Z122 + B3 * Z112 * Z222
    - B4 * Z122 * Z222 + B5 * Z222**2 - Z**2 - B1 * Z * Z11 + B2 * Z * Z12
    - B3 * Z * Z22 - B3 * Z11 * Z12 + B1 * B3 * Z11 * Z22
    - (B5 + B1 * B4) * Z12 * Z22 + 2 * B1 * B5 * Z22**2
    - 2 * (B1 * B3 + B4) * Z
    + (2 * B2 * B4 + B1 * B2 * B3 + B1 * B5 - B3**2 - B1**2 * B4) * Z12
    - 2 * B5 * Z11 + 2 * B5 * (B1**2 - B2) * Z22
    + B1 * B2 * B5 - B1 * B3 * B4 - 2 * B3 * B5,
    # f9
    Z112**2 - Z111 * Z122 + Z11 * Z - B3 * Z11 * Z22 + 2 * B4 * Z12 * Z22
    - 3 * B5 * Z22**2 + 2 * B3 * Z + (B1 * B4 - B2 * B3 - B5) * Z12
    - 2 * B1 * B5 * Z22 + B3 * B4 - B2 * B5,
    # f10
    Z111 * Z222 - Z112 * Z122 - 2 * Z * Z12 + Z11**2 - 2 * B1 * Z11 * Z12
    + 3 * B2 * Z11 * Z22 - 2 * B3 * Z12 * Z22 + B4 * Z22**2 - 5 * B2 * Z
    + B3 * Z11 + (3 * B2**2 - 2 * B1 * B3) * Z12 + (B1 * B4 - B5) * Z22
    - 2 * B2 * B4,
    # f11
    Z122**2 - Z112 * Z222 + Z22 * Z + 2 * Z11 * Z12 - B1 * Z11 * Z22
    + 2 * B1 * Z + (B3 - B1 * B2) * Z12 + B1 * B4 - B5,
    # f12
    Z111 * Z12 - Z112 * Z11 - B4 * Z122 + 2 * B5 * Z222,
    # f13
    2 * Z122 * Z11 - Z112 * Z12 - Z111 * Z22 - B2 * Z112 + 2 * B3 * Z122
    - B4 * Z222,
)
"""Affine ``f0, ..., f13`` in ``Z11 .. Z`` with symbolic curve coefficients."""

AFFINE_EQUATIONS = range(1, 7)
"""Indices of the equations cutting out ``U``."""

PROJECTIVE_EQUATIONS = range(1, 14)
"""Indices of the equations whose homogenisations cut out ``J_C``."""

Term = Tuple[Tuple[int, ...], FieldElement]


def defining_polynomials(homogeneous: bool = False) -> List[sympy.Poly]:
    """``f0, ..., f13`` as polynomials in ``Z0, Z11, ..., Z``.

    Coefficients live in ``ZZ[b1, ..., b5]``. With ``homogeneous`` each
    polynomial is homogenised in ``Z0``.
    """
    polys = [sympy.Poly(f, *GENERATORS) for f in DEFINING_EQUATIONS]
    if homogeneous:
        polys = [p.homogenize(Z0) for p in polys]
    return polys


def _compile(poly: sympy.Poly, b: Sequence[FieldElement]) -> List[Term]:
    fd = b[0].field
    terms = []
    for monomial, coefficient in poly.terms():
        value = fd.zero()
        for powers, integer in sympy.Poly(coefficient, *PARAMETERS).terms():
            product = fd.from_int(int(integer))
            for base, power in zip(b, powers):
                if power:
                    product = product * base**power
            value = value + product
        if not value.is_zero():
            terms.append((monomial, value))
    return terms


@lru_cache(maxsize=None)
def _compiled(b: Tuple[FieldElement, ...], homogeneous: bool) -> Tuple[Tuple[Term, ...], ...]:
    return tuple(
        tuple(_compile(poly, b)) for poly in defining_polynomials(homogeneous)
    )


def _evaluate(terms: Iterable[Term], point: Sequence[FieldElement]) -> FieldElement:
    total = point[0].field.zero()
    for monomial, coefficient in terms:
        value = coefficient
        for coordinate, power in zip(point, monomial):
            if power:
                value = value * coordinate**power
        total = total + value
    return total


def _lift_b(c: CurveParams, fd: FieldDesc) -> Tuple[FieldElement, ...]:
    return tuple(fd(b) for b in c.b)


def evaluate_all(
    z: Sequence[FieldElement], c: CurveParams
) -> List[FieldElement]:
    """Residues of ``f0, ..., f13`` at an affine point ``(z11, ..., z)``."""
    point = (z[0].field.one(),) + tuple(z)
    return [_evaluate(terms, point) for terms in _compiled(_lift_b(c, z[0].field), False)]


def evaluate_homogeneous(
    point: "GrantPoint", c: CurveParams
) -> List[FieldElement]:
    """Residues of ``f0^h, ..., f13^h`` at a projective point."""
    fd = point.field
    return [_evaluate(terms, point.coords) for terms in _compiled(_lift_b(c, fd), True)]


@dataclass(frozen=True)
class GrantPoint:
    """Point of ``P^8`` whose first nonzero coordinate is 1."""

    coords: Tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.coords) != len(COORDINATES):
            raise ValueError(f"a Grant point has 9 coordinates, got {len(self.coords)}")
        lead = next((c for c in self.coords if not c.is_zero()), None)
        if lead is None:
            raise ValueError("all coordinates of a projective point are zero")
        if lead != lead.field.one():
            inverse = lead.inverse()
            object.__setattr__(self, "coords", tuple(c * inverse for c in self.coords))

    @classmethod
    def from_affine(cls, z: Sequence[FieldElement]) -> "GrantPoint":
        """``(1 : z11 : ... : z)``."""
        return cls((z[0].field.one(),) + tuple(z))

    @property
    def field(self) -> FieldDesc:  # noqa: D102
        return self.coords[0].field

    def __getitem__(self, name: str) -> FieldElement:
        return self.coords[COORDINATES.index(name)]

    def is_affine(self) -> bool:  # noqa: D102
        return not self.coords[0].is_zero()

    def affine(self) -> Tuple[FieldElement, ...]:
        """The eight affine coordinates; requires ``z0 = 1``."""
        if not self.is_affine():
            raise NotInU(f"{self} lies on Theta")
        return self.coords[1:]

    def negate(self) -> "GrantPoint":
        """Flip the odd coordinates ``z111 .. z222``."""
        return GrantPoint(
            tuple(
                -c if name in ODD_COORDINATES else c
                for name, c in zip(COORDINATES, self.coords)
            )
        )

    def to_text(self) -> str:  # noqa: D102
        return ":".join(c.to_text() for c in self.coords)

    def __str__(self) -> str:
        return f"({self.to_text()})"


def iota_special(d: MumfordDivisor) -> GrantPoint:
    """Image of a divisor of weight at most 1.

    ``P - O`` goes to ``(0 : 0 : 0 : 0 : -x^3 : x^2 : -x : 1 : -y)``; with
    ``-x^2`` in the ``z112`` slot ``f8^h``, ``f10^h`` and ``f11^h`` do not vanish.
    """
    fd = d.jacobian.field
    zero, one = fd.zero(), fd.one()
    if d.weight == 0:
        return GrantPoint((zero,) * 4 + (one,) + (zero,) * 4)
    if d.weight != 1:
        raise WrongWeight(f"iota_special needs weight <= 1, got {d.weight}")
    x = -d.u.coefficient(0)
    y = d.v.coefficient(0)
    return GrantPoint((zero,) * 4 + (-x * x * x, x * x, -x, one, -y))


def is_on_U(z: Sequence[FieldElement], c: CurveParams) -> bool:
    """Whether ``f1, ..., f6`` vanish at the affine point ``z``."""
    residues = evaluate_all(z, c)
    return all(residues[i].is_zero() for i in AFFINE_EQUATIONS)


def is_on_jacobian_projective(point: GrantPoint, c: CurveParams) -> bool:
    """Whether ``f1^h, ..., f13^h`` vanish at ``point``."""
    residues = evaluate_homogeneous(point, c)
    return all(residues[i].is_zero() for i in PROJECTIVE_EQUATIONS)


@dataclass(frozen=True)
class QForms:
    """The q-forms of a pair ``(Q, R)`` of affine points.

    Every form is evaluated as printed. :func:`grant_add` reads only
    ``q, q1, q2, q11, q12, q22`` and ``q222``; the other odd coordinates of
    the sum come from the defining equations.
    """

    q: FieldElement
    q1: FieldElement
    q2: FieldElement
    q11: FieldElement
    q12: FieldElement
    q22: FieldElement
    q111: FieldElement
    q112: FieldElement
    q122: FieldElement
    q222: FieldElement


def _named(point: GrantPoint) -> Dict[str, FieldElement]:
    if not point.is_affine():
        raise NotInU(f"{point} is not in the affine part")
    return dict(zip(COORDINATES, point.coords))


def q_forms(a: GrantPoint, r: GrantPoint, c: CurveParams) -> QForms:
    """Evaluate the q-forms of the addition formulas for ``(Q, R) = (a, r)``."""
    Q, R = _named(a), _named(r)
    b1, b2, b3, b4, b5 = _lift_b(c, a.field)

    def w(point, name):
        return 2 * point[name]

    def big(point):
        return 2 * point["z"] - b2 * point["z12"] + b4

    z11q, z12q, z22q = Q["z11"], Q["z12"], Q["z22"]
    z11r, z12r, z22r = R["z11"], R["z12"], R["z22"]
    w111q, w112q, w122q, w222q = (w(Q, n) for n in ODD_COORDINATES)
    w111r, w112r, w122r, w222r = (w(R, n) for n in ODD_COORDINATES)

    q = z11q - z11r + z12q * z22r - z12r * z22q
    q1 = (
        w111q - w111r + w112q * z22r - w112r * z22q
        + w122r * z12q - w122q * z12r
    )
    q2 = (
        w112q - w112r + w122q * z22r - w122r * z22q
        + w222r * z12q - w222q * z12r
    )
    q11 = (
        4 * b3 * q + 4 * b4 * (z12q - z12r) + 4 * (big(Q) * z12r)
        - 4 * (big(R) * z12q) - 8 * b5 * (z22q - z22r)
        + 2 * (w112q * w122r - w112r * w122q)
    )
    q12 = (
        4 * b3 * (z12q - z12r) + 2 * b2 * (z12q * z22r)
        - 2 * b2 * (z12r * z22q) - 4 * (z11q * z12r - z11r * z12q)
        + 2 * (big(Q) * z22r - big(R) * z22q)
        - 2 * b4 * (z22q - z22r) + w222r * w112q - w222q * w112r
    )
    q22 = (
        8 * b1 * (z12q * z22r - z12r * z22q) + 4 * b2 * z12q
        - 4 * b2 * z12r - 8 * (z11q * z22r - z11r * z22q)
        - 4 * (big(Q) - big(R))
        + 2 * (w122q * w222r - w122r * w222q)
    )
    q111 = (
        4 * b3 * q1
        + 4 * (w111q * z22q * z12r - w111r * z22r * z12q)
        + w122r * (2 * z12q * (6 * z11q - 2 * z11r + 4 * b3) - 4 * b4 * z22q)
        - w122q * (2 * z12r * (6 * z11r - 2 * z11q + 4 * b3) - 4 * b4 * z22r)
        + w112q * (z12r * (12 * z12r - 8 * z12q + 4 * b2) + 4 * b4)
        - w112r * (z12q * (12 * z12q - 8 * z12r + 4 * b2) + 4 * b4)
    )
    q112 = (
        w222q * (4 * z11q * z12r - 4 * z12r * b3 - 8 * b5)
        + w112q * (-4 * z11r + 4 * z12r * z22q + z12r * (12 * z22r + 8 * b1))
        + w112r * (4 * z11q + z12q * (-12 * z22q - 4 * z22r - 8 * b1) - 4 * b3)
        + w122q * (
            -8 * z11r * z22r - 8 * z12q * z12r - 4 * z12r * z12r
            + 4 * z22r * b3 + 4 * b4 - 4 * z12r * b2
        )
        + w122r * (
            8 * z11q * z22q + 4 * z12q * z12q + z12q * (8 * z12r + 4 * b2)
            - 4 * z22q * b3 - 4 * b4
        )
        + w112q * 4 * b3
        + w222r * (z12q * (-4 * z11r + 4 * b3) + 8 * b5)
    )
    q122 = (
        w112r * (-6 * z22q * z22q + z22q * (-2 * z22r - 4 * b1) - 2 * b2)
        + w122r * (-4 * z11q + z22q * (4 * z12r - 2 * b2) - 4 * b3)
        + w222q * (2 * z11q * z22r - 4 * z11r * z22r - 2 * z12r * z12r)
        + w112q * (2 * z22q * z22r + 6 * z22r * z22r + 4 * z22r * b1 + 2 * b2)
        + w222r * (4 * z11q * z22q - 2 * z11r * z22q + 2 * z12q * z12q)
        + w122q * (4 * z11r - 4 * z12q * z22r + 2 * z22r * b2 + 4 * b3)
        - w222q * (2 * b4 + 4 * z12r * b2)
        + w222r * (2 * b4 + 4 * z12q * b2)
    )
    q222 = (
        w222r * (-12 * z11q + 4 * z11r + z12q * (12 * z22q + 16 * b1))
        + w122r * (-8 * z12q - 8 * z12r - 12 * z22q * z22q - 16 * z22q * b1 - 8 * b2)
        + w112q * (-4 * z22q - 8 * z22r)
        + w222q * (-4 * z11q + 12 * z11r + z12r * (-12 * z22r - 16 * b1))
        + w112r * (8 * z22q + 4 * z22r)
        + w122q * (8 * z12q + 8 * z12r + 12 * z22r * z22r + 16 * z22r * b1 + 8 * b2)
    )
    return QForms(q, q1, q2, q11, q12, q22, q111, q112, q122, q222)


def grant_add(
    a: GrantPoint, r: GrantPoint, c: CurveParams, printed_z: bool = False
) -> GrantPoint:
    """``Q + R`` by the explicit addition formulas.

    ``z11, z12, z22`` and ``z222`` come from the q-forms. Then ``f1`` gives
    ``z``, ``f6`` gives ``z122`` and ``f2``, ``f3`` give ``z112``, ``z111``, as
    in :func:`enumerate_U`. When ``z222(Q + R) = 0`` the sign of ``z122`` is
    read off the Mumford sum of the divisors ``Q`` and ``R`` describe.
    ``printed_z`` reports ``z`` with ``z11^2`` in place of ``z12^2``.
    """
    forms = q_forms(a, r, c)
    if forms.q.is_zero():
        raise QFormVanishes(f"q({a}, {r}) = 0")
    fd = a.field
    b = _lift_b(c, fd)
    b2, b4 = b[1], b[3]
    Q, R = _named(a), _named(r)
    inverse = forms.q.inverse()
    r1, r2 = forms.q1 * inverse, forms.q2 * inverse
    r11, r12, r22 = forms.q11 * inverse, forms.q12 * inverse, forms.q22 * inverse
    r222 = forms.q222 * inverse

    def k(fraction: Fraction) -> FieldElement:
        return fd.from_int(fraction.numerator) / fraction.denominator

    def even(name, ri, rj, rij):
        quarter = k(Fraction(1, 4))
        return -Q[name] - R[name] + quarter * ri * rj - quarter * rij

    z11 = even("z11", r1, r1, r11)
    z12 = even("z12", r1, r2, r12)
    z22 = even("z22", r2, r2, r22)
    z222 = (
        -k(Fraction(1, 2)) * (Q["z222"] + R["z222"])
        + k(Fraction(3, 16)) * r2 * r22 - k(Fraction(1, 16)) * r222
        - k(Fraction(1, 8)) * r2**3
        + k(Fraction(3, 4)) * (Q["z22"] + R["z22"]) * r2
    )
    z122 = _z122_from_divisors(a, r, c, z12, z22) if z222.is_zero() else None
    coords = _solve_rest(fd, b, z11, z12, z22, z222, z122)
    if printed_z:
        z = k(Fraction(1, 2)) * (z11 * z22 - z11 * z11 + b2 * z12 - b4)
        coords = coords[:-1] + (z,)
    return GrantPoint.from_affine(coords)


def affine_divisor(point: GrantPoint, jacobian: Jacobian) -> MumfordDivisor:
    """``[X^2 - z22 X - z12, z222 X + z122]`` for a point of ``U``.

    ``f4, f5, f6`` say exactly that ``v^2 = h`` modulo ``u``.
    """
    z = _named(point)
    return make_divisor(
        jacobian.poly([-z["z12"], -z["z22"], 1]),
        jacobian.poly([z["z122"], z["z222"]]),
        jacobian,
    )


def _z122_from_divisors(a, r, c, z12, z22) -> FieldElement:
    jacobian = Jacobian(c, a.field)
    total = add(affine_divisor(a, jacobian), affine_divisor(r, jacobian))
    if total.weight != 2:
        raise NotInU(f"{a} + {r} lies on Theta")
    if total.u.coefficient(0) != -z12 or total.u.coefficient(1) != -z22:
        raise InvariantFailure(
            f"q-form sum ({z12}, {z22}) disagrees with the Mumford sum {total}"
        )
    return total.v.coefficient(0)


def _solve_rest(
    fd: FieldDesc, b, z11, z12, z22, z222, z122
) -> Tuple[FieldElement, ...]:
    b1, b2, b3, b4, b5 = b
    z = (z11 * z22 - z12 * z12 + b2 * z12 - b4) / 2
    if z122 is None:
        z122 = (z12 * z22 * z22 - z + b2 * z12 + b1 * z12 * z22) / z222
    z112 = z222 * z12 - z122 * z22
    z111 = (
        -z222 * z11 - z122 * z12 + 2 * z112 * z22 + 2 * b1 * z112 - b2 * z122
    )
    return (z11, z12, z22, z111, z112, z122, z222, z)


def _z11_from_f5(b, z12, z22, z222):
    b1, b2, b3, _, _ = b
    return z222 * z222 - z22**3 - z12 * z22 - b1 * z22 * z22 - b2 * z22 - b3


def enumerate_U(
    c: CurveParams, m: int, budget: int = GRANT_ENUMERATION_BUDGET
) -> List[GrantPoint]:
    """Every ``F_{q^m}``-point of ``U``, each once.

    Points with ``z222 != 0`` come from scanning ``(z12, z22, z222)``: ``f5``
    gives ``z11``, ``f1`` gives ``z``, ``f6`` gives ``z122``, then ``f2`` and
    ``f3`` give ``z112`` and ``z111``; ``f4`` decides. With ``z222 = 0`` the
    scan is over ``(z12, z22)``: ``f6`` becomes a constraint and ``f4`` is a
    square root for ``z122``.
    """
    fd = c.field.extend(m)
    size = fd.cardinality**3
    if size > budget:
        raise TooLarge("Grant enumeration", size, budget)
    b = _lift_b(c, fd)
    b1, b2 = b[0], b[1]
    elements = list(enumerate_field(fd))
    zero = fd.zero()
    points = []
    for z12, z22 in itertools.product(elements, repeat=2):
        for z222 in elements[1:]:
            z11 = _z11_from_f5(b, z12, z22, z222)
            candidate = _solve_rest(fd, b, z11, z12, z22, z222, None)
            if is_on_U(candidate, c):
                points.append(GrantPoint.from_affine(candidate))
        z11 = _z11_from_f5(b, z12, z22, zero)
        z = (z11 * z22 - z12 * z12 + b2 * z12 - b[3]) / 2
        if not (-z12 * z22 * z22 + z - b2 * z12 - b1 * z12 * z22).is_zero():
            continue
        # f4 is z122^2 plus terms free of z122
        partial = _solve_rest(fd, b, z11, z12, z22, zero, zero)
        target = -evaluate_all(partial, c)[4]
        root = target.sqrt()
        if root is None:
            continue
        for z122 in [root] if root.is_zero() else [root, -root]:
            candidate = _solve_rest(fd, b, z11, z12, z22, zero, z122)
            if is_on_U(candidate, c):
                points.append(GrantPoint.from_affine(candidate))
    logger.debug(f"{len(points)} points on U over F_{fd.cardinality}")
    return points


@dataclass(frozen=True)
class GrantConvention:
    """Candidate Mumford to Grant map.

    ``z22 = s22 (x1 + x2) + c22 b1``, ``z12 = s12 x1 x2 + c12 b2``,
    ``z222 = s222 scale v1`` and ``z122 = s122 scale v0``; the rest follow
    from ``f5``, ``f1``, ``f2`` and ``f3``.
    """

    s22: int
    c22: int
    s12: int
    c12: int
    s222: int
    s122: int
    scale: Fraction

    def apply(self, d: MumfordDivisor, c: CurveParams) -> GrantPoint:
        """Image of a weight-2 divisor under this convention."""
        fd = d.jacobian.field
        b = _lift_b(c, fd)
        scale = fd.from_int(self.scale.numerator) / self.scale.denominator
        u1, u0 = d.u.coefficient(1), d.u.coefficient(0)
        v1, v0 = d.v.coefficient(1), d.v.coefficient(0)
        z22 = self.s22 * -u1 + self.c22 * b[0]
        z12 = self.s12 * u0 + self.c12 * b[1]
        z222 = self.s222 * scale * v1
        z122 = self.s122 * scale * v0
        z11 = _z11_from_f5(b, z12, z22, z222)
        return GrantPoint.from_affine(_solve_rest(fd, b, z11, z12, z22, z222, z122))


def conventions() -> List[GrantConvention]:
    """The search space scanned by :func:`calibrate_convention`, in order."""
    signs, offsets = (1, -1), (0, 1, -1)
    scales = (Fraction(1), Fraction(2), Fraction(1, 2))
    return [
        GrantConvention(s22, c22, s12, c12, s222, s122, scale)
        for s22, c22, s12, c12, s222, s122, scale in itertools.product(
            signs, offsets, signs, offsets, signs, signs, scales
        )
    ]


def _weight_two_divisors(c: CurveParams, m: int) -> List[MumfordDivisor]:
    return [d for d in enumerate_jacobian(c, m) if d.weight == 2]


def _valid_pairs(
    divisors: Sequence[MumfordDivisor], limit: int, rng: random.Random
) -> List[Tuple[MumfordDivisor, MumfordDivisor, MumfordDivisor]]:
    pairs = []
    candidates = list(itertools.combinations(divisors, 2))
    rng.shuffle(candidates)
    for d1, d2 in candidates:
        total = add(d1, d2)
        if total.weight == 2 and add(d1, negate(d2)).weight == 2:
            pairs.append((d1, d2, total))
            if len(pairs) >= limit:
                break
    return pairs


@dataclass
class CalibrationScore:
    """How far a convention got through the calibration checks."""

    convention: GrantConvention
    on_u: int = 0
    hits: int = 0
    additions: int = 0
    agreements: int = 0


def _score(
    convention: GrantConvention,
    c: CurveParams,
    divisors: Sequence[MumfordDivisor],
    targets: frozenset,
    pairs,
) -> Tuple[CalibrationScore, bool]:
    score = CalibrationScore(convention)
    images = [convention.apply(d, c) for d in divisors]
    score.on_u = sum(1 for image in images if is_on_U(image.affine(), c))
    score.hits = len(set(images) & targets)
    bijective = len(set(images)) == len(divisors) == len(targets)
    if score.on_u != len(divisors) or score.hits != len(targets) or not bijective:
        return score, False
    for d1, d2, total in pairs:
        score.additions += 1
        try:
            image = grant_add(convention.apply(d1, c), convention.apply(d2, c), c)
        except QFormVanishes:
            continue
        if image == convention.apply(total, c):
            score.agreements += 1
    return score, score.agreements == score.additions


@lru_cache(maxsize=None)
def calibrate_convention(
    c: CurveParams, pair_budget: int = INTERSECTION_PAIR_BUDGET, seed: int = 0
) -> GrantConvention:
    """First convention that is a bijection onto ``U(F_q)`` and intertwines addition.

    Raises :class:`ConventionUnresolved` with the best candidate's scores when
    none passes.
    """
    divisors = _weight_two_divisors(c, 1)
    targets = frozenset(enumerate_U(c, 1))
    pairs = _valid_pairs(divisors, pair_budget, random.Random(seed))
    best: Optional[CalibrationScore] = None
    for convention in conventions():
        score, passed = _score(convention, c, divisors, targets, pairs)
        if passed:
            logger.info(f"Grant convention for {c}: {convention}")
            return convention
        rank = (score.on_u, score.hits, score.agreements)
        if best is None or rank > (best.on_u, best.hits, best.agreements):
            best = score
    if best is None:
        raise ConventionUnresolved(f"no Mumford to Grant convention to try for {c}")
    raise ConventionUnresolved(
        f"no Mumford to Grant convention passed for {c}: |U| = {len(targets)}, "
        f"{len(divisors)} weight-2 divisors; best {best.convention} maps "
        f"{best.on_u} onto U, hits {best.hits}, "
        f"agrees on {best.agreements}/{best.additions} additions"
    )


def mumford_to_grant(
    d: MumfordDivisor, convention: Optional[GrantConvention] = None
) -> GrantPoint:
    """Grant coordinates of a weight-2 divisor under the calibrated convention."""
    if d.weight != 2:
        raise WrongWeight(f"mumford_to_grant needs weight 2, got {d.weight}")
    c = d.jacobian.curve
    if convention is None:
        convention = calibrate_convention(c)
    return convention.apply(d, c)


def bezout_check(
    points: Sequence[GrantPoint], c: CurveParams, rng: random.Random
) -> Tuple[int, int]:
    """Count points of ``U`` on a random affine hyperplane against its bound.

    Returns ``(count, bound)`` with ``bound = 216 q^m``, the product of the
    degrees of ``f1, ..., f6`` times the field size.
    """
    if not points:
        return 0, 0
    fd = points[0].field
    form = [fd.random_element(rng) for _ in range(len(COORDINATES))]
    if all(a.is_zero() for a in form[1:]):
        form[1] = fd.one()
    count = 0
    for point in points:
        value = fd.zero()
        for a, coordinate in zip(form, point.coords):
            value = value + a * coordinate
        if value.is_zero():
            count += 1
    return count, 216 * fd.cardinality


@dataclass
class GrantVerifyReport:
    """Counts and verdicts of :func:`verify_intersection_lemmas`.

    A verdict of ``None`` marks a check that could not run.
    """

    q: int
    m: int
    u_points: int = 0
    expected_u_points: int = 0
    affine_failures: int = 0
    full_ideal_failures: int = 0
    f0_failures: int = 0
    special_failures: int = 0
    pairs: int = 0
    max_common_zeros: int = 0
    max_theta_overlap: int = 0
    bezout_count: int = 0
    bezout_bound: int = 0
    convention: Optional[str] = None
    convention_error: Optional[str] = None
    theta_pole_failures: Optional[int] = None
    cantor_pairs: Optional[int] = None
    cantor_agreements: Optional[int] = None
    unexplained_vanishing: Optional[int] = None
    negation_consistent: Optional[bool] = None
    checks: Dict[str, Optional[bool]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Every check that ran passed."""
        return all(v is not False for v in self.checks.values())

    def rows(self) -> List[Dict]:
        """``name, verdict`` rows followed by the raw counts."""
        rows = [
            {"check": name, "verdict": _verdict(verdict)}
            for name, verdict in self.checks.items()
        ]
        for name, value in asdict(self).items():
            if name != "checks":
                rows.append({"check": name, "verdict": "" if value is None else str(value)})
        return rows


def _verdict(verdict: Optional[bool]) -> str:
    if verdict is None:
        return "n/a"
    return "pass" if verdict else "FAIL"


def _common_zeros(points, forms_r, forms_s) -> int:
    return sum(
        1 for p in points if forms_r[p].is_zero() and forms_s[p].is_zero()
    )


def verify_intersection_lemmas(
    c: CurveParams,
    m: int,
    pair_budget: int = INTERSECTION_PAIR_BUDGET,
    seed: int = 0,
    budget: int = GRANT_ENUMERATION_BUDGET,
) -> GrantVerifyReport:
    """Run the exhaustive checks of the Grant model over ``F_{q^m}``."""
    rng = random.Random(seed)
    points = enumerate_U(c, m, budget)
    jacobian = get_jacobian(c, m)
    report = GrantVerifyReport(q=c.q, m=m, u_points=len(points))
    report.expected_u_points = jacobian_order(char_poly(c), m) - count_points(c, m)

    for point in points:
        residues = evaluate_all(point.affine(), c)
        if not all(residues[i].is_zero() for i in AFFINE_EQUATIONS):
            report.affine_failures += 1
        if not all(residues[i].is_zero() for i in PROJECTIVE_EQUATIONS):
            report.full_ideal_failures += 1
        if not residues[0].is_zero():
            report.f0_failures += 1
    theta = theta_elements(jacobian)
    report.special_failures = sum(
        1 for t in theta if not is_on_jacobian_projective(iota_special(t), c)
    )

    # q-form zero sets of sampled pairs R != ±R'
    q_cache: Dict[GrantPoint, Dict[GrantPoint, FieldElement]] = {}

    def zeros_of(r: GrantPoint):
        if r not in q_cache:
            q_cache[r] = {p: _q_only(p, r) for p in points}
        return q_cache[r]

    candidates = list(itertools.combinations(range(len(points)), 2))
    rng.shuffle(candidates)
    for i, j in candidates[:pair_budget]:
        r, s = points[i], points[j]
        if s == r.negate():
            continue
        report.pairs += 1
        report.max_common_zeros = max(
            report.max_common_zeros, _common_zeros(points, zeros_of(r), zeros_of(s))
        )

    weight_two = _weight_two_divisors(c, m)
    report.max_theta_overlap = max(
        (theta_translate_overlap(d, theta) for d in weight_two), default=0
    )
    report.bezout_count, report.bezout_bound = bezout_check(points, c, rng)

    try:
        convention = calibrate_convention(c)
    except ConventionUnresolved as e:
        report.convention_error = str(e)
        logger.warning(f"Grant convention unresolved: {e}")
        convention = None
    if convention is not None:
        report.convention = str(convention)
        _cantor_side_checks(report, c, convention, weight_two, theta, pair_budget, rng)

    report.checks = {
        "u_count": report.u_points == report.expected_u_points,
        "affine_equations": report.affine_failures == 0,
        "full_ideal": report.full_ideal_failures == 0,
        "f0_in_ideal": report.f0_failures == 0,
        "special_points": report.special_failures == 0,
        "common_zeros": report.max_common_zeros <= INTERSECTION_LEMMA_BOUND,
        "theta_overlap": report.max_theta_overlap <= THETA_TRANSLATE_BOUND,
        "bezout": report.bezout_count <= report.bezout_bound,
        "convention": convention is not None,
        "theta_in_q_zero_set": None
        if report.theta_pole_failures is None
        else report.theta_pole_failures == 0,
        "cantor_agreement": None
        if report.cantor_pairs is None
        else report.cantor_agreements == report.cantor_pairs,
        "vanishing_explained": None
        if report.unexplained_vanishing is None
        else report.unexplained_vanishing == 0,
        "negation": report.negation_consistent,
    }
    return report


def _q_only(a: GrantPoint, r: GrantPoint) -> FieldElement:
    return a["z11"] - r["z11"] + a["z12"] * r["z22"] - r["z12"] * a["z22"]


def _cantor_side_checks(report, c, convention, weight_two, theta, pair_budget, rng):
    image = {d: convention.apply(d, c) for d in weight_two}
    report.theta_pole_failures = 0
    for r in weight_two[:pair_budget]:
        for t in theta:
            for q in (add(t, r), add(t, negate(r))):
                if q.weight == 2 and not _q_only(image[q], image[r]).is_zero():
                    report.theta_pole_failures += 1
    report.cantor_pairs = 0
    report.cantor_agreements = 0
    report.unexplained_vanishing = 0
    candidates = list(itertools.combinations(weight_two, 2))
    rng.shuffle(candidates)
    for d1, d2 in candidates[:pair_budget]:
        total, difference = add(d1, d2), add(d1, negate(d2))
        try:
            result = grant_add(image[d1], image[d2], c)
        except QFormVanishes:
            if total.weight == 2 and difference.weight == 2:
                report.unexplained_vanishing += 1
            continue
        if total.weight == 2 and difference.weight == 2:
            report.cantor_pairs += 1
            if result == image[total]:
                report.cantor_agreements += 1
    report.negation_consistent = all(
        image[negate(d)] == image[d].negate() for d in weight_two
    )
