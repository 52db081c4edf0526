# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Frobenius endomorphism generator.

For a divisor ``D`` and a digit vector ``m = (m_0, ..., m_{k-1})`` over the
digit set ``R = {0, ±1, ..., ±(q^2-1)/2}`` the generator emits
``w_m = f(D_m)`` with ``D_m = sum m_j sigma^j(D)``, walking ``R^k`` in
lexicographic order with ``m_0`` the most significant digit.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from hecgen.config import (
    ACCEPTANCE_DIGIT_ORDER,
    COORDINATE_TAGS,
    LEX_ENUMERATION_BUDGET,
    DigitOrder,
)
from hecgen.errors import PoleConventionViolation, TableMismatch, TooLarge
from hecgen.ff import FieldElement
from hecgen.jacobian import (
    MumfordDivisor,
    add,
    frobenius_divisor,
    is_theta,
    negate,
    scalar_mul,
)

logger = logging.getLogger("hecgen")

DigitVector = Tuple[int, ...]


class DigitSet:
    """The digits ``{0, ±1, ..., ±(q^2-1)/2}`` under a total order.

    ``ascending`` is the integer order. ``balanced`` lists ``0, 1, -1, 2, -2, ...``.
    """

    def __init__(self, q: int, order: DigitOrder = ACCEPTANCE_DIGIT_ORDER):
        if q % 2 == 0:
            raise ValueError(f"digit set needs an odd q, got {q}")
        self.q = q
        self.order = DigitOrder(order)
        half = (q * q - 1) // 2
        if self.order == DigitOrder.ascending:
            digits = list(range(-half, half + 1))
        else:
            digits = [0]
            for c in range(1, half + 1):
                digits += [c, -c]
        self.digits: Tuple[int, ...] = tuple(digits)
        self.half = half
        self._position = {c: i for i, c in enumerate(self.digits)}

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __contains__(self, c: int) -> bool:
        return c in self._position

    @property
    def first(self) -> int:  # noqa: D102
        return self.digits[0]

    @property
    def last(self) -> int:  # noqa: D102
        return self.digits[-1]

    def successor(self, c: int) -> Optional[int]:
        """Next digit in order, ``None`` after the last one."""
        i = self._position[c] + 1
        return self.digits[i] if i < len(self.digits) else None

    def vector_at(self, index: int, k: int) -> DigitVector:
        """Digit vector at position ``index`` of the lexicographic walk."""
        base = len(self.digits)
        positions = []
        for _ in range(k):
            index, r = divmod(index, base)
            positions.append(r)
        return tuple(self.digits[r] for r in reversed(positions))


def _check_lex_budget(q: int, k: int, budget: int) -> int:
    if k < 1:
        raise ValueError(f"digit vectors need k >= 1, got {k}")
    size = q ** (2 * k)
    if size > budget:
        raise TooLarge("digit vector enumeration", size, budget)
    return size


def lex_enumerate(
    ds: DigitSet, k: int, budget: int = LEX_ENUMERATION_BUDGET
) -> Iterator[DigitVector]:
    """All ``q^{2k}`` digit vectors, leftmost digit most significant."""
    _check_lex_budget(ds.q, k, budget)
    return itertools.product(ds.digits, repeat=k)


class FrobeniusTable:
    """``c * sigma^j(D)`` for every digit ``c`` and ``j < k``.

    Holds ``q^2 k`` divisors. Negative multiples are negations of the positive
    ones.
    """

    def __init__(self, divisor: MumfordDivisor, k: int, digits: DigitSet):
        self.divisor = divisor
        self.k = k
        self.digits = digits
        self.images: List[MumfordDivisor] = []
        self._multiples: Dict[Tuple[int, int], MumfordDivisor] = {}
        image = divisor
        for j in range(k):
            if j:
                image = frobenius_divisor(image, 1)
            self.images.append(image)
            multiple = image.jacobian.identity()
            self._multiples[(0, j)] = multiple
            for c in range(1, digits.half + 1):
                multiple = add(multiple, image)
                self._multiples[(c, j)] = multiple
                self._multiples[(-c, j)] = negate(multiple)
        logger.debug(f"Frobenius table: {len(self._multiples)} multiples for k={k}")

    def __getitem__(self, key: Tuple[int, int]) -> MumfordDivisor:
        return self._multiples[key]

    def check(self, divisor: MumfordDivisor, k: int) -> None:
        """Raise :class:`TableMismatch` unless the table serves ``divisor`` up to ``k``."""
        if divisor != self.divisor or divisor.jacobian != self.divisor.jacobian:
            raise TableMismatch(f"table was built for {self.divisor}, not {divisor}")
        if k > self.k:
            raise TableMismatch(f"table holds {self.k} Frobenius images, {k} needed")


def generate_divisor(
    m: Sequence[int], d: MumfordDivisor, table: FrobeniusTable
) -> MumfordDivisor:
    """``D_m = sum m_j sigma^j(D)`` from the precomputed multiples."""
    table.check(d, len(m))
    result = d.jacobian.identity()
    for j, c in enumerate(m):
        if c not in table.digits:
            raise TableMismatch(f"digit {c} is not in the table's digit set")
        if c:
            result = add(result, table[(c, j)])
    return result


def naive_divisor(m: Sequence[int], d: MumfordDivisor) -> MumfordDivisor:
    """``D_m`` recomputed from scratch with :func:`scalar_mul` and :func:`add`."""
    result = d.jacobian.identity()
    for j, c in enumerate(m):
        result = add(result, scalar_mul(frobenius_divisor(d, j), c))
    return result


@dataclass(frozen=True)
class CoordinateFunction:
    """Rational function evaluated on weight-2 divisors.

    Either ``tag`` names a Mumford coordinate or ``function`` maps a weight-2
    divisor to a field element. ``Theta`` is the pole locus: every divisor of
    weight at most 1 evaluates to zero.
    """

    tag: Optional[str] = None
    function: Optional[Callable[[MumfordDivisor], FieldElement]] = None
    degree: int = 1

    def __post_init__(self):
        if (self.tag is None) == (self.function is None):
            raise ValueError("give exactly one of a coordinate tag or a function")
        if self.tag is not None and self.tag not in COORDINATE_TAGS:
            raise ValueError(
                f"unknown coordinate {self.tag!r}, expected one of {COORDINATE_TAGS}"
            )
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")

    @property
    def name(self) -> str:  # noqa: D102
        return self.tag or getattr(self.function, "__name__", "custom")

    def __call__(self, d: MumfordDivisor) -> FieldElement:
        if is_theta(d):
            return d.jacobian.field.zero()
        if self.tag is not None:
            return d.coordinate(self.tag)
        return d.jacobian.field(self.function(d))


def _emit(f: CoordinateFunction, d: MumfordDivisor) -> FieldElement:
    value = f(d)
    if is_theta(d) and not value.is_zero():
        raise PoleConventionViolation(f"{f.name}({d}) = {value} on the pole locus")
    return value


def _warn_on_order(d: MumfordDivisor, ell: Optional[int]) -> None:
    if ell is None:
        return
    p = d.jacobian.curve.p
    if ell == p:
        logger.warning(f"divisor order {ell} equals the characteristic")
    elif not sympy.isprime(ell):
        logger.warning(f"divisor order {ell} is not prime")


def _check_k(d: MumfordDivisor, k: int) -> None:
    if k > d.jacobian.n:
        raise ValueError(f"k = {k} exceeds the extension degree n = {d.jacobian.n}")


def walk_divisors(
    d: MumfordDivisor,
    k: int,
    start: int,
    stop: int,
    table: FrobeniusTable,
) -> Iterator[MumfordDivisor]:
    """``D_m`` for lexicographic positions ``start <= i < stop``.

    The first element is computed directly; each step then changes one or
    more trailing digits ``a -> b``, updating ``D_m`` by
    ``b sigma^j(D) - a sigma^j(D)`` from the table.
    """
    digits = table.digits
    m = list(digits.vector_at(start, k))
    current = generate_divisor(m, d, table)
    for i in range(start, stop):
        yield current
        if i + 1 == stop:
            return
        j = k - 1
        while j >= 0:
            old = m[j]
            new = digits.successor(old)
            wrapped = new is None
            if wrapped:
                new = digits.first
            current = add(add(current, table[(new, j)]), table[(-old, j)])
            m[j] = new
            if not wrapped:
                break
            j -= 1


def generate_sequence_range(
    d: MumfordDivisor,
    k: int,
    f: CoordinateFunction,
    start: int,
    stop: int,
    table: Optional[FrobeniusTable] = None,
    digit_order: DigitOrder = ACCEPTANCE_DIGIT_ORDER,
) -> List[FieldElement]:
    """Terms ``start <= i < stop`` of the sequence; ranges concatenate to the whole."""
    _check_k(d, k)
    if table is None:
        table = FrobeniusTable(d, k, DigitSet(d.jacobian.curve.q, digit_order))
    total = len(table.digits) ** k
    if not 0 <= start <= stop <= total:
        raise ValueError(f"range [{start}, {stop}) outside [0, {total})")
    if start == stop:
        return []
    return [_emit(f, dm) for dm in walk_divisors(d, k, start, stop, table)]


def generate_sequence(
    d: MumfordDivisor,
    k: int,
    f: CoordinateFunction,
    ell: Optional[int] = None,
    digit_order: DigitOrder = ACCEPTANCE_DIGIT_ORDER,
    budget: int = LEX_ENUMERATION_BUDGET,
) -> List[FieldElement]:
    """The sequence ``w_m`` for every ``m`` in lexicographic order."""
    q = d.jacobian.curve.q
    total = _check_lex_budget(q, k, budget)
    _warn_on_order(d, ell)
    table = FrobeniusTable(d, k, DigitSet(q, digit_order))
    return generate_sequence_range(d, k, f, 0, total, table)


def generate_sequence_naive(
    d: MumfordDivisor,
    k: int,
    f: CoordinateFunction,
    digit_order: DigitOrder = ACCEPTANCE_DIGIT_ORDER,
    budget: int = LEX_ENUMERATION_BUDGET,
) -> List[FieldElement]:
    """Reference sequence recomputing every ``D_m`` independently."""
    _check_k(d, k)
    digits = DigitSet(d.jacobian.curve.q, digit_order)
    return [_emit(f, naive_divisor(m, d)) for m in lex_enumerate(digits, k, budget)]


def proposition_admits(q: int, ell: int, e: int) -> bool:
    """Exact test of ``q^{2e+8} <= ell (sqrt(q) - 1)^4``.

    ``(sqrt(q) - 1)^4 = q^2 + 6q + 1 - 4 (q + 1) sqrt(q)``, so the test is
    ``4 ell (q + 1) sqrt(q) <= A`` with ``A = ell (q^2 + 6q + 1) - q^{2e+8}``.
    """
    a = ell * (q * q + 6 * q + 1) - q ** (2 * e + 8)
    return a >= 0 and 16 * ell * ell * (q + 1) ** 2 * q <= a * a


@dataclass
class CollisionStats:
    """Multiplicities ``T_k(Q)`` of the values of ``m -> D_m``."""

    q: int
    k: int
    ell: int
    distinct: int
    max_t: int
    histogram: Dict[int, int] = field(default_factory=dict)
    admissible_e: List[int] = field(default_factory=list)
    proposition_holds: bool = True
    corollary_bound: Fraction = Fraction(1)

    @property
    def vacuous(self) -> bool:
        """No ``e`` satisfies the hypothesis of the collision bound."""
        return not self.admissible_e

    @property
    def largest_e(self) -> Optional[int]:  # noqa: D102
        return max(self.admissible_e) if self.admissible_e else None

    @property
    def informative(self) -> bool:
        """``max{1, q^{2k+8}/ell}`` improves on the trivial ``q^{2k}``."""
        return self.corollary_bound < self.q ** (2 * self.k)


def collision_stats(
    d: MumfordDivisor,
    k: int,
    ell: int,
    digit_order: DigitOrder = ACCEPTANCE_DIGIT_ORDER,
    budget: int = LEX_ENUMERATION_BUDGET,
) -> CollisionStats:
    """Count ``T_k(Q)`` over all digit vectors and check the collision bound.

    For every ``1 <= e <= k`` with ``q^{2e} <= (sqrt(q)-1)^4 q^{-8} ell``
    every ``T_k(Q)`` is at most ``q^{2(k-e)}``.
    """
    q = d.jacobian.curve.q
    total = _check_lex_budget(q, k, budget)
    _check_k(d, k)
    table = FrobeniusTable(d, k, DigitSet(q, digit_order))
    multiplicity = Counter(walk_divisors(d, k, 0, total, table))
    max_t = max(multiplicity.values())
    admissible = [e for e in range(1, k + 1) if proposition_admits(q, ell, e)]
    holds = all(max_t <= q ** (2 * (k - e)) for e in admissible)
    stats = CollisionStats(
        q=q,
        k=k,
        ell=ell,
        distinct=len(multiplicity),
        max_t=max_t,
        histogram=dict(sorted(Counter(multiplicity.values()).items())),
        admissible_e=admissible,
        proposition_holds=holds,
        corollary_bound=max(Fraction(1), Fraction(q ** (2 * k + 8), ell)),
    )
    if stats.vacuous:
        logger.warning(f"collision bound is vacuous for q={q}, k={k}, ell={ell}")
    elif not holds:
        logger.error(f"max T = {max_t} breaks the collision bound for e={admissible}")
    return stats


@dataclass(frozen=True)
class TheoremBound:
    """Exact value of ``min(q^{3k/2}, ell/q^8) / (q^n deg f)``."""

    bound: sympy.Expr
    nontrivial: bool

    def __float__(self) -> float:
        return float(self.bound)


def theorem_bound(q: int, n: int, k: int, ell: int, deg_f: int) -> TheoremBound:
    """Lower bound shape for the linear complexity and its non-triviality flag."""
    if deg_f < 1:
        raise ValueError(f"deg f must be positive, got {deg_f}")
    growth = sympy.Integer(q) ** sympy.Rational(3 * k, 2)
    order_term = sympy.Rational(ell, q**8)
    bound = sympy.Min(growth, order_term) / (sympy.Integer(q) ** n * deg_f)
    return TheoremBound(bound, 3 * k >= 2 * n and ell >= q ** (n + 8))
