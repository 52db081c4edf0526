# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Linear complexity of finite sequences over a finite field."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from hecgen.config import BRUTE_FORCE_FIELD_BUDGET, BRUTE_FORCE_LENGTH_BUDGET
from hecgen.errors import EmptySequence, FieldMismatch, PreconditionViolated, TooLarge
from hecgen.ff import FieldElement


@dataclass(frozen=True)
class LinearRecurrence:
    """``s_{n+L} = c_0 s_n + ... + c_{L-1} s_{n+L-1}``."""

    order: int
    coefficients: Tuple[FieldElement, ...]

    def next_term(self, window: Sequence[FieldElement]) -> FieldElement:
        """Term following the last ``order`` values of ``window``."""
        start = len(window) - self.order
        total = None
        for c, value in zip(self.coefficients, window[start:]):
            total = c * value if total is None else total + c * value
        return total

    def extend(self, initial: Sequence[FieldElement], length: int) -> List[FieldElement]:
        """Run the recurrence forward from its first ``order`` terms."""
        terms = list(initial[: self.order])
        if self.order == 0:
            zero = initial[0] - initial[0]
            return [zero] * length
        while len(terms) < length:
            terms.append(self.next_term(terms))
        return terms[:length]

    def fits(self, s: Sequence[FieldElement]) -> bool:
        """Whether the recurrence holds everywhere on ``s``."""
        if self.order == 0:
            return all(x.is_zero() for x in s)
        return all(
            self.next_term(s[n : n + self.order]) == s[n + self.order]
            for n in range(len(s) - self.order)
        )


def _check_field(s: Sequence[FieldElement]) -> None:
    if not s:
        raise EmptySequence("linear complexity of an empty sequence")
    field = s[0].field
    for x in s:
        if x.field is not field and x.field != field:
            raise FieldMismatch(f"sequence mixes {field} and {x.field}")


def _massey(s: Sequence[FieldElement]) -> Tuple[List[FieldElement], int, List[int]]:
    field = s[0].field
    one, zero = field.one(), field.zero()
    connection = [one]
    previous = [one]
    order = 0
    shift = 1
    last_discrepancy = one
    profile = []
    for n, term in enumerate(s):
        discrepancy = term
        for i in range(1, order + 1):
            discrepancy = discrepancy + connection[i] * s[n - i]
        if discrepancy.is_zero():
            shift += 1
        else:
            factor = discrepancy / last_discrepancy
            updated = connection + [zero] * max(
                0, len(previous) + shift - len(connection)
            )
            for i, c in enumerate(previous):
                updated[i + shift] = updated[i + shift] - factor * c
            if 2 * order <= n:
                previous = connection
                order = n + 1 - order
                last_discrepancy = discrepancy
                shift = 1
            else:
                shift += 1
            connection = updated
        profile.append(order)
    connection = connection + [zero] * (order + 1 - len(connection))
    return connection, order, profile


def berlekamp_massey(s: Sequence[FieldElement]) -> LinearRecurrence:
    """Minimal linear recurrence of ``s`` by the Berlekamp-Massey algorithm.

    The connection polynomial ``1 + C_1 X + ... + C_L X^L`` is turned into
    forward coefficients ``c_j = -C_{L-j}``.
    """
    _check_field(s)
    connection, order, _ = _massey(s)
    coefficients = tuple(-connection[order - j] for j in range(order))
    return LinearRecurrence(order, coefficients)


def complexity_profile(s: Sequence[FieldElement]) -> List[int]:
    """Linear complexity of every prefix ``s[:t]``, ``t = 1..N``."""
    _check_field(s)
    return _massey(s)[2]


def _row_reduce(rows: List[List[FieldElement]]) -> Tuple[List[List[FieldElement]], List[int]]:
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    width = len(rows[0]) if rows else 0
    rank = 0
    for column in range(width):
        pivot = next(
            (r for r in range(rank, len(rows)) if not rows[r][column].is_zero()), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = rows[rank][column].inverse()
        rows[rank] = [x * inverse for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][column].is_zero():
                factor = rows[r][column]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(column)
        rank += 1
    return rows[:rank], pivots


def _consistent(s: Sequence[FieldElement], order: int) -> bool:
    equations = [list(s[n : n + order]) + [s[n + order]] for n in range(len(s) - order)]
    if not equations:
        return True
    _, pivots = _row_reduce(equations)
    return order not in pivots


def brute_force_L(
    s: Sequence[FieldElement],
    max_length: int = BRUTE_FORCE_LENGTH_BUDGET,
    max_field: int = BRUTE_FORCE_FIELD_BUDGET,
) -> int:
    """Smallest ``L`` whose recurrence system is solvable, by Gaussian elimination."""
    _check_field(s)
    if len(s) > max_length:
        raise TooLarge("brute-force sequence length", len(s), max_length)
    if s[0].field.cardinality > max_field:
        raise TooLarge("brute-force field", s[0].field.cardinality, max_field)
    if all(x.is_zero() for x in s):
        return 0
    for order in range(1, len(s) + 1):
        if _consistent(s, order):
            return order
    return len(s)


def _kernel_vector(rows: List[List[FieldElement]], width: int, field) -> Optional[Tuple]:
    if not rows:
        return tuple([field.one()] + [field.zero()] * (width - 1))
    reduced, pivots = _row_reduce(rows)
    free = [c for c in range(width) if c not in pivots]
    if not free:
        return None
    chosen = free[0]
    vector = [field.zero()] * width
    vector[chosen] = field.one()
    for row, pivot in zip(reduced, pivots):
        vector[pivot] = -row[chosen]
    lead = next(x for x in vector if not x.is_zero())
    return tuple(x / lead for x in vector)


def lemma_dependence_check(
    s: Sequence[FieldElement], order: int, positions: Sequence[int]
) -> Tuple[FieldElement, ...]:
    """Nonzero ``lambda`` with ``sum lambda_i s_{n + j_i} = 0`` for every valid ``n``.

    Any ``order + 1`` shifts of a sequence satisfying an order-``order``
    recurrence are linearly dependent. The first nonzero coefficient of the
    returned vector is 1.
    """
    _check_field(s)
    positions = list(positions)
    if len(set(positions)) != len(positions) or any(j < 0 for j in positions):
        raise PreconditionViolated(f"positions {positions} must be distinct and non-negative")
    if len(positions) < order + 1:
        raise PreconditionViolated(
            f"{len(positions)} positions cannot force a dependence at order {order}"
        )
    actual = berlekamp_massey(s).order
    if actual > order:
        raise PreconditionViolated(f"sequence has linear complexity {actual} > {order}")
    rows = [
        [s[n + j] for j in positions] for n in range(len(s) - max(positions))
    ]
    field = s[0].field
    vector = _kernel_vector(rows, len(positions), field)
    if vector is None:
        raise PreconditionViolated(f"shifts at {positions} are linearly independent")
    for row in rows:
        total = field.zero()
        for coefficient, value in zip(vector, row):
            total = total + coefficient * value
        if not total.is_zero():
            raise PreconditionViolated(f"coefficients {vector} fail on row {row}")
    return vector
