# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Dense univariate polynomials over a finite field.

Coefficients are stored little-endian and trimmed, so two polynomials are
equal exactly when their coefficient tuples are equal. The zero polynomial
has degree ``-1``.
"""

from typing import Iterable, Sequence, Tuple

from hecgen.errors import DivisionByZero, FieldMismatch


class Polynomial:
    """Polynomial with coefficients in a ``FieldDesc``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable = ()):
        """Build from little-endian coefficients; ints are coerced into ``field``."""
        values = [field(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        self.field = field
        self.coeffs: Tuple = tuple(values)

    @classmethod
    def x(cls, field) -> "Polynomial":  # noqa: D102
        return cls(field, [field.zero(), field.one()])

    @classmethod
    def constant(cls, field, value) -> "Polynomial":  # noqa: D102
        return cls(field, [value])

    @classmethod
    def monomial(cls, field, degree: int, value=1) -> "Polynomial":  # noqa: D102
        return cls(field, [field.zero()] * degree + [field(value)])

    def degree(self) -> int:  # noqa: D102
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:  # noqa: D102
        return not self.coeffs

    def leading(self):  # noqa: D102
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def coefficient(self, i: int):
        """Return the coefficient of ``X^i`` (zero beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def is_monic(self) -> bool:  # noqa: D102
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient; the zero polynomial stays zero."""
        if not self.coeffs:
            return self
        inverse = self.coeffs[-1].inverse()
        return Polynomial(self.field, [c * inverse for c in self.coeffs])

    def _check(self, other: "Polynomial") -> None:
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatch(
                f"polynomials over {self.field} and {other.field} cannot be combined"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial(self.field, [other])

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.field, [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.field)
        zero = self.field.zero()
        product = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] = product[i + j] + a * b
        return Polynomial(self.field, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(self.field, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        remainder = list(self.coeffs)
        divisor_degree = other.degree()
        lead_inverse = other.leading().inverse()
        zero = self.field.zero()
        quotient = [zero] * max(len(remainder) - divisor_degree, 0)
        for shift in range(len(remainder) - divisor_degree - 1, -1, -1):
            factor = remainder[shift + divisor_degree] * lead_inverse
            if factor.is_zero():
                continue
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                remainder[shift + i] = remainder[shift + i] - factor * c
        return Polynomial(self.field, quotient), Polynomial(
            self.field, remainder[:divisor_degree]
        )

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, point):
        """Evaluate by Horner's rule at a field element."""
        result = self.field.zero() if not self.coeffs else self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * point + c
        return result

    def derivative(self) -> "Polynomial":  # noqa: D102
        return Polynomial(
            self.field, [c * (i + 1) for i, c in enumerate(self.coeffs[1:])]
        )

    def pow_mod(self, exponent: int, modulus: "Polynomial") -> "Polynomial":
        """Return ``self^exponent mod modulus`` by square-and-multiply."""
        result = Polynomial.constant(self.field, 1) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def map_coefficients(self, function, field=None) -> "Polynomial":
        """Apply ``function`` to every coefficient, optionally moving to ``field``."""
        return Polynomial(field or self.field, [function(c) for c in self.coeffs])

    def lift(self, field) -> "Polynomial":
        """Embed the coefficients into an extension ``field``."""
        return Polynomial(field, [field.lift(c) for c in self.coeffs])

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            monomial = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not monomial:
                terms.append(str(c))
            elif c == self.field.one():
                terms.append(monomial)
            else:
                terms.append(f"({c})*{monomial}")
        return " + ".join(terms)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(field, 1), Polynomial(field)
    t0, t1 = Polynomial(field), Polynomial.constant(field, 1)
    while not r1.is_zero():
        quotient, remainder = divmod(r0, r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, s0 - quotient * s1
        t0, t1 = t1, t0 - quotient * t1
    if r0.is_zero():
        return r0, s0, t0
    inverse = r0.leading().inverse()
    return r0 * inverse, s0 * inverse, t0 * inverse


def from_roots(field, roots: Sequence) -> Polynomial:
    """Return the monic polynomial with the given roots."""
    result = Polynomial.constant(field, 1)
    for root in roots:
        result = result * Polynomial(field, [-field(root), field.one()])
    return result
