# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Finite fields of odd characteristic built as towers of extensions.

A field is a stack of levels. Level 0 is the prime field, whose elements are
plain integers ``0..p-1``. Every other level is ``K[X]/(m)`` over the level
below it, with elements stored as tuples of lower-level values. The canonical
order of a field is the order of :meth:`FieldDesc.index`, which reads the
little-endian coefficient vector as digits of an integer; ``F_9 = F_3[i]``
therefore enumerates as ``0, 1, 2, i, 1+i, 2+i, 2i, 1+2i, 2+2i``.

Text form of an element: its base-``p`` digits, least significant first,
joined by ``;`` (``i`` in ``F_9`` is ``0;1``). Field spec strings have the form
``p^d1^d2[:m1/m2]`` where each optional modulus ``mi`` lists comma-separated
coefficients (in the text form of the level below) from the constant term up.
"""

from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from hecgen.config import FIELD_ENUMERATION_BUDGET
from hecgen.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    InvalidSubfield,
    NotPrime,
    ReducibleModulus,
    TooLarge,
)
from hecgen.poly import Polynomial, poly_gcd


class _PrimeLevel:
    """Integers modulo ``p``."""

    __slots__ = ("p", "degree", "cardinality", "zero", "one")

    def __init__(self, p: int):
        self.p = p
        self.degree = 1
        self.cardinality = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):  # noqa: D102
        return (a + b) % self.p

    def sub(self, a, b):  # noqa: D102
        return (a - b) % self.p

    def neg(self, a):  # noqa: D102
        return -a % self.p

    def mul(self, a, b):  # noqa: D102
        return a * b % self.p

    def inv(self, a):  # noqa: D102
        return pow(a, -1, self.p)

    def power(self, a, e: int):  # noqa: D102
        return pow(a, e, self.p)

    def from_int(self, n: int):  # noqa: D102
        return n % self.p

    def index(self, a) -> int:  # noqa: D102
        return a

    def from_index(self, i: int):  # noqa: D102
        return i


class _ExtensionLevel:
    """``base[X]/(m)`` for a monic irreducible ``m`` of degree ``degree``."""

    __slots__ = ("base", "degree", "modulus", "cardinality", "zero", "one")

    def __init__(self, base, modulus: Tuple):
        # modulus holds the d low coefficients; the leading one is implicit
        self.base = base
        self.degree = len(modulus)
        self.modulus = modulus
        self.cardinality = base.cardinality**self.degree
        self.zero = (base.zero,) * self.degree
        self.one = (base.one,) + (base.zero,) * (self.degree - 1)

    def add(self, a, b):  # noqa: D102
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):  # noqa: D102
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):  # noqa: D102
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def mul(self, a, b):
        base = self.base
        zero = base.zero
        d = self.degree
        product = [zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                if y != zero:
                    product[i + j] = base.add(product[i + j], base.mul(x, y))
        for k in range(2 * d - 2, d - 1, -1):
            c = product[k]
            if c == zero:
                continue
            for i, m in enumerate(self.modulus):
                if m != zero:
                    product[k - d + i] = base.sub(product[k - d + i], base.mul(c, m))
        return tuple(product[:d])

    def power(self, a, e: int):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a):
        return self.power(a, self.cardinality - 2)

    def embed(self, b):
        """Lift a value of the base level."""
        return (b,) + (self.base.zero,) * (self.degree - 1)

    def from_int(self, n: int):  # noqa: D102
        return self.embed(self.base.from_int(n))

    def index(self, a) -> int:
        result = 0
        radix = self.base.cardinality
        for c in reversed(a):
            result = result * radix + self.base.index(c)
        return result

    def from_index(self, i: int):
        radix = self.base.cardinality
        digits = []
        for _ in range(self.degree):
            i, digit = divmod(i, radix)
            digits.append(self.base.from_index(digit))
        return tuple(digits)


class FieldElement:
    """Element of a :class:`FieldDesc`, always in reduced canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: "FieldDesc", value):
        self.field = field
        self.value = value

    def _other(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(
                    f"elements of {self.field} and {other.field} cannot be combined"
                )
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.top.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.top.sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return FieldElement(self.field, self.field.top.neg(self.value))

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.top.mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(self.field, self.field.top.power(self.value, exponent))

    def inverse(self) -> "FieldElement":  # noqa: D102
        if self.is_zero():
            raise DivisionByZero(f"zero has no inverse in {self.field}")
        return FieldElement(self.field, self.field.top.inv(self.value))

    def is_zero(self) -> bool:  # noqa: D102
        return self.value == self.field.top.zero

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.value == self.field.top.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value == other.value and (
            self.field is other.field or self.field == other.field
        )

    def __hash__(self) -> int:
        # prime-field values hash as their canonical integer, matching __eq__
        value = self.value
        for level in reversed(self.field.levels[1:]):
            if value[1:] != level.zero[1:]:
                break
            value = value[0]
        return hash(value)

    def index(self) -> int:
        """Position of the element in the canonical order of its field."""
        return self.field.top.index(self.value)

    def __lt__(self, other: "FieldElement") -> bool:
        return self.index() < self._other(other).index()

    def frobenius(self, sub_cardinality: int, j: int = 1) -> "FieldElement":
        """Return ``self^(sub_cardinality^j)``."""
        return frobenius_power(self, sub_cardinality, j)

    def in_subfield(self, sub_cardinality: int) -> bool:
        """Whether the element lies in the subfield of the given cardinality."""
        return self.frobenius(sub_cardinality, 1) == self

    def is_square(self) -> bool:
        """Euler's criterion; zero counts as a square."""
        if self.is_zero():
            return True
        return self ** ((self.field.cardinality - 1) // 2) == 1

    def quadratic_character(self) -> int:
        """Return 0, 1 or -1."""
        if self.is_zero():
            return 0
        return 1 if self.is_square() else -1

    def sqrt(self) -> Optional["FieldElement"]:
        """Square root by Tonelli-Shanks, ``None`` for non-squares.

        The returned root is deterministic; the other root is its negation.
        """
        if self.is_zero():
            return self
        if not self.is_square():
            return None
        order = self.field.cardinality - 1
        s, t = 0, order
        while t % 2 == 0:
            s, t = s + 1, t // 2
        c = self.field.nonresidue() ** t
        x = self ** ((t + 1) // 2)
        b = self**t
        m = s
        one = self.field.one()
        while b != one:
            i, b2 = 0, b
            while b2 != one:
                b2 = b2 * b2
                i += 1
            g = c ** (1 << (m - i - 1))
            x = x * g
            c = g * g
            b = b * c
            m = i
        return x

    def to_text(self) -> str:
        """Base-``p`` digits, least significant first, joined by ``;``."""
        index = self.index()
        digits = []
        for _ in range(self.field.total_degree):
            index, digit = divmod(index, self.field.p)
            digits.append(str(digit))
        return ";".join(digits)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"FieldElement({self.field}, {self.to_text()})"


class FieldDesc:
    """A finite field ``F_{p^d}`` given by a tower of irreducible moduli."""

    def __init__(self, p: int, levels: Sequence):
        self.p = p
        self.levels = tuple(levels)
        self.top = self.levels[-1]
        self.cardinality = self.top.cardinality
        self.level_cardinalities = tuple(level.cardinality for level in self.levels)
        self.total_degree = 1
        for level in self.levels[1:]:
            self.total_degree *= level.degree
        self._key = (p,) + tuple(
            level.modulus for level in self.levels if hasattr(level, "modulus")
        )
        self._extensions: Dict = {}
        self._subfields: Dict = {}
        self._nonresidue: Optional[FieldElement] = None

    @property
    def degrees(self) -> Tuple[int, ...]:
        """Degrees of the extension levels above the prime field."""
        return tuple(level.degree for level in self.levels[1:])

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldDesc) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"F_{self.cardinality}"

    def __call__(self, value) -> FieldElement:
        """Coerce an int, text form or element of a subfield."""
        if isinstance(value, FieldElement):
            if value.field is self or value.field == self:
                return value
            return self.lift(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.from_text(value)
        raise FieldMismatch(f"cannot coerce {value!r} into {self}")

    def zero(self) -> FieldElement:  # noqa: D102
        return FieldElement(self, self.top.zero)

    def one(self) -> FieldElement:  # noqa: D102
        return FieldElement(self, self.top.one)

    def from_int(self, n: int) -> FieldElement:  # noqa: D102
        return FieldElement(self, self.top.from_int(n))

    def from_index(self, i: int) -> FieldElement:  # noqa: D102
        return FieldElement(self, self.top.from_index(i % self.cardinality))

    def from_text(self, text: str) -> FieldElement:
        """Parse the ``;``-separated base-``p`` digit form."""
        digits = [int(d) for d in text.strip().split(";") if d.strip()]
        if len(digits) > self.total_degree or any(
            not 0 <= d < self.p for d in digits
        ):
            raise ValueError(f"'{text}' is not an element of {self}")
        index = 0
        for digit in reversed(digits):
            index = index * self.p + digit
        return self.from_index(index)

    def from_coefficients(self, coefficients: Sequence) -> FieldElement:
        """Build from coefficients over the level directly below the top."""
        if len(self.levels) == 1:
            (value,) = coefficients
            return self(value)
        below = self.subfield(self.level_cardinalities[-2])
        values = tuple(below(c).value for c in coefficients)
        values += (below.top.zero,) * (self.top.degree - len(values))
        return FieldElement(self, values)

    def to_coefficients(self, element: FieldElement) -> List[FieldElement]:
        """Coefficients of ``element`` over the level directly below the top."""
        if len(self.levels) == 1:
            return [element]
        below = self.subfield(self.level_cardinalities[-2])
        return [FieldElement(below, c) for c in element.value]

    def gen(self) -> FieldElement:
        """The class of ``X`` in the top extension level."""
        if len(self.levels) == 1:
            raise InvalidSubfield(f"{self} is a prime field")
        return self.from_coefficients([0, 1])

    def subfield(self, cardinality: int) -> "FieldDesc":
        """Return the tower level of the given cardinality."""
        if cardinality == self.cardinality:
            return self
        for i, card in enumerate(self.level_cardinalities):
            if card == cardinality:
                if cardinality not in self._subfields:
                    self._subfields[cardinality] = FieldDesc(self.p, self.levels[: i + 1])
                return self._subfields[cardinality]
        raise InvalidSubfield(
            f"{cardinality} is not a level of {self} (levels {self.level_cardinalities})"
        )

    def lift(self, element: FieldElement) -> FieldElement:
        """Embed an element of a tower level below into this field."""
        source = element.field
        depth = len(source.levels)
        if depth > len(self.levels) or self._key[:depth] != source._key:
            raise FieldMismatch(f"{source} is not a subfield of {self}")
        value = element.value
        for level in self.levels[depth:]:
            value = level.embed(value)
        return FieldElement(self, value)

    def nonresidue(self) -> FieldElement:
        """First quadratic non-residue in canonical order."""
        if self._nonresidue is None:
            for i in range(2, self.cardinality):
                candidate = self.from_index(i)
                if not candidate.is_square():
                    self._nonresidue = candidate
                    break
        return self._nonresidue

    def random_element(self, rng) -> FieldElement:  # noqa: D102
        return self.from_index(rng.randrange(self.cardinality))

    def extend(self, degree: int, modulus: Optional[Polynomial] = None) -> "FieldDesc":
        """Return ``self[X]/(modulus)``, choosing the smallest modulus if omitted."""
        if degree < 1:
            raise ValueError(f"extension degree must be positive, got {degree}")
        if degree == 1 and modulus is None:
            return self
        key = (degree, modulus)
        if key not in self._extensions:
            if modulus is None:
                modulus = smallest_irreducible(self, degree)
            else:
                modulus = Polynomial(self, modulus.coeffs)
                if modulus.degree() != degree or not modulus.is_monic():
                    raise ReducibleModulus(
                        f"modulus {modulus} is not monic of degree {degree}"
                    )
                if not is_irreducible(modulus):
                    raise ReducibleModulus(f"{modulus} is reducible over {self}")
            level = _ExtensionLevel(
                self.top, tuple(c.value for c in modulus.coeffs[:degree])
            )
            self._extensions[key] = FieldDesc(self.p, self.levels + (level,))
        return self._extensions[key]

    def modulus(self) -> Polynomial:
        """Modulus of the top level over the level below it."""
        if len(self.levels) == 1:
            raise InvalidSubfield(f"{self} is a prime field")
        below = self.subfield(self.level_cardinalities[-2])
        return Polynomial(
            below, [FieldElement(below, c) for c in self.top.modulus] + [1]
        )


def is_irreducible(modulus: Polynomial) -> bool:
    """Check ``gcd(X^(Q^i) - X, m) = 1`` for ``i < deg m`` and ``X^(Q^deg m) = X``.

    ``Q`` is the cardinality of the coefficient field.
    """
    degree = modulus.degree()
    if degree < 1:
        return False
    if degree == 1:
        return True
    field = modulus.field
    x = Polynomial.x(field)
    power = x
    for _ in range(1, degree):
        power = power.pow_mod(field.cardinality, modulus)
        if poly_gcd(power - x, modulus).degree() > 0:
            return False
    return power.pow_mod(field.cardinality, modulus) == x % modulus


def smallest_irreducible(field: FieldDesc, degree: int) -> Polynomial:
    """Lexicographically smallest monic irreducible polynomial of ``degree``.

    The lower coefficients are read as digits of a counter in canonical order
    with the constant term varying fastest.
    """
    for counter in range(field.cardinality**degree):
        coeffs = []
        for _ in range(degree):
            counter, digit = divmod(counter, field.cardinality)
            coeffs.append(field.from_index(digit))
        candidate = Polynomial(field, coeffs + [field.one()])
        if is_irreducible(candidate):
            return candidate
    raise ReducibleModulus(f"no irreducible polynomial of degree {degree} over {field}")


def prime_field(p: int) -> FieldDesc:
    """Return ``F_p`` after validating ``p``."""
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not sympy.isprime(p):
        raise NotPrime(f"{p} is not a prime")
    return _prime_field(p)


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldDesc:
    return FieldDesc(p, (_PrimeLevel(p),))


def make_field(
    p: int, degrees: Sequence[int], moduli: Optional[Sequence] = None
) -> FieldDesc:
    """Build the tower ``F_p ⊂ F_{p^d1} ⊂ F_{p^(d1 d2)} ⊂ ...``.

    :param p: odd prime characteristic.
    :param degrees: degree of each tower step; a step of degree 1 adds nothing.
    :param moduli: optional modulus per step, as a :class:`Polynomial` or a
        little-endian coefficient sequence over the level below.
    :return: the top field of the tower.
    """
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError(f"degrees must be a nonempty list of positive integers: {degrees}")
    field = prime_field(p)
    moduli = list(moduli or [])
    moduli += [None] * (len(degrees) - len(moduli))
    for degree, modulus in zip(degrees, moduli):
        if modulus is not None and not isinstance(modulus, Polynomial):
            modulus = Polynomial(field, [field(c) for c in modulus])
        if degree == 1:
            continue
        field = field.extend(degree, modulus)
    return field


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` (one of add, sub, mul, div) to two elements of one field."""
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatch(f"elements of {a.field} and {b.field} cannot be combined")
    operations = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in operations:
        raise ValueError(f"unknown field operation '{op}'")
    return operations[op]()


def frobenius_power(a: FieldElement, sub_cardinality: int, j: int) -> FieldElement:
    """Return ``a^(q^j)`` for a tower level of cardinality ``q``."""
    if sub_cardinality not in a.field.level_cardinalities:
        raise InvalidSubfield(
            f"{sub_cardinality} is not a level of {a.field} "
            f"(levels {a.field.level_cardinalities})"
        )
    if j < 0:
        raise ValueError(f"Frobenius exponent must be non-negative, got {j}")
    if j == 0 or a.is_zero():
        return a
    return a ** pow(sub_cardinality, j, a.field.cardinality - 1)


def enumerate_field(
    fd: FieldDesc, budget: int = FIELD_ENUMERATION_BUDGET
) -> Iterator[FieldElement]:
    """Yield every element of ``fd`` once, in canonical order."""
    if fd.cardinality > budget:
        raise TooLarge("field enumeration", fd.cardinality, budget)
    return (fd.from_index(i) for i in range(fd.cardinality))


def parse_field_spec(text: str) -> Tuple[int, Tuple[int, ...], List]:
    """Split ``p^d1^d2[:m1/m2]`` into ``(p, degrees, moduli)``.

    Moduli are returned as lists of coefficient texts (``None`` when absent)
    and are resolved by :func:`build_field_spec`.
    """
    spec, _, moduli_text = text.strip().partition(":")
    parts = spec.split("^")
    try:
        p = int(parts[0])
        degrees = tuple(int(d) for d in parts[1:]) or (1,)
    except ValueError:
        raise ValueError(f"'{text}' is not a field spec of the form p^d1^d2")
    moduli: List = []
    if moduli_text:
        for chunk in moduli_text.split("/"):
            moduli.append([c.strip() for c in chunk.split(",")] if chunk.strip() else None)
    return p, degrees, moduli


def build_field_spec(text: str) -> List[FieldDesc]:
    """Build every level named by a field spec, bottom first."""
    p, degrees, moduli = parse_field_spec(text)
    field = prime_field(p)
    fields = []
    moduli = list(moduli) + [None] * (len(degrees) - len(moduli))
    for degree, coefficients in zip(degrees, moduli):
        modulus = None
        if coefficients is not None:
            modulus = Polynomial(field, [field(c) for c in coefficients])
        if degree > 1 or modulus is not None:
            field = field.extend(degree, modulus)
        fields.append(field)
    return fields


def format_field_spec(levels: Sequence[FieldDesc]) -> str:
    """Inverse of :func:`build_field_spec`, moduli included."""
    p = levels[0].p
    degrees = []
    moduli = []
    previous = prime_field(p)
    for field in levels:
        degree = _log(field.cardinality, previous.cardinality)
        degrees.append(str(degree))
        if degree > 1:
            moduli.append(",".join(c.to_text() for c in field.modulus().coeffs))
        else:
            moduli.append("")
        previous = field
    text = f"{p}^" + "^".join(degrees)
    if any(moduli):
        text += ":" + "/".join(moduli)
    return text


def _log(value: int, base: int) -> int:
    exponent = 0
    while value > 1:
        value //= base
        exponent += 1
    return exponent
