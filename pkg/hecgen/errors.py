# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exceptions raised by hecgen modules."""


class HecgenError(Exception):
    """Base class of every hecgen error."""


class InvariantFailure(HecgenError):
    """An internal consistency check failed."""


# ff


class NotPrime(HecgenError, ValueError):
    """Field characteristic is not a prime."""


class EvenCharacteristic(HecgenError, ValueError):
    """Characteristic 2 is not supported."""


class ReducibleModulus(HecgenError, ValueError):
    """A supplied extension modulus is not irreducible."""


class DivisionByZero(HecgenError, ZeroDivisionError):
    """Division by the zero element."""


class FieldMismatch(HecgenError, TypeError):
    """Operands belong to different fields."""


class InvalidSubfield(HecgenError, ValueError):
    """Cardinality does not name a level of the field tower."""


class TooLarge(HecgenError):
    """An exhaustive computation exceeds its budget."""

    def __init__(self, what: str, size: int, budget: int):
        """Record what was requested and the budget it exceeded."""
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what} of size {size} exceeds the budget {budget}")


# curve


class SingularCurve(HecgenError, ValueError):
    """The quintic is not squarefree."""


class NonIntegralS2(InvariantFailure):
    """Point counts produce a non-integral s2."""


# jacobian


class NotMonic(HecgenError, ValueError):
    """Mumford u polynomial is not monic."""


class DegreeViolation(HecgenError, ValueError):
    """Mumford degree conditions deg v < deg u <= 2 do not hold."""


class NotOnJacobian(HecgenError, ValueError):
    """u does not divide h - v^2."""


class CurveNotOverSubfield(HecgenError, ValueError):
    """Frobenius requested for a curve not defined over the given subfield."""


class OrderViolation(HecgenError, ValueError):
    """The claimed multiple does not annihilate the divisor."""


class NoAdmissiblePrime(HecgenError):
    """The group order has no prime factor different from the characteristic."""


class SamplingExhausted(HecgenError):
    """Random sampling gave up after its retry budget."""


class CharacteristicDivides(HecgenError, ValueError):
    """Torsion level shares a factor with the characteristic."""


# frobgen


class TableMismatch(HecgenError, ValueError):
    """Precomputed Frobenius table does not belong to the divisor or is too short."""


class PoleConventionViolation(InvariantFailure):
    """A divisor on the pole locus produced a nonzero sequence term."""


# lincomp


class EmptySequence(HecgenError, ValueError):
    """Linear complexity of an empty sequence was requested."""


class PreconditionViolated(HecgenError, ValueError):
    """Input does not meet the preconditions of the dependence check."""


# grant


class WrongWeight(HecgenError, ValueError):
    """Divisor weight is not accepted by the operation."""


class NotInU(HecgenError, ValueError):
    """Point is not in the affine part of the Grant model."""


class QFormVanishes(HecgenError, ArithmeticError):
    """The q-form of the pair is zero; the addition formulas do not apply."""


class ConventionUnresolved(InvariantFailure):
    """No Mumford to Grant coordinate convention passed calibration."""


# harness


class ConfigParse(HecgenError, ValueError):
    """Experiment configuration could not be parsed."""

    def __init__(self, message: str, line: int = 0, column: int = 0, key: str = ""):
        """Keep the position of the offending text."""
        self.line = line
        self.column = column
        self.key = key
        where = f"line {line}, column {column}"
        if key:
            where += f", key '{key}'"
        super().__init__(f"{where}: {message}")


class HypothesisUnmet(HecgenError):
    """A hypothesis of the lower bound does not hold for the instance."""
