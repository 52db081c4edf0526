# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""``hecgen`` configuration."""

import os
from enum import Enum


def _env_int(name: str, default: int) -> int:
    value = os.getenv(f"HECGEN_{name}")
    return int(value) if value else default


FIELD_ENUMERATION_BUDGET = _env_int("FIELD_ENUMERATION_BUDGET", 2**24)
"""Largest field cardinality that may be enumerated element by element."""

JACOBIAN_ENUMERATION_BUDGET = _env_int("JACOBIAN_ENUMERATION_BUDGET", 10**6)
"""Largest upper bound ``(q^{n/2}+1)^4`` accepted by exhaustive Jacobian scans."""

LEX_ENUMERATION_BUDGET = _env_int("LEX_ENUMERATION_BUDGET", 2**22)
"""Largest number ``q^{2k}`` of digit vectors produced by the generator."""

GRANT_ENUMERATION_BUDGET = _env_int("GRANT_ENUMERATION_BUDGET", 10**7)
"""Largest grid ``(q^m)^3`` scanned when enumerating the affine Grant part."""

BRUTE_FORCE_LENGTH_BUDGET = _env_int("BRUTE_FORCE_LENGTH_BUDGET", 32)
"""Longest sequence accepted by the Gaussian-elimination linear complexity oracle."""

BRUTE_FORCE_FIELD_BUDGET = _env_int("BRUTE_FORCE_FIELD_BUDGET", 9)
"""Largest field accepted by the linear complexity oracle."""

SAMPLING_RETRY_BUDGET = _env_int("SAMPLING_RETRY_BUDGET", 200)
"""Random divisor draws attempted before giving up on a prime order element."""

INTERSECTION_PAIR_BUDGET = _env_int("INTERSECTION_PAIR_BUDGET", 400)
"""Pairs ``(R, R')`` sampled by the Grant intersection check."""

WORKERS_DEFAULT_COUNT = _env_int("WORKERS", 1)
"""Threads used to run the grid points of an experiment suite."""

DEFAULT_SEED = 0
"""Seed used when neither the config file nor the CLI provides one."""

CSV_SCHEMA_VERSION = "hecgen-experiment/1"
"""Schema tag written in the header row of every experiment report."""

TORSION_BOUND_TWO = 16
"""Number of 2-torsion points of a genus-2 Jacobian over the algebraic closure."""

INTERSECTION_LEMMA_BOUND = 20
"""Upper bound on common zeros of two q-forms inside the affine Grant part."""

THETA_TRANSLATE_BOUND = 2
"""Upper bound on the overlap between a translate of Theta and Theta."""

ROOT_MODULUS_TOLERANCE = 1e-6
"""Relative tolerance of the numeric root-modulus diagnostic."""


class DigitOrder(str, Enum):
    """Total order used on the digit set when enumerating digit vectors.

    Example:
        DigitOrder.ascending == "ascending"  # True
    """

    ascending = "ascending"
    balanced = "balanced"


ACCEPTANCE_DIGIT_ORDER = DigitOrder.ascending
"""Digit order frozen for acceptance runs and golden files."""


class ExitCode(int, Enum):
    """Process exit codes of the ``hecgen`` command."""

    success = 0
    usage = 1
    hypothesis_unmet = 2
    invariant_failure = 3


COORDINATE_TAGS = ("u1", "u0", "v1", "v0")
"""Mumford coordinates available as sequence coordinate functions."""
