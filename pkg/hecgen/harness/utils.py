# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Contains common functions shared by harness modules."""

import datetime
import logging
import random
from typing import Optional

import click
import sympy

from hecgen.curve import CurveParams, char_poly, charpoly_irreducible, make_curve, random_curve
from hecgen.ff import FieldDesc, build_field_spec

logger = logging.getLogger("hecgen")
logger.setLevel(logging.INFO)

CURVE_SELECTION_ATTEMPTS = 50
"""Random curves drawn before accepting one with reducible ``chi``."""


def display_message(msg: str, component: str = "hecgen") -> None:
    """Display a timestamped status line.

    :param msg: message to display
    :param component: tag printed before the message
    :type msg: str
    :type component: str
    """
    now = datetime.datetime.now().strftime("%Y-%m-%dT%H:%M:%S")
    click.secho("[{0}] ".format(now), bold=True, nl=False, fg="green")
    click.secho("{0}: ".format(component), bold=True, nl=False, fg="yellow")
    click.secho("{0}".format(msg), bold=True)


def load_field(spec: str) -> FieldDesc:
    """Top level of a field spec such as ``3``, ``3^2`` or ``3^2:1,0,1``."""
    return build_field_spec(spec)[-1]


def field_spec_for(q: int) -> str:
    """Field spec of ``F_q`` for a prime power ``q``."""
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, d),) = factors.items()
    return f"{p}^{d}" if d > 1 else str(p)


def parse_curve(text: str, fd: FieldDesc) -> CurveParams:
    """Curve from ``b1,...,b5`` with each coefficient in ``;``-digit form."""
    coefficients = [fd.from_text(part) for part in text.split(",")]
    return make_curve(fd, coefficients)


def select_curve(fd: FieldDesc, seed: int) -> CurveParams:
    """First seeded random curve whose ``chi`` is irreducible.

    After :data:`CURVE_SELECTION_ATTEMPTS` draws the last curve is returned
    with a warning.
    """
    rng = random.Random(f"curve:{fd.cardinality}:{seed}")
    curve = None
    for _ in range(CURVE_SELECTION_ATTEMPTS):
        curve = random_curve(fd, rng)
        if charpoly_irreducible(char_poly(curve)):
            return curve
    logger.warning(f"no curve with irreducible chi found over {fd}, using {curve}")
    return curve


def load_curve(field_spec: str, curve_text: Optional[str], seed: int) -> CurveParams:
    """Curve from the command line, or a seeded random one when absent."""
    fd = load_field(field_spec)
    if curve_text:
        return parse_curve(curve_text, fd)
    return select_curve(fd, seed)
