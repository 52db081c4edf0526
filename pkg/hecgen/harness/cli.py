#!/usr/bin/env python
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Combines hecgen modules into CLI commands."""

import logging
import sys
from typing import NoReturn, Optional

import click

from hecgen.config import (
    ACCEPTANCE_DIGIT_ORDER,
    DEFAULT_SEED,
    LEX_ENUMERATION_BUDGET,
    COORDINATE_TAGS,
    DigitOrder,
    ExitCode,
)
from hecgen.curve import char_poly, curve_info, root_moduli_ok
from hecgen.errors import ConfigParse, HecgenError, HypothesisUnmet, InvariantFailure
from hecgen.ff import format_field_spec
from hecgen.frobgen import CoordinateFunction, collision_stats, generate_sequence
from hecgen.grant import verify_intersection_lemmas
from hecgen.harness.config import ExperimentConfig, load_config
from hecgen.harness.experiment import run_suite, unmet_hypotheses
from hecgen.harness.report import (
    compare_golden,
    read_sequence_csv,
    write_report,
    write_rows,
    write_sequence_csv,
)
from hecgen.harness.utils import display_message, load_curve, logger
from hecgen.jacobian import find_prime_order_element
from hecgen.lincomp import berlekamp_massey, complexity_profile

logging.basicConfig(
    format="%(asctime)s | %(levelname)s | %(message)s",
    level=logging.WARNING,
    force=True,
)


def exit_code_for(error: Exception) -> ExitCode:
    """Map an error to the documented process exit code."""
    if isinstance(error, HypothesisUnmet):
        return ExitCode.hypothesis_unmet
    if isinstance(error, InvariantFailure):
        return ExitCode.invariant_failure
    return ExitCode.usage


def _abort(action: str, error: Exception) -> NoReturn:
    logger.error(f"Something went wrong during {action}: {error}")
    sys.exit(exit_code_for(error).value)


class HecgenGroup(click.Group):
    """Command group whose usage errors exit with :attr:`ExitCode.usage`."""

    def make_context(self, *args, **kwargs):  # noqa: D102
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = ExitCode.usage.value
            raise

    def invoke(self, ctx):  # noqa: D102
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = ExitCode.usage.value
            raise


@click.group(cls=HecgenGroup)
@click.option(
    "--verbose", "-v", count=True, help="Log progress (-v) or everything (-vv)."
)
def hecgen(verbose: int):  # noqa: D301
    """hecgen - Frobenius endomorphism generators on genus-2 Jacobians.

    Builds a curve ``Y^2 = h(X)`` over ``F_q``, picks a divisor of prime order
    in ``J_C(F_{q^n})``, emits the sequence ``w_m = f(sum m_j sigma^j(D))`` and
    measures its linear complexity.

    How to inspect a curve and generate a sequence:

        .. code-block:: console

        \b
        $ hecgen curve-info --field 3 --curve 0,0,1,0,1 --n 4
        $ hecgen find-generator --field 3 --curve 0,0,1,0,1 --n 4 --seed 7
        $ hecgen gen-sequence --field 3 --curve 0,0,1,0,1 --n 4 --k 2 --out seq.csv
        $ hecgen lincomp --in seq.csv --profile

    How to run an experiment grid and lock its results:

        .. code-block:: console

        \b
        $ hecgen experiment --config grid.cfg --out report.csv --golden golden.csv
    """
    logger.setLevel(
        {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    )


field_option = click.option(
    "--field", default="3", show_default=True, help="Base field F_q, e.g. '3' or '3^2'."
)

curve_option = click.option(
    "--curve",
    help="Coefficients b1,...,b5; random (seeded) when omitted.",
    type=str,
)

n_option = click.option(
    "--n", "n", default=2, show_default=True, type=click.IntRange(min=1),
    help="Extension degree of the working field F_{q^n}.",
)

k_option = click.option(
    "--k", "k", default=1, show_default=True, type=click.IntRange(min=1),
    help="Number of digits per digit vector.",
)

seed_option = click.option(
    "--seed", default=None, type=click.IntRange(min=0, max=2**64 - 1),
    help=f"Random seed [default {DEFAULT_SEED}]",
)

out_option = click.option(
    "--out", type=click.Path(dir_okay=False), help="Output CSV file [default stdout]."
)

budget_option = click.option(
    "--budget", default=None, type=click.IntRange(min=1),
    help=f"Largest number of digit vectors [default {LEX_ENUMERATION_BUDGET}]",
)

digit_order_option = click.option(
    "--digit-order",
    type=click.Choice([o.value for o in DigitOrder]),
    default=ACCEPTANCE_DIGIT_ORDER.value,
    show_default=True,
    help="Order of the digit set inside the lexicographic walk.",
)


def _seed(seed: Optional[int]) -> int:
    return DEFAULT_SEED if seed is None else seed


@hecgen.command(name="curve-info")
@field_option
@curve_option
@n_option
@seed_option
@out_option
def curve_info_command(
    field: str, curve: Optional[str], n: int, seed: Optional[int], out: Optional[str]
) -> NoReturn:
    """Print point counts, chi and Jacobian orders for n = 1..N."""
    try:
        c = load_curve(field, curve, _seed(seed))
        root_moduli_ok(char_poly(c))
        write_rows(curve_info(c, n), out)
    except (HecgenError, ValueError) as e:
        _abort("curve inspection", e)


@hecgen.command(name="find-generator")
@field_option
@curve_option
@n_option
@seed_option
def find_generator_command(
    field: str, curve: Optional[str], n: int, seed: Optional[int]
) -> NoReturn:
    """Find a divisor of the largest prime order ell != p."""
    try:
        c = load_curve(field, curve, _seed(seed))
        element = find_prime_order_element(c, n, rng_seed=_seed(seed))
    except (HecgenError, ValueError) as e:
        _abort("generator search", e)
    click.echo(f"curve={c.b_text()}")
    click.echo(f"group_order={element.group_order}")
    click.echo(f"ell={element.ell}")
    click.echo(f"cofactor={element.cofactor}")
    click.echo(f"divisor={element.divisor.to_text()}")


@hecgen.command(name="gen-sequence")
@field_option
@curve_option
@n_option
@k_option
@click.option(
    "--f", "coordinate", type=click.Choice(COORDINATE_TAGS), default="u1",
    show_default=True, help="Mumford coordinate used as the function f.",
)
@digit_order_option
@seed_option
@budget_option
@out_option
def gen_sequence_command(
    field: str,
    curve: Optional[str],
    n: int,
    k: int,
    coordinate: str,
    digit_order: str,
    seed: Optional[int],
    budget: Optional[int],
    out: Optional[str],
) -> NoReturn:
    """Generate the sequence w_m and write it as one CSV column."""
    try:
        c = load_curve(field, curve, _seed(seed))
        element = find_prime_order_element(c, n, rng_seed=_seed(seed))
        f = CoordinateFunction(tag=coordinate)
        sequence = generate_sequence(
            element.divisor,
            k,
            f,
            element.ell,
            DigitOrder(digit_order),
            budget or LEX_ENUMERATION_BUDGET,
        )
        header = {
            "schema": "hecgen-sequence/1",
            "field": format_field_spec(_tower(element.divisor.jacobian.field)),
            "q": c.q,
            "n": n,
            "k": k,
            "ell": element.ell,
            "deg_f": f.degree,
            "coordinate": coordinate,
            "digit_order": digit_order,
            "curve": c.b_text(),
            "divisor": element.divisor.to_text(),
        }
        write_sequence_csv(sequence, out, header)
    except (HecgenError, ValueError) as e:
        _abort("sequence generation", e)
    if out:
        display_message(f"{len(sequence)} terms written to {out}", "gen-sequence")


def _tower(fd) -> list:
    return [fd.subfield(card) for card in fd.level_cardinalities]


@hecgen.command(name="lincomp")
@click.option(
    "--in", "path", required=True, type=click.Path(exists=True, dir_okay=False),
    help="Sequence CSV written by gen-sequence.",
)
@click.option("--profile", is_flag=True, help="Also print the complexity profile.")
@out_option
def lincomp_command(path: str, profile: bool, out: Optional[str]) -> NoReturn:
    """Print the length N and linear complexity L of a sequence."""
    try:
        sequence = read_sequence_csv(path)
        recurrence = berlekamp_massey(sequence)
    except (HecgenError, ValueError) as e:
        _abort("linear complexity computation", e)
    click.echo(f"N={len(sequence)}")
    click.echo(f"L={recurrence.order}")
    if profile:
        write_rows(
            (
                {"t": t, "L": value}
                for t, value in enumerate(complexity_profile(sequence), start=1)
            ),
            out,
        )


@hecgen.command(name="collisions")
@field_option
@curve_option
@n_option
@k_option
@digit_order_option
@seed_option
@budget_option
def collisions_command(
    field: str,
    curve: Optional[str],
    n: int,
    k: int,
    digit_order: str,
    seed: Optional[int],
    budget: Optional[int],
) -> NoReturn:
    """Count collisions T_k(Q) and check the collision bound."""
    try:
        c = load_curve(field, curve, _seed(seed))
        element = find_prime_order_element(c, n, rng_seed=_seed(seed))
        stats = collision_stats(
            element.divisor,
            k,
            element.ell,
            DigitOrder(digit_order),
            budget or LEX_ENUMERATION_BUDGET,
        )
        if not stats.proposition_holds:
            raise InvariantFailure(
                f"max T = {stats.max_t} breaks the bound for e in {stats.admissible_e}"
            )
    except (HecgenError, ValueError) as e:
        _abort("collision counting", e)
    click.echo(f"ell={stats.ell}")
    click.echo(f"vectors={stats.q ** (2 * stats.k)}")
    click.echo(f"distinct={stats.distinct}")
    click.echo(f"max_t={stats.max_t}")
    click.echo(f"histogram={';'.join(f'{t}:{c}' for t, c in stats.histogram.items())}")
    click.echo(f"admissible_e={','.join(map(str, stats.admissible_e))}")
    click.echo(f"vacuous={stats.vacuous}")
    click.echo(f"informative={stats.informative}")


@hecgen.command(name="grant-verify")
@field_option
@curve_option
@click.option(
    "--m", "m", default=1, show_default=True, type=click.IntRange(min=1),
    help="Extension degree of the enumerated field F_{q^m}.",
)
@seed_option
@out_option
def grant_verify_command(
    field: str, curve: Optional[str], m: int, seed: Optional[int], out: Optional[str]
) -> NoReturn:
    """Run the Grant model checks and print a pass/fail table."""
    try:
        c = load_curve(field, curve, _seed(seed))
        report = verify_intersection_lemmas(c, m, seed=_seed(seed))
    except (HecgenError, ValueError) as e:
        _abort("Grant model verification", e)
    write_rows(report.rows(), out)
    if not report.passed:
        failed = [name for name, verdict in report.checks.items() if verdict is False]
        logger.error(f"Grant model checks failed: {', '.join(failed)}")
        sys.exit(ExitCode.invariant_failure.value)


@hecgen.command(name="experiment")
@click.option(
    "--config", "config_path", type=click.Path(exists=True, dir_okay=False),
    help="key=value experiment configuration; defaults apply when omitted.",
)
@seed_option
@budget_option
@out_option
@click.option(
    "--golden", type=click.Path(dir_okay=False),
    help="Compare with this golden CSV, writing it when absent.",
)
@click.option(
    "--strict", is_flag=True, help="Exit with code 2 when a hypothesis is unmet."
)
@click.option("--workers", type=click.IntRange(min=1), help="Threads for grid points.")
def experiment_command(
    config_path: Optional[str],
    seed: Optional[int],
    budget: Optional[int],
    out: Optional[str],
    golden: Optional[str],
    strict: bool,
    workers: Optional[int],
) -> NoReturn:
    """Run one experiment or a grid and write the CSV report."""
    try:
        cfg = load_config(config_path) if config_path else ExperimentConfig()
        cfg = cfg.with_overrides(seed=seed, budget=budget)
        records = run_suite(cfg, workers)
    except ConfigParse as e:
        _abort("configuration parsing", e)
    except HecgenError as e:
        _abort("experiment run", e)
    write_report(records, out)
    if golden:
        created, differences = compare_golden(records, golden)
        if differences:
            for difference in differences:
                logger.error(f"golden mismatch: {difference}")
            sys.exit(ExitCode.invariant_failure.value)
        if not created:
            display_message(f"report matches {golden}", "experiment")
    unmet = unmet_hypotheses(records)
    if unmet:
        logger.warning(f"hypotheses unmet for grid points {unmet}")
        if strict:
            sys.exit(ExitCode.hypothesis_unmet.value)
