# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Responsible for running experiments and suites of them."""

import concurrent.futures
import dataclasses
import time
from typing import Dict, List, Optional

from hecgen.curve import char_poly, charpoly_irreducible
from hecgen.errors import HypothesisUnmet, InvariantFailure
from hecgen.frobgen import (
    CoordinateFunction,
    collision_stats,
    generate_sequence,
    theorem_bound,
)
from hecgen.harness.config import ExperimentConfig
from hecgen.harness.utils import load_curve, logger
from hecgen.jacobian import find_prime_order_element
from hecgen.lincomp import berlekamp_massey


@dataclasses.dataclass
class ExperimentRecord:
    """One row of an experiment report."""

    index: int
    q: int
    n: int
    k: int
    ell: int
    deg_f: int
    length: int
    linear_complexity: int
    bound: float
    bound_exact: str
    nontrivial: bool
    irreducible: bool
    ell_large: bool
    hypotheses_met: bool
    distinct: int
    max_t: int
    collision_e: Optional[int]
    collision_vacuous: bool
    collision_holds: bool
    digit_order: str
    coordinate: str
    curve: str
    seed: int
    wall_time: float

    def as_row(self) -> Dict:
        """Field values with ``None`` written as an empty cell."""
        return {
            key: "" if value is None else value
            for key, value in dataclasses.asdict(self).items()
        }


def run_experiment(
    cfg: ExperimentConfig, index: int = 0, strict: bool = False
) -> ExperimentRecord:
    """Generate ``w_m`` for one configuration and measure its linear complexity.

    Unmet hypotheses (reducible ``chi`` or ``ell < q^{n+8}``) are recorded,
    and raised as :class:`HypothesisUnmet` only when ``strict``.
    """
    start = time.perf_counter()
    curve = load_curve(cfg.field, cfg.curve, cfg.seed)
    q = curve.q
    irreducible = bool(charpoly_irreducible(char_poly(curve)))
    if not irreducible:
        logger.warning(f"characteristic polynomial of {curve} is reducible")

    element = find_prime_order_element(curve, cfg.n, rng_seed=cfg.seed)
    f = CoordinateFunction(tag=cfg.coordinate)
    sequence = generate_sequence(
        element.divisor, cfg.k, f, element.ell, cfg.digit_order, cfg.budget
    )
    recurrence = berlekamp_massey(sequence)
    bound = theorem_bound(q, cfg.n, cfg.k, element.ell, f.degree)
    stats = collision_stats(element.divisor, cfg.k, element.ell, cfg.digit_order, cfg.budget)
    if not stats.proposition_holds:
        raise InvariantFailure(
            f"max T = {stats.max_t} exceeds the collision bound for e in {stats.admissible_e}"
        )
    ell_large = element.ell >= q ** (cfg.n + 8)
    record = ExperimentRecord(
        index=index,
        q=q,
        n=cfg.n,
        k=cfg.k,
        ell=element.ell,
        deg_f=f.degree,
        length=len(sequence),
        linear_complexity=recurrence.order,
        bound=float(bound),
        bound_exact=str(bound.bound),
        nontrivial=bound.nontrivial,
        irreducible=irreducible,
        ell_large=ell_large,
        hypotheses_met=irreducible and ell_large,
        distinct=stats.distinct,
        max_t=stats.max_t,
        collision_e=stats.largest_e,
        collision_vacuous=stats.vacuous,
        collision_holds=stats.proposition_holds,
        digit_order=cfg.digit_order.value,
        coordinate=cfg.coordinate,
        curve=curve.b_text(),
        seed=cfg.seed,
        wall_time=round(time.perf_counter() - start, 6),
    )
    if not 0 <= record.linear_complexity <= record.length:
        raise InvariantFailure(f"L = {record.linear_complexity} outside [0, {record.length}]")
    if record.nontrivial:
        logger.info(
            f"q={q} n={cfg.n} k={cfg.k}: non-trivial regime, L={record.linear_complexity}"
        )
    if strict and not record.hypotheses_met:
        raise HypothesisUnmet(
            f"q={q} n={cfg.n} k={cfg.k}: irreducible={irreducible}, "
            f"ell={element.ell} >= q^(n+8) is {ell_large}"
        )
    return record


def run_suite(cfg: ExperimentConfig, workers: Optional[int] = None) -> List[ExperimentRecord]:
    """Run every grid point; records come back sorted by grid index.

    The first failure in grid order is re-raised after all points finished.
    """
    points = cfg.grid_points() if cfg.is_grid else [cfg]
    workers = workers or cfg.workers
    logger.info(f"Running {len(points)} experiments on {workers} workers...")
    records: List[ExperimentRecord] = []
    failures = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(run_experiment, point, i): i for i, point in enumerate(points)
        }
        for future in concurrent.futures.as_completed(futures):
            try:
                records.append(future.result())
            except Exception as e:
                logger.error(f"Experiment {futures[future]} failed: {e}")
                failures[futures[future]] = e
    if failures:
        raise failures[min(failures)]
    return sorted(records, key=lambda r: r.index)


def unmet_hypotheses(records: List[ExperimentRecord]) -> List[int]:
    """Indices of records whose hypotheses do not hold."""
    return [r.index for r in records if not r.hypotheses_met]
