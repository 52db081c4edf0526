# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Plain ``key=value`` experiment configuration.

One key per line; blank lines and lines starting with ``#`` are skipped.

.. code-block:: text

    field = 3
    n = 4
    k = 2
    coordinate = u1
    seed = 7
    grid.q = 3,5
    grid.n = 1,2,3,4
    grid.k = 1,2
"""

import dataclasses
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from hecgen.config import (
    ACCEPTANCE_DIGIT_ORDER,
    COORDINATE_TAGS,
    DEFAULT_SEED,
    LEX_ENUMERATION_BUDGET,
    WORKERS_DEFAULT_COUNT,
    DigitOrder,
)
from hecgen.errors import ConfigParse
from hecgen.ff import parse_field_spec
from hecgen.harness.utils import field_spec_for

SEED_LIMIT = 2**64
"""Seeds are unsigned 64-bit integers."""


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    """One experiment, or a grid of them when any ``grid.*`` key is set."""

    field: str = "3"
    n: int = 2
    curve: Optional[str] = None
    k: int = 1
    coordinate: str = "u1"
    seed: int = DEFAULT_SEED
    budget: int = LEX_ENUMERATION_BUDGET
    digit_order: DigitOrder = ACCEPTANCE_DIGIT_ORDER
    workers: int = WORKERS_DEFAULT_COUNT
    grid_q: Optional[Tuple[int, ...]] = None
    grid_n: Optional[Tuple[int, ...]] = None
    grid_k: Optional[Tuple[int, ...]] = None

    @property
    def is_grid(self) -> bool:  # noqa: D102
        return any(g is not None for g in (self.grid_q, self.grid_n, self.grid_k))

    def grid_points(self) -> List["ExperimentConfig"]:
        """Single configurations in grid order; points with ``k > n`` are skipped."""
        qs = self.grid_q if self.grid_q is not None else ()
        ns = self.grid_n if self.grid_n is not None else (self.n,)
        ks = self.grid_k if self.grid_k is not None else (self.k,)
        points = []
        for q in qs:
            for n in ns:
                for k in ks:
                    if k > n:
                        continue
                    points.append(
                        dataclasses.replace(
                            self,
                            field=field_spec_for(q),
                            n=n,
                            k=k,
                            curve=None,
                            grid_q=None,
                            grid_n=None,
                            grid_k=None,
                        )
                    )
        return points

    def with_overrides(self, **overrides) -> "ExperimentConfig":
        """Copy with the non-``None`` overrides applied."""
        return dataclasses.replace(
            self, **{key: value for key, value in overrides.items() if value is not None}
        )


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < SEED_LIMIT:
        raise ValueError(f"seed must lie in [0, 2^64), got {value}")
    return value


def _field(text: str) -> str:
    parse_field_spec(text)
    return text.strip()


def _curve(text: str) -> str:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 5 or not all(parts):
        raise ValueError(f"expected 5 comma-separated coefficients, got {len(parts)}")
    return ",".join(parts)


def _coordinate(text: str) -> str:
    if text not in COORDINATE_TAGS:
        raise ValueError(f"expected one of {', '.join(COORDINATE_TAGS)}")
    return text


def _integers(text: str) -> Tuple[int, ...]:
    if not text:
        return ()
    return tuple(_positive(part.strip()) for part in text.split(","))


PARSERS: Dict[str, Tuple[str, Callable[[str], object]]] = {
    "field": ("field", _field),
    "n": ("n", _positive),
    "curve": ("curve", _curve),
    "k": ("k", _positive),
    "coordinate": ("coordinate", _coordinate),
    "seed": ("seed", _seed),
    "budget": ("budget", _positive),
    "digit_order": ("digit_order", DigitOrder),
    "workers": ("workers", _positive),
    "grid.q": ("grid_q", _integers),
    "grid.n": ("grid_n", _integers),
    "grid.k": ("grid_k", _integers),
}
"""Config key to ``(ExperimentConfig field, value parser)``."""


def parse_config(text: str) -> ExperimentConfig:
    """Parse configuration text, raising :class:`ConfigParse` with the position."""
    values: Dict[str, object] = {}
    lines: Dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indent = len(raw) - len(raw.lstrip()) + 1
        if "=" not in raw:
            raise ConfigParse("expected 'key = value'", number, indent)
        left, _, right = raw.partition("=")
        key = left.strip()
        if key not in PARSERS:
            raise ConfigParse("unknown key", number, indent, key)
        if key in lines:
            raise ConfigParse(f"duplicate key, first set on line {lines[key]}", number, indent, key)
        attribute, parser = PARSERS[key]
        value_column = len(left) + 2 + len(right) - len(right.lstrip())
        try:
            values[attribute] = parser(right.strip())
        except ValueError as e:
            raise ConfigParse(f"bad value '{right.strip()}': {e}", number, value_column, key)
        lines[key] = number
    config = ExperimentConfig(**values)
    if not config.is_grid and config.k > config.n:
        raise ConfigParse(
            f"k = {config.k} exceeds n = {config.n}", lines.get("k", 0), 1, "k"
        )
    return config


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """Read and parse a configuration file."""
    return parse_config(Path(path).read_text())
