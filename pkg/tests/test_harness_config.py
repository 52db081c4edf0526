# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Tests for hecgen/harness/config.py"""

import pytest

from hecgen.config import DigitOrder
from hecgen.errors import ConfigParse


def parse(text):  # noqa: D103
    from hecgen.harness.config import parse_config

    return parse_config(text)


class TestParseConfig:
    def test_values(self):
        cfg = parse(
            "# single experiment\n"
            "field = 3^2\n"
            "n = 4\n"
            "\n"
            "k = 2\n"
            "coordinate = v0\n"
            "curve = 0, 0, 0, 1, 0\n"
            "seed = 7\n"
            "digit_order = balanced\n"
            "workers = 2\n"
        )
        assert cfg.field == "3^2"
        assert (cfg.n, cfg.k, cfg.seed, cfg.workers) == (4, 2, 7, 2)
        assert cfg.coordinate == "v0"
        assert cfg.curve == "0,0,0,1,0"
        assert cfg.digit_order is DigitOrder.balanced
        assert not cfg.is_grid

    def test_defaults(self):
        from hecgen.harness.config import ExperimentConfig

        assert parse("") == ExperimentConfig()
        assert parse("# nothing\n\n") == ExperimentConfig()

    def test_default_digit_order_is_the_acceptance_order(self):
        from hecgen.config import ACCEPTANCE_DIGIT_ORDER
        from hecgen.frobgen import DigitSet

        assert parse("").digit_order is ACCEPTANCE_DIGIT_ORDER
        assert DigitSet(3).order is ACCEPTANCE_DIGIT_ORDER

    @pytest.mark.parametrize(
        "text, line, column, key",
        [
            ("n 4", 1, 1, ""),
            ("\n   n 4", 2, 4, ""),
            ("foo = 1", 1, 1, "foo"),
            ("n = 2\nn = 3", 2, 1, "n"),
            ("k = x", 1, 5, "k"),
            ("n =   0", 1, 7, "n"),
            ("coordinate = w", 1, 14, "coordinate"),
            ("curve = 0,0,0,1", 1, 9, "curve"),
            ("digit_order = zigzag", 1, 15, "digit_order"),
            ("field = three", 1, 9, "field"),
            ("seed = -1", 1, 8, "seed"),
            (f"seed = {2**64}", 1, 8, "seed"),
            ("n = 1\nk = 2", 2, 1, "k"),
        ],
    )
    def test_errors_carry_position(self, text, line, column, key):
        with pytest.raises(ConfigParse) as excinfo:
            parse(text)
        assert excinfo.value.line == line
        assert excinfo.value.column == column
        assert excinfo.value.key == key
        assert f"line {line}, column {column}" in str(excinfo.value)

    def test_largest_seed(self):
        assert parse(f"seed = {2**64 - 1}").seed == 2**64 - 1

    def test_load_config(self, tmp_path):
        from hecgen.harness.config import load_config

        path = tmp_path / "experiment.cfg"
        path.write_text("field = 5\nn = 3\n")
        cfg = load_config(path)
        assert (cfg.field, cfg.n) == ("5", 3)


class TestGrid:
    def test_grid_points(self):
        cfg = parse("seed = 3\ngrid.q = 3,5\ngrid.n = 1,2\ngrid.k = 1,2\n")
        assert cfg.is_grid
        points = cfg.grid_points()
        assert [(p.field, p.n, p.k) for p in points] == [
            ("3", 1, 1),
            ("3", 2, 1),
            ("3", 2, 2),
            ("5", 1, 1),
            ("5", 2, 1),
            ("5", 2, 2),
        ]
        assert all(not p.is_grid and p.seed == 3 for p in points)

    def test_prime_power_grid(self):
        cfg = parse("grid.q = 9\nn = 2")
        assert [p.field for p in cfg.grid_points()] == ["3^2"]

    def test_grid_drops_curve(self):
        cfg = parse("curve = 0,0,0,1,0\ngrid.q = 3")
        assert [p.curve for p in cfg.grid_points()] == [None]

    def test_grid_skips_k_check(self):
        cfg = parse("n = 1\nk = 2\ngrid.n = 1")
        assert cfg.is_grid
        assert cfg.grid_points() == []

    def test_overrides(self):
        cfg = parse("seed = 3\nbudget = 100")
        overridden = cfg.with_overrides(seed=None, budget=5)
        assert (overridden.seed, overridden.budget) == (3, 5)
        assert cfg.budget == 100
