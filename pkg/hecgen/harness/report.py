# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""CSV reports: experiment tables, sequences and golden-file regression."""

import dataclasses
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple, Union

import pandas as pd

from hecgen.config import CSV_SCHEMA_VERSION
from hecgen.ff import FieldDesc, FieldElement
from hecgen.harness.experiment import ExperimentRecord
from hecgen.harness.utils import load_field, logger

RECORD_COLUMNS = [f.name for f in dataclasses.fields(ExperimentRecord)]
"""Column order of experiment reports."""

GOLDEN_EXCLUDED_COLUMNS = ["wall_time"]
"""Columns ignored when comparing against a golden file."""

SEQUENCE_COLUMN = "w"

PathOrStream = Union[str, Path, TextIO]


def _open(target: Optional[PathOrStream]):
    if target is None:
        return sys.stdout, False
    if isinstance(target, (str, Path)):
        return open(target, "w", newline=""), True
    return target, False


def create_empty_dataframe_for_records() -> pd.DataFrame:  # noqa: D103
    return pd.DataFrame(columns=RECORD_COLUMNS)


def records_to_dataframe(records: Sequence[ExperimentRecord]) -> pd.DataFrame:
    """Records in grid order plus a summary row counting met hypotheses."""
    if not records:
        return create_empty_dataframe_for_records()
    df = pd.DataFrame([r.as_row() for r in records], columns=RECORD_COLUMNS)
    summary = {column: "" for column in RECORD_COLUMNS}
    summary["index"] = "summary"
    summary["hypotheses_met"] = sum(1 for r in records if r.hypotheses_met)
    summary["nontrivial"] = sum(1 for r in records if r.nontrivial)
    summary["collision_vacuous"] = sum(1 for r in records if r.collision_vacuous)
    return pd.concat([df, pd.DataFrame([summary])], ignore_index=True)


def write_report(
    records: Sequence[ExperimentRecord], target: Optional[PathOrStream] = None
) -> pd.DataFrame:
    """Write the schema line and the record table; return the table."""
    df = records_to_dataframe(records)
    stream, close = _open(target)
    try:
        stream.write(f"# schema={CSV_SCHEMA_VERSION}\n")
        df.to_csv(stream, index=False)
    finally:
        if close:
            stream.close()
    return df


def read_report(path: Union[str, Path]) -> pd.DataFrame:
    """Read a report written by :func:`write_report` as strings."""
    return pd.read_csv(path, comment="#", dtype=str, keep_default_na=False)


def _golden_view(df: pd.DataFrame) -> pd.DataFrame:
    view = df.drop(columns=[c for c in GOLDEN_EXCLUDED_COLUMNS if c in df.columns])
    return view.astype(str).reset_index(drop=True)


def compare_golden(
    records: Sequence[ExperimentRecord], golden: Union[str, Path]
) -> Tuple[bool, List[str]]:
    """Compare records with a golden file, writing it when it does not exist.

    Returns ``(created, differences)``; wall time is never compared.
    """
    golden = Path(golden)
    if not golden.exists():
        logger.info(f"Writing golden file {golden}")
        write_report(records, golden)
        return True, []
    current = _golden_view(records_to_dataframe(records).astype(str))
    expected = _golden_view(read_report(golden))
    differences = []
    if list(current.columns) != list(expected.columns):
        return False, [f"columns differ: {list(expected.columns)} != {list(current.columns)}"]
    if len(current) != len(expected):
        return False, [f"row count {len(current)} != golden {len(expected)}"]
    for i in range(len(current)):
        for column in current.columns:
            if current.at[i, column] != expected.at[i, column]:
                differences.append(
                    f"row {i}, {column}: {current.at[i, column]} != golden {expected.at[i, column]}"
                )
    return False, differences


def write_rows(rows: Iterable[Dict], target: Optional[PathOrStream] = None) -> pd.DataFrame:
    """Write plain rows such as curve information or check verdicts."""
    df = pd.DataFrame(list(rows))
    stream, close = _open(target)
    try:
        df.to_csv(stream, index=False)
    finally:
        if close:
            stream.close()
    return df


def write_sequence_csv(
    sequence: Sequence[FieldElement],
    target: Optional[PathOrStream] = None,
    header: Optional[Dict] = None,
) -> None:
    """One column of serialized elements after ``# key=value`` header lines."""
    stream, close = _open(target)
    try:
        for key, value in (header or {}).items():
            stream.write(f"# {key}={value}\n")
        df = pd.DataFrame({SEQUENCE_COLUMN: [x.to_text() for x in sequence]})
        df.to_csv(stream, index=False)
    finally:
        if close:
            stream.close()


def read_sequence_header(path: Union[str, Path]) -> Dict[str, str]:
    """The ``# key=value`` block at the top of a sequence file."""
    header = {}
    with open(path) as stream:
        for line in stream:
            if not line.startswith("#"):
                break
            key, _, value = line[1:].strip().partition("=")
            header[key.strip()] = value.strip()
    return header


def read_sequence_csv(
    path: Union[str, Path], field: Optional[FieldDesc] = None
) -> List[FieldElement]:
    """Read a sequence file; the field comes from its header unless given."""
    if field is None:
        header = read_sequence_header(path)
        if "field" not in header:
            raise ValueError(f"{path} has no 'field' header and no field was given")
        field = load_field(header["field"])
    df = pd.read_csv(path, comment="#", dtype=str, keep_default_na=False)
    if SEQUENCE_COLUMN not in df.columns:
        raise ValueError(f"{path} has no '{SEQUENCE_COLUMN}' column")
    return [field.from_text(text) for text in df[SEQUENCE_COLUMN]]
