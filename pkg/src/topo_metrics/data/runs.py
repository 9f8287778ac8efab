# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Runs manifest + sidecar evaluation config loader.

The manifest is a delimited UTF-8 table with a header row and a required `run_id`
column. The YAML sidecar says which columns are unsupervised metrics and which are
downstream tasks, how each metric is oriented, how correlations are reported and how
runs are grouped.
"""

import csv
import io
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from topo_metrics.errors import ConfigError, MissingColumn, NonFiniteInput, ParseError, ShapeError
from topo_metrics.evaluation.harness import (
    DEFAULT_GROUP,
    CorrelationMode,
    Orientation,
    QualityAggregation,
    RunRecord,
    RunTable,
)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

RUN_ID = "run_id"
GROUP_SEPARATOR = "/"


class EvaluationConfig(BaseModel):
    """Sidecar configuration for `evaluate`"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    metrics: List[str] = Field(..., min_length=1, description="Unsupervised metric columns")
    tasks: List[str] = Field(..., min_length=1, description="Downstream score columns")
    orientation: Dict[str, Orientation] = Field(default_factory=dict)
    correlation_mode: CorrelationMode = CorrelationMode.SIGNED
    quality_aggregation: QualityAggregation = QualityAggregation.MEAN
    group_by: List[str] = Field(default_factory=list)
    delimiter: Optional[str] = Field(default=None, min_length=1, max_length=1)

    @model_validator(mode="after")
    def _check_columns(self) -> "EvaluationConfig":
        names = self.metrics + self.tasks + self.group_by
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise ValueError(f"columns listed more than once: {duplicates}")
        if RUN_ID in names:
            raise ValueError(f"{RUN_ID} cannot be a metric, task or group column")
        unknown = sorted(set(self.orientation) - set(self.metrics))
        if unknown:
            raise ValueError(f"orientation given for columns that are not metrics: {unknown}")
        return self

    def delimiter_for(self, path: PathLike) -> str:
        if self.delimiter is not None:
            return self.delimiter
        return "\t" if Path(path).suffix.lower() == ".tsv" else ","


def load_evaluation_config(source: Union[PathLike, Dict[str, Any]]) -> EvaluationConfig:
    """
    Load and validate the sidecar config from a YAML file path or an already parsed dict.

    Raises:
        OSError: file cannot be read
        ConfigError: invalid YAML or invalid content
    """
    if isinstance(source, dict):
        content: Any = source
    else:
        try:
            with open(source, "r", encoding="utf-8") as file:
                content = yaml.safe_load(file)
        except yaml.YAMLError as e:
            raise ConfigError(f"Error parsing YAML file {source}: {e}") from e

    if not isinstance(content, dict):
        raise ConfigError(f"evaluation config must be a mapping, got {type(content).__name__}")

    try:
        config = EvaluationConfig.model_validate(content)
    except ValidationError as e:
        raise ConfigError(f"invalid evaluation config: {e}") from e

    logger.info(f"Evaluation config: {len(config.metrics)} metrics, {len(config.tasks)} tasks")
    return config


def _read_table(text: str, delimiter: str) -> Tuple[List[str], List[Tuple[int, List[str]]]]:
    reader = csv.reader(io.StringIO(text), delimiter=delimiter)
    rows = [(line_no, row) for line_no, row in enumerate(reader, 1) if row]
    if not rows:
        raise ShapeError("runs manifest is empty")

    _, header = rows[0]
    header = [name.strip() for name in header]
    duplicates = sorted({name for name in header if header.count(name) > 1})
    if duplicates:
        raise ParseError(f"duplicate header names: {duplicates}", row=1)

    for line_no, row in rows[1:]:
        if len(row) != len(header):
            raise ShapeError(
                f"expected {len(header)} fields as in the header, found {len(row)}", row=line_no
            )
    return header, rows[1:]


def _parse_value(field: str, line_no: int, col_no: int, name: str) -> float:
    text = field.strip()
    if not text:
        raise ParseError(f"missing value for {name!r}", row=line_no, column=col_no)
    try:
        value = float(text)
    except ValueError as e:
        raise ParseError(f"not a number for {name!r}: {text!r}", row=line_no, column=col_no) from e
    if not math.isfinite(value):
        raise NonFiniteInput(f"non-finite value for {name!r} (row {line_no}, column {col_no})")
    return value


def parse_runs(text: str, config: EvaluationConfig, delimiter: str = ",") -> RunTable:
    """
    Build a RunTable from manifest text.

    Columns not named by the config are ignored.

    Raises:
        MissingColumn: run_id or a configured column is absent from the header
        ParseError / ShapeError / NonFiniteInput: malformed rows
    """
    header, rows = _read_table(text, delimiter)
    position = {name: i for i, name in enumerate(header)}
    for name in [RUN_ID] + config.metrics + config.tasks + config.group_by:
        if name not in position:
            raise MissingColumn(f"column {name!r} not found in runs manifest header")

    records = []
    for line_no, row in rows:
        def values(names: List[str]) -> Dict[str, float]:
            return {
                name: _parse_value(row[position[name]], line_no, position[name] + 1, name)
                for name in names
            }

        group = GROUP_SEPARATOR.join(row[position[g]].strip() for g in config.group_by)
        records.append(
            RunRecord(
                run_id=row[position[RUN_ID]].strip(),
                unsup=values(config.metrics),
                downstream=values(config.tasks),
                group=group or DEFAULT_GROUP,
            )
        )

    table = RunTable(tuple(records), dict(config.orientation), config.correlation_mode)
    logger.info(f"Parsed {len(records)} runs in {len(table.groups())} group(s)")
    return table


def load_runs(path: PathLike, config: EvaluationConfig) -> RunTable:
    """Read a runs manifest from disk"""
    text = Path(path).read_text(encoding="utf-8")
    return parse_runs(text, config, config.delimiter_for(path))
