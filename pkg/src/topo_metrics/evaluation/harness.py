# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Evaluation protocol: how well does an unsupervised metric track downstream quality?

For each (metric, task) pair across a table of runs:
- Pearson and Spearman correlations (signed, or absolute for studies where lower
  metric values mean better models)
- selection quality: downstream score of the run the metric would pick
- best possible downstream score, for reference

Runs can be split into groups (dataset, downstream classifier, user vs item embeddings);
cells are computed inside each group and averaged across groups.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import rankdata

from topo_metrics.errors import (
    AllTied,
    BadParams,
    LengthMismatch,
    MissingColumn,
    NonFiniteInput,
    TooFewRuns,
    ZeroVariance,
)

logger = logging.getLogger(__name__)

MIN_RUNS = 3
DEFAULT_GROUP = "all"


class Orientation(str, Enum):
    HIGHER_BETTER = "higher_better"
    LOWER_BETTER = "lower_better"


class CorrelationMode(str, Enum):
    SIGNED = "signed"
    ABSOLUTE = "absolute"


class QualityAggregation(str, Enum):
    MEAN = "mean"
    SUM = "sum"


@dataclass(frozen=True)
class RunRecord:
    """One trained configuration (or epoch): its metric values and downstream scores"""

    run_id: str
    unsup: Mapping[str, float]
    downstream: Mapping[str, float]
    group: str = DEFAULT_GROUP

    def __post_init__(self):
        for name, value in {**self.unsup, **self.downstream}.items():
            if not math.isfinite(value):
                raise NonFiniteInput(f"run {self.run_id}: value of {name} is not finite")


@dataclass(frozen=True)
class RunTable:
    """Runs plus how to read each metric"""

    records: Tuple[RunRecord, ...]
    orientation: Mapping[str, Orientation] = field(default_factory=dict)
    correlation_mode: CorrelationMode = CorrelationMode.SIGNED

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        seen = set()
        for record in self.records:
            key = (record.group, record.run_id)
            if key in seen:
                raise BadParams(f"duplicate run_id {record.run_id!r} in group {record.group!r}")
            seen.add(key)

    def orientation_of(self, metric: str) -> Orientation:
        return Orientation(self.orientation.get(metric, Orientation.HIGHER_BETTER))

    def groups(self) -> List[str]:
        return sorted({r.group for r in self.records})

    def subset(self, group: str) -> "RunTable":
        return RunTable(
            tuple(r for r in self.records if r.group == group),
            self.orientation,
            self.correlation_mode,
        )

    def column(self, name: str, downstream: bool = False) -> List[float]:
        """Values of one metric (or task) in record order"""
        values = []
        for record in self.records:
            source = record.downstream if downstream else record.unsup
            if name not in source:
                kind = "task" if downstream else "metric"
                raise MissingColumn(f"{kind} {name!r} missing from run {record.run_id!r}")
            values.append(float(source[name]))
        return values


def _paired(x: Sequence[float], y: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    if len(x) < MIN_RUNS:
        raise TooFewRuns(f"correlation needs at least {MIN_RUNS} values, got {len(x)}")
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(ya))):
        raise NonFiniteInput("correlation inputs must be finite")
    return xa, ya


def _pearson(xa: np.ndarray, ya: np.ndarray) -> float:
    if np.ptp(xa) == 0 or np.ptp(ya) == 0:
        raise ZeroVariance("correlation is undefined for a constant series")
    xc = xa - xa.mean()
    yc = ya - ya.mean()
    r = float(np.dot(xc, yc)) / math.sqrt(float(np.dot(xc, xc)) * float(np.dot(yc, yc)))
    return max(-1.0, min(1.0, r))


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """
    Sample Pearson correlation

    Raises:
        LengthMismatch, TooFewRuns, ZeroVariance
    """
    return _pearson(*_paired(x, y))


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """
    Pearson correlation of the rank vectors; ties get average ranks

    Raises:
        LengthMismatch, TooFewRuns, AllTied
    """
    xa, ya = _paired(x, y)
    if np.ptp(xa) == 0 or np.ptp(ya) == 0:
        raise AllTied("rank correlation is undefined when every value is tied")
    return _pearson(rankdata(xa, method="average"), rankdata(ya, method="average"))


def selection_quality(table: RunTable, metric: str, task: str) -> float:
    """
    Downstream score of the run the metric would select

    HigherBetter picks the argmax, LowerBetter the argmin; ties go to the
    lexicographically smallest run_id.

    Raises:
        MissingColumn: metric or task absent from some record
    """
    if not table.records:
        raise TooFewRuns("selection needs at least one run")

    sign = 1.0 if table.orientation_of(metric) is Orientation.HIGHER_BETTER else -1.0
    chosen: Optional[RunRecord] = None
    best = -math.inf
    for record in sorted(table.records, key=lambda r: r.run_id):
        if metric not in record.unsup:
            raise MissingColumn(f"metric {metric!r} missing from run {record.run_id!r}")
        if task not in record.downstream:
            raise MissingColumn(f"task {task!r} missing from run {record.run_id!r}")
        score = sign * record.unsup[metric]
        if chosen is None or score > best:
            chosen, best = record, score

    logger.debug(f"{metric} selects run {chosen.run_id} for {task}")
    return float(chosen.downstream[task])


@dataclass(frozen=True)
class EvaluationCell:
    """Scores of one (metric, task) pair"""

    pearson: float
    spearman: float
    selection_quality: float
    best_possible: float

    def as_dict(self) -> Dict[str, float]:
        return {
            "pearson": self.pearson,
            "spearman": self.spearman,
            "selection_quality": self.selection_quality,
            "best_possible": self.best_possible,
        }


@dataclass(frozen=True)
class MetricSummary:
    """Per-metric aggregation across tasks"""

    metric: str
    mean_pearson: float
    mean_spearman: float
    quality: float


@dataclass(frozen=True)
class EvaluationSummary:
    """All cells (averaged across groups), per-group cells and per-metric aggregates"""

    metrics: Tuple[str, ...]
    tasks: Tuple[str, ...]
    groups: Tuple[str, ...]
    cells: Mapping[Tuple[str, str], EvaluationCell]
    group_cells: Mapping[str, Mapping[Tuple[str, str], EvaluationCell]]
    per_metric: Mapping[str, MetricSummary]
    correlation_mode: CorrelationMode
    quality_aggregation: QualityAggregation

    def ranking(self) -> List[MetricSummary]:
        """Metrics sorted by mean Spearman, best first (then by name)"""
        return sorted(self.per_metric.values(), key=lambda m: (-m.mean_spearman, m.metric))


def _evaluate_cell(table: RunTable, metric: str, task: str) -> EvaluationCell:
    x = table.column(metric)
    y = table.column(task, downstream=True)
    r_p = pearson(x, y)
    r_s = spearman(x, y)
    if table.correlation_mode is CorrelationMode.ABSOLUTE:
        r_p, r_s = abs(r_p), abs(r_s)
    return EvaluationCell(
        pearson=r_p,
        spearman=r_s,
        selection_quality=selection_quality(table, metric, task),
        best_possible=max(y),
    )


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def evaluate(
    table: RunTable,
    metrics: Sequence[str],
    tasks: Sequence[str],
    quality_aggregation: QualityAggregation = QualityAggregation.MEAN,
) -> EvaluationSummary:
    """
    Correlations and selection quality for every (metric, task) pair

    Cells are computed within each group of runs and averaged across groups;
    per-metric means are taken across tasks, with quality aggregated by mean or sum.
    """
    if not metrics or not tasks:
        raise BadParams("evaluation needs at least one metric and one task")

    quality_aggregation = QualityAggregation(quality_aggregation)
    groups = table.groups()
    group_cells: Dict[str, Dict[Tuple[str, str], EvaluationCell]] = {}
    for group in groups:
        sub = table.subset(group)
        group_cells[group] = {(m, t): _evaluate_cell(sub, m, t) for m in metrics for t in tasks}
        logger.info(f"Evaluated group {group!r}: {len(sub.records)} runs")

    cells: Dict[Tuple[str, str], EvaluationCell] = {}
    for m in metrics:
        for t in tasks:
            per_group = [group_cells[g][(m, t)] for g in groups]
            cells[(m, t)] = EvaluationCell(
                pearson=_mean([c.pearson for c in per_group]),
                spearman=_mean([c.spearman for c in per_group]),
                selection_quality=_mean([c.selection_quality for c in per_group]),
                best_possible=_mean([c.best_possible for c in per_group]),
            )

    per_metric: Dict[str, MetricSummary] = {}
    for m in metrics:
        row = [cells[(m, t)] for t in tasks]
        qualities = [c.selection_quality for c in row]
        quality = (
            math.fsum(qualities)
            if quality_aggregation is QualityAggregation.SUM
            else _mean(qualities)
        )
        per_metric[m] = MetricSummary(
            metric=m,
            mean_pearson=_mean([c.pearson for c in row]),
            mean_spearman=_mean([c.spearman for c in row]),
            quality=quality,
        )

    return EvaluationSummary(
        metrics=tuple(metrics),
        tasks=tuple(tasks),
        groups=tuple(groups),
        cells=cells,
        group_cells=group_cells,
        per_metric=per_metric,
        correlation_mode=table.correlation_mode,
        quality_aggregation=quality_aggregation,
    )
