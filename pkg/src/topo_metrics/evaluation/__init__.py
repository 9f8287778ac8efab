# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""Correlation/selection protocol and the persistence scaling experiment"""

from topo_metrics.evaluation.harness import (
    CorrelationMode,
    EvaluationCell,
    EvaluationSummary,
    MetricSummary,
    Orientation,
    QualityAggregation,
    RunRecord,
    RunTable,
    evaluate,
    pearson,
    selection_quality,
    spearman,
)
from topo_metrics.evaluation.scaling import ScalingFitResult, scaling_experiment

__all__ = [
    "CorrelationMode",
    "EvaluationCell",
    "EvaluationSummary",
    "MetricSummary",
    "Orientation",
    "QualityAggregation",
    "RunRecord",
    "RunTable",
    "ScalingFitResult",
    "evaluate",
    "pearson",
    "scaling_experiment",
    "selection_quality",
    "spearman",
]
