# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
topo-metrics engine - main entry point

Provides the MetricEngine class tying the metric, evaluation and scaling modules to
one Settings object.

Example:
    from topo_metrics import MetricEngine, Settings, load_embeddings

    engine = MetricEngine(Settings.from_env())
    result = engine.compute(load_embeddings("embeddings.csv"), metrics=["persistence0"])

    print(result.report.values)
"""

import logging
import math
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from topo_metrics.config import Settings
from topo_metrics.core import (
    METRIC_NAMES,
    DistanceKind,
    EmbeddingMatrix,
    MetricReport,
    PersistenceDiagram,
)
from topo_metrics.errors import BadParams
from topo_metrics.evaluation import (
    EvaluationSummary,
    QualityAggregation,
    RunTable,
    ScalingFitResult,
    evaluate,
    scaling_experiment,
)
from topo_metrics.homology import persistence_diagrams, report_from_diagrams, subsample_rows
from topo_metrics.metrics import (
    DIRECT_METRICS,
    PERSISTENCE_METRICS,
    SPECTRAL_METRICS,
    SpectralSummary,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComputeResult:
    """Metric values of one embedding, plus the diagrams behind persistence0/1"""

    report: MetricReport
    n_points: int
    dimension: int
    diagrams: Optional[Dict[int, PersistenceDiagram]] = None

    def as_report(self, source: str, fmt: str, include_diagrams: bool = False) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "metrics": dict(self.report.values),
            "provenance": {
                "input": source,
                "format": fmt,
                "n_points": self.n_points,
                "dimension": self.dimension,
                "subsample_size": self.report.subsample_size,
                "seed": self.report.seed,
                "metric_kind": self.report.metric_kind.value,
            },
        }
        if include_diagrams and self.diagrams is not None:
            report["diagrams"] = {
                f"h{k}": [
                    [p.birth, None if math.isinf(p.death) else p.death] for p in diagram.pairs
                ]
                for k, diagram in sorted(self.diagrams.items())
            }
        return report


def evaluation_report(summary: EvaluationSummary) -> Dict[str, Any]:
    """Per-metric rows, best mean Spearman first, each with its task and group cells"""
    ranking = []
    for entry in summary.ranking():
        ranking.append(
            {
                "metric": entry.metric,
                "mean_pearson": entry.mean_pearson,
                "mean_spearman": entry.mean_spearman,
                "quality": entry.quality,
                "cells": {t: summary.cells[(entry.metric, t)].as_dict() for t in summary.tasks},
                "groups": {
                    g: {
                        t: summary.group_cells[g][(entry.metric, t)].as_dict()
                        for t in summary.tasks
                    }
                    for g in summary.groups
                },
            }
        )
    return {
        "correlation_mode": summary.correlation_mode.value,
        "quality_aggregation": summary.quality_aggregation.value,
        "groups": list(summary.groups),
        "tasks": list(summary.tasks),
        "ranking": ranking,
    }


def scaling_report(
    results: Sequence[ScalingFitResult], seed: int, trials: int
) -> Dict[str, Any]:
    return {
        "seed": seed,
        "trials": trials,
        "sample_sizes": list(results[0].sample_sizes) if results else [],
        "results": [r.as_dict() for r in results],
    }


class MetricEngine:
    """
    Facade over the metric, evaluation and scaling modules

    Fills in the subsample cap, seed and worker count from Settings when the caller
    leaves them out.
    """

    def __init__(self, settings: Optional[Settings] = None):
        """
        Initialize the engine

        Args:
            settings: Runtime settings (defaults to Settings.from_env())
        """
        self.settings = settings or Settings.from_env()
        self.settings.validate()
        logger.debug(f"MetricEngine with {self.settings.threads} worker thread(s)")

    def compute(
        self,
        emb: EmbeddingMatrix,
        metrics: Optional[Sequence[str]] = None,
        kind: DistanceKind = DistanceKind.EUCLIDEAN,
        subsample: Optional[int] = None,
        seed: Optional[int] = None,
        use_subsample: bool = True,
        with_diagrams: bool = False,
        oracle: bool = False,
    ) -> ComputeResult:
        """
        Compute the requested metrics for one embedding

        When the embedding has more rows than the subsample cap, one seeded subset is
        drawn and every metric is computed on it.

        Args:
            emb: Embedding matrix
            metrics: Metric names (default: all nine)
            kind: Distance for the persistence metrics
            subsample: Subsample cap (default from settings)
            seed: Subsampling seed (default from settings)
            use_subsample: False disables subsampling entirely
            with_diagrams: Keep the persistence diagrams in the result
            oracle: Compute diagrams with the brute-force oracle

        Raises:
            BadParams: unknown metric name or invalid subsample
        """
        names = list(dict.fromkeys(metrics)) if metrics else list(METRIC_NAMES)
        unknown = [m for m in names if m not in METRIC_NAMES]
        if unknown:
            raise BadParams(f"unknown metrics {unknown}; choose from {', '.join(METRIC_NAMES)}")

        cap = subsample if subsample is not None else self.settings.subsample
        if not use_subsample:
            cap = None
        seed = self.settings.seed if seed is None else seed
        if cap is not None and cap < 1:
            raise BadParams(f"subsample must be positive, got {cap}")

        cloud = emb
        if cap is not None and emb.n > cap:
            cloud = emb.take(subsample_rows(emb.n, cap, seed))
            logger.info(f"Subsampled {cap} of {emb.n} points (seed={seed})")

        dims = [PERSISTENCE_METRICS[m] for m in names if m in PERSISTENCE_METRICS]
        spectral = [m for m in names if m in SPECTRAL_METRICS]
        summary = SpectralSummary.from_embedding(cloud) if spectral else None

        values: Dict[str, float] = {}
        diagrams: Optional[Dict[int, PersistenceDiagram]] = None
        with ThreadPoolExecutor(max_workers=self.settings.threads) as pool:
            homology: Optional[Future] = None
            if dims:
                homology = pool.submit(persistence_diagrams, cloud, dims, None, seed, kind, oracle)
            futures: Dict[str, Future] = {}
            for name in names:
                if name in SPECTRAL_METRICS:
                    futures[name] = pool.submit(SPECTRAL_METRICS[name], cloud, summary)
                elif name in DIRECT_METRICS:
                    futures[name] = pool.submit(DIRECT_METRICS[name], cloud)

            if homology is not None:
                diagrams = homology.result()
                values.update(report_from_diagrams(diagrams).values)
            for name, future in futures.items():
                values[name] = future.result()

        ordered = {name: values[name] for name in names}
        report = MetricReport(values=ordered, subsample_size=cap, seed=seed, metric_kind=kind)
        logger.info(f"Computed {len(ordered)} metric(s) on {cloud.n}x{cloud.d} points")
        return ComputeResult(
            report=report,
            n_points=emb.n,
            dimension=emb.d,
            diagrams=diagrams if with_diagrams else None,
        )

    def evaluate(
        self,
        table: RunTable,
        metrics: Sequence[str],
        tasks: Sequence[str],
        quality_aggregation: QualityAggregation = QualityAggregation.MEAN,
    ) -> EvaluationSummary:
        """Run the correlation and selection protocol on a run table"""
        summary = evaluate(table, metrics, tasks, quality_aggregation)
        best = summary.ranking()[0]
        logger.info(f"Best metric by mean Spearman: {best.metric} ({best.mean_spearman:.4f})")
        return summary

    def scaling(
        self,
        dims: Sequence[int],
        sample_sizes: Sequence[int],
        trials: int,
        seed: Optional[int] = None,
    ) -> List[ScalingFitResult]:
        """Scaling experiment for each dimension, in the order given"""
        if not dims:
            raise BadParams("at least one dimension is required")
        seed = self.settings.seed if seed is None else seed
        return [
            scaling_experiment(d, sample_sizes, trials, seed, threads=self.settings.threads)
            for d in dims
        ]
