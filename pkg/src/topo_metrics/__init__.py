# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
topo-metrics - label-free embedding quality metrics

Normalized total persistence of Vietoris-Rips H0/H1 barcodes, spectral and clustering
baselines, and the protocol that checks how well each metric tracks downstream scores.

Public API:
- MetricEngine: facade over metrics, evaluation and the scaling experiment
- Settings: runtime configuration
- EmbeddingMatrix, MetricReport, PersistenceDiagram: core value objects
"""

__version__ = "0.1.0"

from topo_metrics.config import Settings
from topo_metrics.core import (
    METRIC_NAMES,
    DistanceKind,
    DistanceMatrix,
    EmbeddingMatrix,
    MetricReport,
    PersistenceDiagram,
    PersistencePair,
    diameter,
    pairwise_distances,
)
from topo_metrics.data import load_embeddings, save_embeddings, synth_cloud
from topo_metrics.engine import ComputeResult, MetricEngine
from topo_metrics.homology import persistence_metric, total_persistence

__all__ = [
    "METRIC_NAMES",
    "ComputeResult",
    "DistanceKind",
    "DistanceMatrix",
    "EmbeddingMatrix",
    "MetricEngine",
    "MetricReport",
    "PersistenceDiagram",
    "PersistencePair",
    "Settings",
    "diameter",
    "load_embeddings",
    "pairwise_distances",
    "persistence_metric",
    "save_embeddings",
    "synth_cloud",
    "total_persistence",
]
