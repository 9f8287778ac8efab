# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""File formats, synthetic clouds and run manifests"""

from topo_metrics.data.embeddings import (
    EmbeddingFormat,
    load_embeddings,
    save_embeddings,
)
from topo_metrics.data.runs import (
    EvaluationConfig,
    load_evaluation_config,
    load_runs,
    parse_runs,
)
from topo_metrics.data.synth import CloudShape, synth_cloud

__all__ = [
    "CloudShape",
    "EmbeddingFormat",
    "EvaluationConfig",
    "load_embeddings",
    "load_evaluation_config",
    "load_runs",
    "parse_runs",
    "save_embeddings",
    "synth_cloud",
]
