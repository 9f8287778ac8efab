# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""Baseline unsupervised metrics and the name -> function registry"""

from typing import Callable, Dict

from topo_metrics.core import EmbeddingMatrix
from topo_metrics.metrics.spectral import (
    SpectralSummary,
    alpha_req,
    mu0_incoherence,
    nesum,
    pc_number,
    rankme,
    self_cluster,
    stable_rank,
)

# Metrics that take an optional shared SpectralSummary
SPECTRAL_METRICS: Dict[str, Callable[..., float]] = {
    "rankme": rankme,
    "alpha_req": alpha_req,
    "nesum": nesum,
    "stable_rank": stable_rank,
    "mu0_incoherence": mu0_incoherence,
    "pc_number": pc_number,
}

# Metrics computed on the raw (uncentered) rows
DIRECT_METRICS: Dict[str, Callable[[EmbeddingMatrix], float]] = {
    "self_cluster": self_cluster,
}

PERSISTENCE_METRICS = {"persistence0": 0, "persistence1": 1}

__all__ = [
    "SpectralSummary",
    "SPECTRAL_METRICS",
    "DIRECT_METRICS",
    "PERSISTENCE_METRICS",
    "alpha_req",
    "mu0_incoherence",
    "nesum",
    "pc_number",
    "rankme",
    "self_cluster",
    "stable_rank",
]
