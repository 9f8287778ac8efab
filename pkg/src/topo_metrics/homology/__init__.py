# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""Vietoris–Rips persistent homology (degrees 0 and 1)"""

from topo_metrics.homology.filtration import FiltrationOrder, Simplex, rips_value, sorted_edges
from topo_metrics.homology.rips import (
    TotalPersistenceResult,
    persistence_diagrams,
    persistence_metric,
    report_from_diagrams,
    rips_diagrams,
    rips_h0_diagram,
    rips_h1_diagram,
    subsample_rows,
    total_persistence,
)

__all__ = [
    "FiltrationOrder",
    "Simplex",
    "rips_value",
    "sorted_edges",
    "TotalPersistenceResult",
    "persistence_diagrams",
    "persistence_metric",
    "report_from_diagrams",
    "rips_diagrams",
    "rips_h0_diagram",
    "rips_h1_diagram",
    "subsample_rows",
    "total_persistence",
]
