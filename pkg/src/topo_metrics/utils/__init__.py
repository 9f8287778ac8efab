# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Utility modules for topo-metrics.
"""

from topo_metrics.utils.report import (
    atomic_write_bytes,
    atomic_write_text,
    dumps_report,
    write_report,
)
from topo_metrics.utils.union_find import UnionFind

__all__ = [
    "UnionFind",
    "atomic_write_bytes",
    "atomic_write_text",
    "dumps_report",
    "write_report",
]
