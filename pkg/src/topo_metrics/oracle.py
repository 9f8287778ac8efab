# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Brute-force reference implementations

Ground truth for the optimized homology path:
- naive_persistence: full boundary matrix, textbook left-to-right reduction over Z/2
- kruskal_mst_weight: plain Kruskal with label relabelling (no union-find tricks)

Reachable from the CLI through the hidden `compute --oracle` flag.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

from topo_metrics.core import DistanceMatrix, PersistenceDiagram, PersistencePair
from topo_metrics.errors import DegenerateCloud, TooLarge
from topo_metrics.homology.filtration import FiltrationOrder

logger = logging.getLogger(__name__)

MAX_ORACLE_POINTS = 14


@dataclass(frozen=True)
class FullBoundaryMatrix:
    """One column per simplex in filtration order; column j lists the order indices of its facets"""

    order: FiltrationOrder
    columns: Tuple[Tuple[int, ...], ...]

    @classmethod
    def build(cls, order: FiltrationOrder) -> "FullBoundaryMatrix":
        index = order.index()
        columns = []
        for j, simplex in enumerate(order.simplices):
            facets = tuple(sorted(index[f] for f in simplex.facets()))
            if any(i >= j for i in facets):
                raise ValueError(f"facet of {simplex.vertices} does not precede it")
            columns.append(facets)
        return cls(order, tuple(columns))


def naive_persistence(dm: DistanceMatrix, max_dim: int = 2) -> Dict[int, PersistenceDiagram]:
    """
    H0 and H1 diagrams by reducing the full boundary matrix with no optimizations

    Args:
        dm: Distances of at most 14 points
        max_dim: Highest simplex dimension included (2 is needed for H1 deaths)

    Raises:
        TooLarge: more than 14 points
    """
    if dm.n > MAX_ORACLE_POINTS:
        raise TooLarge(f"oracle is limited to {MAX_ORACLE_POINTS} points, got {dm.n}")

    order = FiltrationOrder.build(dm, max_dim)
    matrix = FullBoundaryMatrix.build(order)
    simplices = order.simplices

    reduced: List[Set[int]] = [set(col) for col in matrix.columns]
    low_owner: Dict[int, int] = {}
    paired: Set[int] = set()
    bars: Dict[int, List[PersistencePair]] = {0: [], 1: []}

    for j in range(len(reduced)):
        column = reduced[j]
        while column and max(column) in low_owner:
            column ^= reduced[low_owner[max(column)]]
        if column:
            low = max(column)
            low_owner[low] = j
            paired.update((low, j))
            dim = simplices[low].dimension
            if dim in bars:
                birth = simplices[low].filtration_value
                bars[dim].append(PersistencePair(birth, simplices[j].filtration_value, dim))

    for i, simplex in enumerate(simplices):
        if i not in paired and simplex.dimension in bars:
            bars[simplex.dimension].append(
                PersistencePair(simplex.filtration_value, math.inf, simplex.dimension)
            )

    diam = float(dm.values.max())
    logger.debug(f"Oracle reduced {len(simplices)} columns for {dm.n} points")
    return {k: PersistenceDiagram(tuple(bars[k]), k, diam) for k in (0, 1)}


def kruskal_mst_weight(dm: DistanceMatrix) -> Tuple[float, List[float]]:
    """
    Total MST weight and the accepted edge weights (in acceptance order)

    Edges are sorted ascending, ties broken by lexicographic endpoints.
    """
    if dm.n < 2:
        raise DegenerateCloud(f"MST needs at least 2 points, got {dm.n}")

    edges = sorted(
        (float(dm.values[i, j]), i, j) for i in range(dm.n) for j in range(i + 1, dm.n)
    )
    label = list(range(dm.n))
    accepted: List[float] = []
    for weight, i, j in edges:
        if label[i] == label[j]:
            continue
        old, new = label[j], label[i]
        label = [new if lab == old else lab for lab in label]
        accepted.append(weight)
    return math.fsum(accepted), accepted
