# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Vietoris–Rips filtration: simplices, their filtration values and the total order

The order is (filtration value, dimension, lexicographic vertices), which puts every
face before its cofaces and makes diagrams byte-reproducible.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Tuple

import numpy as np

from topo_metrics.core import DistanceMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=False)
class Simplex:
    """Sorted vertex tuple plus its Rips filtration value"""

    vertices: Tuple[int, ...]
    filtration_value: float

    def __post_init__(self):
        if not 1 <= len(self.vertices) <= 3:
            raise ValueError(f"only vertices, edges and triangles are supported: {self.vertices}")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError(f"vertices must be strictly increasing: {self.vertices}")

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    @property
    def sort_key(self) -> Tuple[float, int, Tuple[int, ...]]:
        return (self.filtration_value, self.dimension, self.vertices)

    def facets(self) -> Iterator[Tuple[int, ...]]:
        """Vertex tuples of the codimension-1 faces"""
        if len(self.vertices) == 1:
            return iter(())
        return combinations(self.vertices, len(self.vertices) - 1)


def rips_value(dm: DistanceMatrix, vertices: Tuple[int, ...]) -> float:
    """Largest pairwise distance among the vertices (0 for a single vertex)"""
    if len(vertices) == 1:
        return 0.0
    return max(float(dm.values[a, b]) for a, b in combinations(vertices, 2))


@dataclass(frozen=True)
class FiltrationOrder:
    """Simplices sorted by (filtration value, dimension, lexicographic vertices)"""

    simplices: Tuple[Simplex, ...]

    @classmethod
    def build(cls, dm: DistanceMatrix, max_dim: int = 2) -> "FiltrationOrder":
        """
        Enumerate every simplex of dimension <= max_dim of the full Rips complex

        The complex is taken up to filtration value = diameter, i.e. all simplices.
        Meant for small clouds: the triangle count grows as n^3.
        """
        if not 0 <= max_dim <= 2:
            raise ValueError(f"max_dim must be 0, 1 or 2, got {max_dim}")

        simplices: List[Simplex] = []
        for size in range(1, max_dim + 2):
            for vertices in combinations(range(dm.n), size):
                simplices.append(Simplex(vertices, rips_value(dm, vertices)))

        simplices.sort(key=lambda s: s.sort_key)
        logger.debug(f"Filtration of {dm.n} points: {len(simplices)} simplices (max_dim={max_dim})")
        return cls(tuple(simplices))

    def __len__(self) -> int:
        return len(self.simplices)

    def index(self) -> dict:
        """Map vertex tuple -> position in the order"""
        return {s.vertices: i for i, s in enumerate(self.simplices)}


def sorted_edges(dm: DistanceMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    All edges (i < j) in filtration order

    Returns:
        (rows, cols, weights) arrays sorted by weight, then i, then j
    """
    rows, cols = np.triu_indices(dm.n, k=1)
    weights = dm.values[rows, cols]
    order = np.lexsort((cols, rows, weights))
    return rows[order], cols[order], weights[order]
