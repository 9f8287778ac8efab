# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Core value objects shared by every topo-metrics module

Defines:
- EmbeddingMatrix: n×d point cloud of embeddings (the universal input)
- DistanceMatrix: dense symmetric pairwise distances
- PersistencePair / PersistenceDiagram: (birth, death) intervals per homology degree
- MetricReport: named metric values plus provenance

All objects are immutable after construction; their numpy buffers are made read-only.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.spatial.distance import pdist, squareform

from topo_metrics.errors import (
    DegenerateCloud,
    NonFiniteInput,
    ShapeError,
    ZeroDiameter,
    ZeroNormRow,
)

logger = logging.getLogger(__name__)

METRIC_NAMES = (
    "persistence0",
    "persistence1",
    "rankme",
    "alpha_req",
    "nesum",
    "stable_rank",
    "mu0_incoherence",
    "pc_number",
    "self_cluster",
)


class DistanceKind(str, Enum):
    """Dissimilarity used to build the filtration"""

    EUCLIDEAN = "euclidean"
    COSINE = "cosine"


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.array(values, dtype=np.float64, order="C", copy=True)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class EmbeddingMatrix:
    """n×d embedding vectors, row i is x_i"""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise ShapeError(f"embedding matrix must be 2-dimensional, got shape {values.shape}")
        if values.shape[0] < 1 or values.shape[1] < 1:
            raise ShapeError(f"embedding matrix must have n >= 1 and d >= 1, got {values.shape}")
        if not np.all(np.isfinite(values)):
            bad_row = int(np.argwhere(~np.isfinite(values))[0][0])
            raise NonFiniteInput(f"embedding contains NaN/Inf (row {bad_row + 1})")
        object.__setattr__(self, "values", _frozen(values))

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def d(self) -> int:
        return int(self.values.shape[1])

    def take(self, rows: np.ndarray) -> "EmbeddingMatrix":
        """Sub-cloud made of the given row indices"""
        return EmbeddingMatrix(self.values[np.asarray(rows, dtype=np.intp)])


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric n×n matrix of nonnegative pairwise distances"""

    values: np.ndarray
    metric_kind: DistanceKind = DistanceKind.EUCLIDEAN

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ShapeError(f"distance matrix must be square, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise NonFiniteInput("distance matrix contains NaN/Inf")
        if np.any(values < 0):
            raise ShapeError("distance matrix contains negative entries")
        if np.any(np.diag(values) != 0):
            raise ShapeError("distance matrix must have a zero diagonal")
        if not np.array_equal(values, values.T):
            raise ShapeError("distance matrix must be symmetric")
        object.__setattr__(self, "values", _frozen(values))
        object.__setattr__(self, "metric_kind", DistanceKind(self.metric_kind))

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def condensed(self) -> np.ndarray:
        """Upper-triangle entries in row-major (i < j) order"""
        return squareform(self.values, checks=False)


@dataclass(frozen=True)
class PersistencePair:
    """One bar of a barcode; death is math.inf for essential classes"""

    birth: float
    death: float
    dimension: int

    def __post_init__(self):
        if self.dimension not in (0, 1):
            raise ValueError(f"homology degree must be 0 or 1, got {self.dimension}")
        if self.death < self.birth:
            raise ValueError(f"death {self.death} precedes birth {self.birth}")

    @property
    def is_essential(self) -> bool:
        return math.isinf(self.death)

    @property
    def length(self) -> float:
        return self.death - self.birth


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of bars in one homology degree, plus the source cloud's diameter"""

    pairs: Tuple[PersistencePair, ...]
    dimension: int
    diameter: float

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        for pair in self.pairs:
            if pair.dimension != self.dimension:
                raise ValueError("pair degree does not match diagram degree")
            if not pair.is_essential and pair.death > self.diameter:
                raise ValueError(f"finite death {pair.death} exceeds diameter {self.diameter}")

    @property
    def finite_pairs(self) -> Tuple[PersistencePair, ...]:
        return tuple(p for p in self.pairs if not p.is_essential)

    @property
    def essential_count(self) -> int:
        return sum(1 for p in self.pairs if p.is_essential)

    def as_tuples(self) -> Tuple[Tuple[float, float], ...]:
        """Sorted (birth, death) tuples; convenient for multiset comparison"""
        return tuple(sorted((p.birth, p.death) for p in self.pairs))


class MetricReport(BaseModel):
    """Unsupervised metric values computed for one embedding"""

    model_config = ConfigDict(frozen=True)

    values: Dict[str, float] = Field(default_factory=dict)
    subsample_size: Optional[int] = None
    seed: Optional[int] = None
    metric_kind: DistanceKind = DistanceKind.EUCLIDEAN

    @field_validator("values")
    @classmethod
    def _check_values(cls, values: Dict[str, float]) -> Dict[str, float]:
        for name, value in values.items():
            if name not in METRIC_NAMES:
                raise ValueError(f"unknown metric: {name}")
            if not math.isfinite(value):
                raise ValueError(f"metric {name} is not finite: {value}")
            if name.startswith("persistence") and value < 0:
                raise ValueError(f"metric {name} must be >= 0, got {value}")
        return values

    def merged(self, other: "MetricReport") -> "MetricReport":
        """Union of two reports sharing the same provenance"""
        return self.model_copy(update={"values": {**self.values, **other.values}})


def pairwise_distances(
    emb: EmbeddingMatrix, kind: DistanceKind = DistanceKind.EUCLIDEAN
) -> DistanceMatrix:
    """
    Full symmetric distance matrix of an embedding

    Euclidean: ||x_i - x_j||_2. Cosine: 1 - cos(x_i, x_j), clamped into [0, 2].
    Each unordered pair is computed once and mirrored, so the result is exactly symmetric.

    Raises:
        ZeroNormRow: cosine distance requested and some row is the zero vector
    """
    kind = DistanceKind(kind)
    if kind is DistanceKind.COSINE:
        norms = np.linalg.norm(emb.values, axis=1)
        zero_rows = np.flatnonzero(norms == 0)
        if zero_rows.size:
            raise ZeroNormRow(int(zero_rows[0]) + 1)

    if emb.n == 1:
        return DistanceMatrix(np.zeros((1, 1)), kind)

    if kind is DistanceKind.COSINE:
        condensed = np.clip(pdist(emb.values, metric="cosine"), 0.0, 2.0)
    else:
        condensed = pdist(emb.values, metric="euclidean")

    if not np.all(np.isfinite(condensed)):
        raise NonFiniteInput("pairwise distances overflowed to Inf")

    logger.debug(f"Computed {condensed.size} {kind.value} distances for {emb.n} points")
    return DistanceMatrix(squareform(condensed), kind)


def diameter(dm: DistanceMatrix) -> float:
    """
    Maximum pairwise distance

    Raises:
        DegenerateCloud: fewer than two points
        ZeroDiameter: all points coincide
    """
    if dm.n < 2:
        raise DegenerateCloud(f"diameter needs at least 2 points, got {dm.n}")
    value = float(dm.values.max())
    if value == 0.0:
        raise ZeroDiameter("all points coincide (diameter is 0)")
    return value
