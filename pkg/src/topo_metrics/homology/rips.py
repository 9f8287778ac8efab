# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Vietoris–Rips persistence in degrees 0 and 1, and the normalized total persistence

H0 comes from Kruskal's algorithm (finite H0 deaths are exactly the MST edge weights).
H1 comes from reducing the edge/triangle boundary matrix over the 2-element field,
processed in its coboundary (anti-transposed) form with clearing:
- edge columns are visited from the latest edge to the earliest
- MST edges are already paired in H0, so their columns are cleared without work
- a column's pivot is its earliest triangle in filtration order
- cofaces past the enclosing radius min_i max_j d(i, j) are never built; from there on
  the complex is a cone, so an edge born later dies at its own value
The pairs are the same as those of the left-to-right reduction of the boundary matrix.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set, Tuple

import numpy as np

from topo_metrics.core import (
    DistanceKind,
    DistanceMatrix,
    EmbeddingMatrix,
    MetricReport,
    PersistenceDiagram,
    PersistencePair,
    pairwise_distances,
)
from topo_metrics.errors import BadParams, DegenerateCloud, TooLarge, ZeroDiameter
from topo_metrics.homology.filtration import sorted_edges
from topo_metrics.utils.union_find import UnionFind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TotalPersistenceResult:
    """Normalized total persistence of one diagram"""

    value: float
    dimension: int
    finite_pair_count: int
    essential_count: int
    diameter: float


def _kruskal(dm: DistanceMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray, List[int]]:
    """Edges in filtration order plus the positions of the accepted (MST) edges"""
    rows, cols, weights = sorted_edges(dm)
    forest = UnionFind(dm.n)
    accepted: List[int] = []
    for pos, (i, j) in enumerate(zip(rows.tolist(), cols.tolist())):
        if forest.union(i, j):
            accepted.append(pos)
            if forest.components == 1:
                break
    return rows, cols, weights, accepted


def rips_h0_diagram(dm: DistanceMatrix) -> PersistenceDiagram:
    """
    H0 barcode: n-1 finite bars (0, w) over MST edge weights, plus one essential bar

    Raises:
        DegenerateCloud: fewer than 2 points
    """
    if dm.n < 2:
        raise DegenerateCloud(f"H0 diagram needs at least 2 points, got {dm.n}")

    _, _, weights, accepted = _kruskal(dm)
    pairs = [PersistencePair(0.0, float(weights[pos]), 0) for pos in accepted]
    pairs.append(PersistencePair(0.0, math.inf, 0))

    logger.debug(f"H0: {len(accepted)} finite bars from {dm.n} points")
    return PersistenceDiagram(tuple(pairs), 0, float(dm.values.max()))


class _WorkingColumn:
    """
    Z/2 sum of sorted coboundary chunks, merged lazily

    Only the pivot (the smallest key with odd multiplicity) is materialized; every
    smaller key has already cancelled.
    """

    def __init__(self) -> None:
        self.chunks: List[List[int]] = []
        self.cursors: List[int] = []
        self.heap: List[Tuple[int, int]] = []

    def add(self, chunk: List[int]) -> None:
        if chunk:
            cid = len(self.chunks)
            self.chunks.append(chunk)
            self.cursors.append(0)
            heapq.heappush(self.heap, (chunk[0], cid))

    def _advance(self, cid: int) -> None:
        cursor = self.cursors[cid] + 1
        self.cursors[cid] = cursor
        chunk = self.chunks[cid]
        if cursor < len(chunk):
            heapq.heappush(self.heap, (chunk[cursor], cid))

    def pivot(self) -> Optional[int]:
        heap = self.heap
        while heap:
            key, cid = heapq.heappop(heap)
            same = [cid]
            while heap and heap[0][0] == key:
                same.append(heapq.heappop(heap)[1])
            if len(same) % 2:
                # one copy stays at the head
                heapq.heappush(heap, (key, same.pop()))
                for other in same:
                    self._advance(other)
                return key
            for other in same:
                self._advance(other)
        return None


class _CoboundaryReducer:
    """
    Edge coboundary columns of the Rips 2-skeleton, truncated at the enclosing radius

    A triangle's key is rank(value) * n**3 + code, with code = (a*n + b)*n + c for
    a < b < c, so integer order is filtration order.
    """

    def __init__(self, dm: DistanceMatrix, rows: np.ndarray, cols: np.ndarray):
        n = dm.n
        values, inverse = np.unique(dm.values.ravel(), return_inverse=True)
        if len(values) * n**3 >= 2**63:
            raise TooLarge(f"H1 triangle keys overflow 64 bits for {n} points")

        self.n = n
        self.cube = n**3
        self.rows = rows
        self.cols = cols
        self.values = values
        self.ranks = inverse.reshape(n, n).astype(np.int64)
        self.outside = len(values)

        row_max = dm.values.max(axis=1)
        centre = int(row_max.argmin())
        self.radius = float(row_max[centre])
        self.threshold = int(self.ranks[centre, int(dm.values[centre].argmax())])

    def _triangle_ranks(self, i: int, j: int) -> np.ndarray:
        """Value rank of {i, j, k} for every k; the outside rank for k in {i, j}"""
        ranks = np.maximum(self.ranks[i], self.ranks[j])
        np.maximum(ranks, self.ranks[i, j], out=ranks)
        ranks[i] = ranks[j] = self.outside
        return ranks

    def first_key(self, pos: int) -> Optional[int]:
        """Key of the earliest coface; code grows with k, so argmin breaks ties by code"""
        i, j = int(self.rows[pos]), int(self.cols[pos])
        ranks = self._triangle_ranks(i, j)
        k = int(ranks.argmin())
        rank = int(ranks[k])
        if rank > self.threshold:
            return None
        a, b, c = sorted((i, j, k))
        return rank * self.cube + (a * self.n + b) * self.n + c

    def chunk(self, pos: int) -> List[int]:
        """Sorted keys of every coface within the threshold"""
        i, j = int(self.rows[pos]), int(self.cols[pos])
        ranks = self._triangle_ranks(i, j)
        k = np.flatnonzero(ranks <= self.threshold)
        a = np.minimum(k, i)
        b = np.where(k < i, i, np.minimum(k, j))
        c = np.maximum(k, j)
        keys = ranks[k] * self.cube + (a * self.n + b) * self.n + c
        return np.sort(keys).tolist()

    def _reduce_column(
        self, pos: int, key: int, pivots: Dict[int, Tuple[int, ...]]
    ) -> Tuple[Optional[int], Tuple[int, ...], int]:
        column = _WorkingColumn()
        column.add(self.chunk(pos))
        members = {pos}
        added = 0
        current: Optional[int] = key
        while current is not None:
            owner = pivots.get(current)
            if owner is None:
                break
            for edge in owner:
                column.add(self.chunk(edge))
            members.symmetric_difference_update(owner)
            added += 1
            current = column.pivot()
        return current, tuple(sorted(members)), added

    def reduce(
        self, weights: np.ndarray, cleared: Set[int]
    ) -> Tuple[List[Tuple[float, float]], List[float]]:
        # owners are stored as the edges whose coboundaries sum to the reduced column
        pivots: Dict[int, Tuple[int, ...]] = {}
        pairs: List[Tuple[float, float]] = []
        essential: List[float] = []

        # past the enclosing radius the complex is a cone: a cycle born there dies at birth
        limit = int(np.searchsorted(weights, self.radius, side="right"))
        for pos in range(len(weights) - 1, limit - 1, -1):
            if pos not in cleared:
                pairs.append((float(weights[pos]), float(weights[pos])))

        additions = 0
        for pos in range(limit - 1, -1, -1):
            if pos in cleared:
                continue

            key = self.first_key(pos)
            members: Tuple[int, ...] = (pos,)
            if key is not None and key in pivots:
                key, members, added = self._reduce_column(pos, key, pivots)
                additions += added

            if key is None:
                essential.append(float(weights[pos]))
                continue

            pivots[key] = members
            pairs.append((float(weights[pos]), float(self.values[key // self.cube])))

        logger.debug(
            f"H1 reduction: {len(pairs)} pairs, {additions} column additions, "
            f"cofaces truncated at {self.radius:.6g}"
        )
        return pairs, essential


def rips_h1_diagram(dm: DistanceMatrix) -> PersistenceDiagram:
    """
    H1 barcode of the full Rips complex (up to filtration value = diameter)

    The pairs are exactly those of reducing the edge/triangle boundary matrix with
    clearing; the coboundary traversal only changes how much work that takes.
    Zero-length pairs are kept. Every loop is filled once all triangles are present,
    so no essential H1 bars are expected.

    Raises:
        DegenerateCloud: fewer than 3 points
        TooLarge: too many points for 64-bit triangle keys
    """
    if dm.n < 3:
        raise DegenerateCloud(f"H1 diagram needs at least 3 points, got {dm.n}")

    rows, cols, weights, accepted = _kruskal(dm)
    reducer = _CoboundaryReducer(dm, rows, cols)
    raw_pairs, essential = reducer.reduce(weights, cleared=set(accepted))
    if essential:
        logger.warning(f"H1 reduction left {len(essential)} essential classes; expected none")

    pairs = [PersistencePair(birth, death, 1) for birth, death in sorted(raw_pairs)]
    pairs.extend(PersistencePair(birth, math.inf, 1) for birth in essential)

    logger.debug(f"H1: {len(pairs)} pairs from {dm.n} points")
    return PersistenceDiagram(tuple(pairs), 1, float(dm.values.max()))



def total_persistence(diagram: PersistenceDiagram) -> TotalPersistenceResult:
    """
    Sum of finite bar lengths divided by the cloud diameter

    Essential bars are excluded from the sum.

    Raises:
        ZeroDiameter: the diagram's source cloud has zero diameter
    """
    if not diagram.diameter > 0:
        raise ZeroDiameter("total persistence is undefined for a zero-diameter cloud")

    finite = diagram.finite_pairs
    # fsum is exactly rounded: independent of pair order
    value = math.fsum(p.death - p.birth for p in finite) / diagram.diameter
    return TotalPersistenceResult(
        value=value,
        dimension=diagram.dimension,
        finite_pair_count=len(finite),
        essential_count=diagram.essential_count,
        diameter=diagram.diameter,
    )


def subsample_rows(n: int, size: int, seed: int) -> np.ndarray:
    """
    Uniform random subset of row indices without replacement (partial Fisher–Yates)

    Returns the selected indices in ascending order.
    """
    rng = np.random.default_rng(seed)
    indices = np.arange(n)
    for i in range(size):
        j = int(rng.integers(i, n))
        indices[i], indices[j] = indices[j], indices[i]
    return np.sort(indices[:size])


def rips_diagrams(
    dm: DistanceMatrix, dims: Iterable[int], oracle: bool = False
) -> Dict[int, PersistenceDiagram]:
    """Diagrams for the requested degrees, from the optimized path or the brute-force oracle"""
    dims = sorted(set(dims))
    if oracle:
        from topo_metrics.oracle import naive_persistence

        naive = naive_persistence(dm, max_dim=2 if 1 in dims else 1)
        return {k: naive[k] for k in dims}

    builders = {0: rips_h0_diagram, 1: rips_h1_diagram}
    return {k: builders[k](dm) for k in dims}


def persistence_diagrams(
    emb: EmbeddingMatrix,
    dims: Iterable[int] = (0, 1),
    subsample: Optional[int] = None,
    seed: int = 0,
    kind: DistanceKind = DistanceKind.EUCLIDEAN,
    oracle: bool = False,
) -> Dict[int, PersistenceDiagram]:
    """
    Diagrams of an embedding, after optional seeded subsampling

    Args:
        emb: Embedding point cloud
        dims: Homology degrees to compute (subset of {0, 1})
        subsample: Cap on the number of points; None or >= n means use every point
        seed: Seed of the subsampling generator
        kind: Distance used for the filtration
        oracle: Use the brute-force oracle instead of the optimized path (debugging)
    """
    dims = sorted(set(dims))
    if not dims or any(k not in (0, 1) for k in dims):
        raise BadParams(f"homology degrees must be a non-empty subset of {{0, 1}}, got {dims}")
    if subsample is not None and subsample < 1:
        raise BadParams(f"subsample must be positive, got {subsample}")

    cloud = emb
    if subsample is not None and emb.n > subsample:
        cloud = emb.take(subsample_rows(emb.n, subsample, seed))
        logger.info(f"Subsampled {subsample} of {emb.n} points (seed={seed})")

    dm = pairwise_distances(cloud, kind)
    return rips_diagrams(dm, dims, oracle=oracle)


def report_from_diagrams(
    diagrams: Dict[int, PersistenceDiagram],
    subsample: Optional[int] = None,
    seed: Optional[int] = None,
    kind: DistanceKind = DistanceKind.EUCLIDEAN,
) -> MetricReport:
    """persistence{k} values of already computed diagrams"""
    values = {f"persistence{k}": total_persistence(d).value for k, d in sorted(diagrams.items())}
    return MetricReport(values=values, subsample_size=subsample, seed=seed, metric_kind=kind)


def persistence_metric(
    emb: EmbeddingMatrix,
    dims: Iterable[int] = (0, 1),
    subsample: Optional[int] = None,
    seed: int = 0,
    kind: DistanceKind = DistanceKind.EUCLIDEAN,
    oracle: bool = False,
) -> MetricReport:
    """
    persistence0 / persistence1 of an embedding

    Subsampling (if any) and the seed are recorded in the returned report fragment.
    """
    diagrams = persistence_diagrams(emb, dims, subsample, seed, kind, oracle)
    report = report_from_diagrams(diagrams, subsample, seed, kind)
    logger.info(f"Persistence ({DistanceKind(kind).value}): {report.values}")
    return report
