# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""Tests for the Rips filtration, H0/H1 diagrams and total persistence."""
import math

import numpy as np
import pytest

from topo_metrics.core import DistanceMatrix, EmbeddingMatrix, pairwise_distances
from topo_metrics.errors import BadParams, DegenerateCloud, ZeroDiameter
from topo_metrics.homology import (
    FiltrationOrder,
    Simplex,
    persistence_diagrams,
    persistence_metric,
    rips_diagrams,
    rips_h0_diagram,
    rips_h1_diagram,
    subsample_rows,
    total_persistence,
)
from topo_metrics.oracle import naive_persistence

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def _positive_bars(diagram):
    return [(p.birth, p.death) for p in diagram.finite_pairs if p.death > p.birth]


class TestFiltration:
    """Test cases for simplices and the filtration order."""

    def test_simplex_dimension_and_facets(self):
        """Test a triangle has dimension 2 and three edge facets."""
        simplex = Simplex((0, 2, 5), 1.0)
        assert simplex.dimension == 2
        assert sorted(simplex.facets()) == [(0, 2), (0, 5), (2, 5)]

    def test_simplex_rejects_unsorted(self):
        """Test vertices must be strictly increasing."""
        with pytest.raises(ValueError):
            Simplex((2, 1), 1.0)

    def test_faces_precede_cofaces(self, random_cloud):
        """Test every facet appears earlier in the order."""
        order = FiltrationOrder.build(pairwise_distances(random_cloud(n=7, d=2)))
        index = order.index()
        for j, simplex in enumerate(order.simplices):
            assert all(index[f] < j for f in simplex.facets())

    def test_tie_order(self, equilateral):
        """Test ties sort by dimension, then lexicographic vertices."""
        order = FiltrationOrder.build(equilateral)
        assert [s.vertices for s in order.simplices] == [
            (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)
        ]


class TestH0:
    """Test cases for rips_h0_diagram."""

    def test_two_points(self):
        """Test one merge at the pair distance plus one essential bar."""
        dm = DistanceMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
        diagram = rips_h0_diagram(dm)
        assert diagram.as_tuples() == ((0.0, 1.0), (0.0, math.inf))

    def test_collinear(self, collinear):
        """Test collinear 0, 1, 2 merges twice at 1."""
        diagram = rips_h0_diagram(pairwise_distances(collinear))
        assert diagram.as_tuples() == ((0.0, 1.0), (0.0, 1.0), (0.0, math.inf))

    def test_unit_square(self, unit_square):
        """Test the diagonal is never an MST edge."""
        diagram = rips_h0_diagram(pairwise_distances(unit_square))
        assert diagram.as_tuples() == ((0.0, 1.0),) * 3 + ((0.0, math.inf),)

    @pytest.mark.parametrize("n", [2, 5, 40])
    def test_bar_count(self, random_cloud, n):
        """Test n bars, one of them essential."""
        diagram = rips_h0_diagram(pairwise_distances(random_cloud(n=n, d=3)))
        assert len(diagram.pairs) == n
        assert diagram.essential_count == 1

    def test_single_point(self):
        """Test fewer than two points is degenerate."""
        with pytest.raises(DegenerateCloud):
            rips_h0_diagram(DistanceMatrix(np.zeros((1, 1))))


class TestH1:
    """Test cases for rips_h1_diagram."""

    def test_unit_square_loop(self, unit_square):
        """Test the square's loop is born at 1 and filled at sqrt(2)."""
        diagram = rips_h1_diagram(pairwise_distances(unit_square))
        assert _positive_bars(diagram) == [(1.0, SQRT2)]
        assert diagram.essential_count == 0

    def test_equilateral_zero_length(self, equilateral):
        """Test the equilateral triangle only has a zero-length pair."""
        diagram = rips_h1_diagram(equilateral)
        assert diagram.as_tuples() == ((1.0, 1.0),)

    def test_pair_count(self, random_cloud):
        """Test every non-MST edge is paired with a triangle."""
        n = 12
        diagram = rips_h1_diagram(pairwise_distances(random_cloud(n=n, d=3, seed=4)))
        assert len(diagram.finite_pairs) == n * (n - 1) // 2 - (n - 1)
        assert diagram.essential_count == 0

    def test_circle(self, unit_circle_60):
        """Test 60 points on a circle give one dominant loop dying at sqrt(3)."""
        diagram = rips_h1_diagram(pairwise_distances(unit_circle_60))
        bars = sorted(diagram.finite_pairs, key=lambda p: p.length, reverse=True)
        assert bars[0].length >= 10 * bars[1].length
        assert bars[0].death == pytest.approx(math.sqrt(3), abs=1e-6)

    def test_born_past_enclosing_radius(self):
        """Test edges longer than the enclosing radius give zero-length pairs."""
        # centre plus an equilateral triangle: enclosing radius 1, sides sqrt(3)
        emb = EmbeddingMatrix(
            np.array([[0.0, 0.0], [0.0, 1.0], [-0.5 * SQRT3, -0.5], [0.5 * SQRT3, -0.5]])
        )
        dm = pairwise_distances(emb)
        diagram = rips_h1_diagram(dm)
        assert len(diagram.finite_pairs) == 3
        assert all(p.birth == p.death > 1.7 for p in diagram.finite_pairs)
        assert diagram.as_tuples() == naive_persistence(dm)[1].as_tuples()

    def test_too_few_points(self):
        """Test fewer than three points is degenerate."""
        with pytest.raises(DegenerateCloud):
            rips_h1_diagram(DistanceMatrix(np.array([[0.0, 1.0], [1.0, 0.0]])))

    @pytest.mark.parametrize("seed", range(5))
    def test_bounds(self, random_cloud, seed):
        """Test 0 <= birth <= death <= diameter for every finite pair."""
        dm = pairwise_distances(random_cloud(n=15, d=2, seed=seed))
        diagram = rips_h1_diagram(dm)
        for pair in diagram.finite_pairs:
            assert 0.0 <= pair.birth <= pair.death <= diagram.diameter


class TestTotalPersistence:
    """Test cases for total_persistence."""

    def test_two_points(self):
        """Test one bar of length 1 over diameter 1."""
        dm = DistanceMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert total_persistence(rips_h0_diagram(dm)).value == 1.0

    def test_unit_square(self, unit_square):
        """Test persistence0 = 3/sqrt(2) and persistence1 = (sqrt(2)-1)/sqrt(2)."""
        dm = pairwise_distances(unit_square)
        h0 = total_persistence(rips_h0_diagram(dm))
        h1 = total_persistence(rips_h1_diagram(dm))
        assert h0.value == pytest.approx(3 / SQRT2, abs=1e-12)
        assert h1.value == pytest.approx((SQRT2 - 1) / SQRT2, abs=1e-12)
        assert h0.essential_count == 1
        assert h0.finite_pair_count == 3

    def test_equilateral_zero(self, equilateral):
        """Test zero-length pairs contribute nothing."""
        assert total_persistence(rips_h1_diagram(equilateral)).value == 0.0

    def test_zero_diameter(self):
        """Test coincident points cannot be normalized."""
        diagram = rips_h0_diagram(DistanceMatrix(np.zeros((3, 3))))
        with pytest.raises(ZeroDiameter):
            total_persistence(diagram)


class TestInvariance:
    """Test invariance properties of total persistence."""

    @pytest.mark.parametrize("scale", [0.01, 2.5, 1e3])
    def test_scale(self, random_cloud, scale):
        """Test global scaling leaves both values unchanged."""
        emb = random_cloud(n=20, d=3, seed=2)
        base = persistence_metric(emb, subsample=None).values
        scaled = persistence_metric(EmbeddingMatrix(scale * emb.values), subsample=None).values
        for name in ("persistence0", "persistence1"):
            assert scaled[name] == pytest.approx(base[name], rel=1e-9)

    def test_isometry(self, random_cloud, orthogonal):
        """Test rotation plus translation leaves the diagrams unchanged."""
        emb = random_cloud(n=18, d=4, seed=3)
        shift = np.array([1.0, -2.0, 3.0, 0.5])
        moved = EmbeddingMatrix(emb.values @ orthogonal(4, seed=7) + shift)
        before = persistence_diagrams(emb)
        after = persistence_diagrams(moved)
        for k in (0, 1):
            a = [x for pair in before[k].as_tuples() for x in pair if math.isfinite(x)]
            b = [x for pair in after[k].as_tuples() for x in pair if math.isfinite(x)]
            assert b == pytest.approx(a, abs=1e-9)

    def test_permutation(self, random_cloud):
        """Test reordering rows changes nothing, exactly."""
        emb = random_cloud(n=25, d=3, seed=5)
        perm = np.random.default_rng(11).permutation(emb.n)
        base = persistence_metric(emb, subsample=None).values
        shuffled = persistence_metric(emb.take(perm), subsample=None).values
        assert shuffled == base

    def test_duplicates_add_zero_bars(self, random_cloud):
        """Test doubling every point adds only zero-length H0 bars."""
        emb = random_cloud(n=20, d=2, seed=6)
        doubled = EmbeddingMatrix(np.vstack([emb.values, emb.values]))
        base = persistence_metric(emb, dims={0}, subsample=None).values["persistence0"]
        again = persistence_metric(doubled, dims={0}, subsample=None).values["persistence0"]
        assert again == pytest.approx(base, abs=1e-12)
        h0 = rips_h0_diagram(pairwise_distances(doubled))
        assert sum(1 for p in h0.finite_pairs if p.death == 0.0) == emb.n


class TestPersistenceMetric:
    """Test cases for persistence_metric and subsampling."""

    def test_unit_square(self, unit_square):
        """Test both degrees on the unit square."""
        report = persistence_metric(unit_square, dims={0, 1})
        assert report.values["persistence0"] == pytest.approx(2.12132034, abs=1e-8)
        assert report.values["persistence1"] == pytest.approx(0.29289322, abs=1e-8)

    def test_records_provenance(self, random_cloud):
        """Test subsample size and seed are recorded."""
        report = persistence_metric(random_cloud(n=50), dims={0}, subsample=20, seed=7)
        assert report.subsample_size == 20
        assert report.seed == 7

    def test_subsample_deterministic(self, random_cloud):
        """Test the same seed gives identical values."""
        emb = random_cloud(n=1000, d=3, seed=8)
        first = persistence_metric(emb, dims={0}, subsample=512, seed=3).values
        second = persistence_metric(emb, dims={0}, subsample=512, seed=3).values
        assert first == second

    def test_subsample_not_needed(self, random_cloud):
        """Test subsample >= n is the same as no subsampling."""
        emb = random_cloud(n=30, d=3, seed=9)
        capped = persistence_metric(emb, subsample=30, seed=1).values
        full = persistence_metric(emb, subsample=None).values
        assert capped == full

    def test_rejects_bad_degree(self, random_cloud):
        """Test only degrees 0 and 1 are supported."""
        with pytest.raises(BadParams):
            persistence_metric(random_cloud(), dims={2})

    def test_subsample_rows(self):
        """Test subsample indices are sorted, distinct and in range."""
        rows = subsample_rows(100, 10, seed=4)
        assert len(rows) == 10
        assert list(rows) == sorted(set(rows.tolist()))
        assert rows.min() >= 0 and rows.max() < 100
        assert np.array_equal(rows, subsample_rows(100, 10, seed=4))

    def test_oracle_path(self, unit_square):
        """Test the brute-force path agrees on the unit square."""
        dm = pairwise_distances(unit_square)
        fast = rips_diagrams(dm, (0, 1))
        slow = rips_diagrams(dm, (0, 1), oracle=True)
        assert fast[0].as_tuples() == slow[0].as_tuples()
        assert fast[1].as_tuples() == slow[1].as_tuples()
