# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""Pytest configuration and fixtures for topo_metrics tests."""
import math

import numpy as np
import pytest

from topo_metrics.config import Settings
from topo_metrics.core import DistanceMatrix, EmbeddingMatrix
from topo_metrics.evaluation import Orientation, RunRecord, RunTable


def prescribed_spectrum(sigmas, n=None, d=None, seed=0):
    """
    Embedding whose mean-centered singular values are exactly `sigmas` (up to rounding).

    X = U diag(sigmas) V^T with U orthonormal and zero-mean columns, V orthonormal.
    """
    k = len(sigmas)
    n = n or k + 5
    d = d or k
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, k))
    a -= a.mean(axis=0)
    u, _ = np.linalg.qr(a)
    v, _ = np.linalg.qr(rng.standard_normal((d, k)))
    return EmbeddingMatrix(u @ np.diag(np.asarray(sigmas, dtype=float)) @ v.T)


def random_orthogonal(d, seed=0):
    q, r = np.linalg.qr(np.random.default_rng(seed).standard_normal((d, d)))
    return q * np.sign(np.diag(r))


@pytest.fixture
def spectrum():
    """Factory for embeddings with a prescribed centered spectrum."""
    return prescribed_spectrum


@pytest.fixture
def unit_square():
    """Corners of the unit square."""
    return EmbeddingMatrix(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))


@pytest.fixture
def equilateral():
    """Distances of an equilateral triangle with side 1."""
    return DistanceMatrix(np.ones((3, 3)) - np.eye(3))


@pytest.fixture
def collinear():
    """Points 0, 1, 2 on a line."""
    return EmbeddingMatrix(np.array([[0.0], [1.0], [2.0]]))


@pytest.fixture
def unit_circle_60():
    """60 evenly spaced points on the unit circle."""
    angles = 2.0 * math.pi * np.arange(60) / 60
    return EmbeddingMatrix(np.column_stack([np.cos(angles), np.sin(angles)]))


@pytest.fixture
def random_cloud():
    """Factory for seeded Gaussian clouds."""

    def make(n=30, d=3, seed=0):
        return EmbeddingMatrix(np.random.default_rng(seed).standard_normal((n, d)))

    return make


@pytest.fixture
def settings():
    """Deterministic settings independent of the host environment."""
    return Settings(threads=2, subsample=512, seed=0, log_level="WARNING")


@pytest.fixture
def five_runs():
    """
    Hand-checked 5-run table.

    m    = (1, 2, 3, 4, 5)   higher is better
    loss = (9, 7, 8, 3, 5)   lower is better
    t    = (2, 1, 4, 3, 5)
    u    = (10, 30, 20, 50, 40)
    """
    m = [1, 2, 3, 4, 5]
    loss = [9, 7, 8, 3, 5]
    t = [2, 1, 4, 3, 5]
    u = [10, 30, 20, 50, 40]
    records = tuple(
        RunRecord(
            run_id=f"r{i + 1}",
            unsup={"m": float(m[i]), "loss": float(loss[i])},
            downstream={"t": float(t[i]), "u": float(u[i])},
        )
        for i in range(5)
    )
    return RunTable(records, orientation={"loss": Orientation.LOWER_BETTER})


FIVE_RUNS_CSV = """run_id,m,loss,t,u,notes
r1,1,9,2,10,first
r2,2,7,1,30,
r3,3,8,4,20,x
r4,4,3,3,50,
r5,5,5,5,40,last
"""

FIVE_RUNS_YAML = """metrics: [m, loss]
tasks: [t, u]
orientation:
  loss: lower_better
"""


@pytest.fixture
def five_runs_csv():
    """The 5-run table as manifest text, with an extra free-text column."""
    return FIVE_RUNS_CSV


@pytest.fixture
def five_runs_files(tmp_path):
    """The 5-run table as a manifest plus YAML config on disk."""
    runs = tmp_path / "runs.csv"
    runs.write_text(FIVE_RUNS_CSV, encoding="utf-8")
    config = tmp_path / "evaluation.yaml"
    config.write_text(FIVE_RUNS_YAML, encoding="utf-8")
    return runs, config


@pytest.fixture
def orthogonal():
    """Factory for seeded random orthogonal matrices."""
    return random_orthogonal
