# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Spectral and clustering baselines for unsupervised embedding evaluation

Every spectral metric works on the singular values / left singular vectors of the
mean-centered embedding. SelfCluster works on raw unit-normalized rows.
One SpectralSummary can be computed per embedding and shared by all metrics.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from topo_metrics.core import EmbeddingMatrix
from topo_metrics.errors import (
    AllZeroMatrix,
    BadParams,
    DegenerateCloud,
    RankTooLow,
    ZeroNormRow,
)

logger = logging.getLogger(__name__)

RANK_TOLERANCE = 1e-6
RANKME_EPSILON = 1e-7


@dataclass(frozen=True, eq=False)
class SpectralSummary:
    """Singular values (descending) and the top-r left singular vectors"""

    singular_values: np.ndarray
    left_vectors: np.ndarray
    numerical_rank: int
    n: int
    d: int

    @classmethod
    def from_embedding(cls, emb: EmbeddingMatrix, center: bool = True) -> "SpectralSummary":
        values = emb.values
        if center:
            values = values - values.mean(axis=0)

        u, s, _ = np.linalg.svd(values, full_matrices=False)
        s = np.clip(s, 0.0, None)
        # centering identical rows leaves only rounding residue
        noise_floor = np.finfo(np.float64).eps * max(emb.n, emb.d) * np.abs(emb.values).max()
        rank = int(np.count_nonzero(s > RANK_TOLERANCE * s[0])) if s[0] > noise_floor else 0

        logger.debug(f"SVD of {emb.n}x{emb.d} embedding: rank {rank}, sigma_1={s[0]:.6g}")
        return cls(
            singular_values=s,
            left_vectors=u[:, :rank],
            numerical_rank=rank,
            n=emb.n,
            d=emb.d,
        )

    def require_nonzero(self) -> None:
        if self.numerical_rank == 0:
            raise AllZeroMatrix("every singular value is zero (all rows identical after centering)")

    @property
    def eigenvalues(self) -> np.ndarray:
        """Covariance spectrum up to a constant factor: sigma_i^2"""
        return self.singular_values ** 2


def _summary(emb: EmbeddingMatrix, summary: Optional[SpectralSummary]) -> SpectralSummary:
    if emb.n < 2:
        raise DegenerateCloud(f"spectral metrics need at least 2 rows, got {emb.n}")
    if summary is None:
        summary = SpectralSummary.from_embedding(emb)
    summary.require_nonzero()
    return summary


def rankme(emb: EmbeddingMatrix, summary: Optional[SpectralSummary] = None) -> float:
    """Effective rank: exp of the entropy of the normalized singular values"""
    summary = _summary(emb, summary)
    s = summary.singular_values
    p = s / s.sum() + RANKME_EPSILON
    return float(np.exp(-np.sum(p * np.log(p))))


def alpha_req(emb: EmbeddingMatrix, summary: Optional[SpectralSummary] = None) -> float:
    """
    Eigenvalue decay exponent alpha from log(lambda_i) = c - alpha * log(i)

    Least squares over i = 1..r (the numerical rank).

    Raises:
        RankTooLow: fewer than 3 retained eigenvalues
    """
    summary = _summary(emb, summary)
    r = summary.numerical_rank
    if r < 3:
        raise RankTooLow(f"alpha-ReQ needs numerical rank >= 3, got {r}")

    log_i = np.log(np.arange(1, r + 1, dtype=np.float64))
    log_lambda = np.log(summary.eigenvalues[:r])
    slope, _ = np.polyfit(log_i, log_lambda, 1)
    return float(-slope)


def _eigen_mass_ratio(summary: SpectralSummary) -> float:
    lam = summary.eigenvalues
    return float(math.fsum(lam) / lam[0])


def nesum(emb: EmbeddingMatrix, summary: Optional[SpectralSummary] = None) -> float:
    """Normalized eigenvalue sum: sum(lambda_i) / lambda_1"""
    return _eigen_mass_ratio(_summary(emb, summary))


def stable_rank(emb: EmbeddingMatrix, summary: Optional[SpectralSummary] = None) -> float:
    """
    Frobenius over spectral norm squared: sum(sigma_i^2) / sigma_1^2

    Numerically identical to nesum on the same (centered) spectrum; both are reported
    because they are compared as separate baselines.
    """
    return _eigen_mass_ratio(_summary(emb, summary))


def mu0_incoherence(emb: EmbeddingMatrix, summary: Optional[SpectralSummary] = None) -> float:
    """(n / r) * max_i ||U_i||^2 over the top-r left singular vectors"""
    summary = _summary(emb, summary)
    row_mass = np.sum(summary.left_vectors ** 2, axis=1)
    return float(summary.n / summary.numerical_rank * row_mass.max())


def pc_number(emb: EmbeddingMatrix, summary: Optional[SpectralSummary] = None) -> float:
    """Pseudo-condition number sigma_1 / sigma_r at the numerical rank r"""
    summary = _summary(emb, summary)
    s = summary.singular_values
    return float(s[0] / s[summary.numerical_rank - 1])


def self_cluster(emb: EmbeddingMatrix) -> float:
    """
    Excess concentration of squared cosine similarities over uniform random directions

    0 in expectation for isotropic clouds, 1 when all rows are identical up to sign.

    Raises:
        ZeroNormRow: some row is the zero vector
    """
    n, d = emb.n, emb.d
    if n < 2 or d < 2:
        raise BadParams(f"SelfCluster needs n >= 2 and d >= 2, got n={n}, d={d}")

    norms = np.linalg.norm(emb.values, axis=1)
    zero_rows = np.flatnonzero(norms == 0)
    if zero_rows.size:
        raise ZeroNormRow(int(zero_rows[0]) + 1)

    unit = emb.values / norms[:, None]
    # ||U U^T||_F^2 == ||U^T U||_F^2; the d x d form is cheaper when n > d
    gram = unit.T @ unit if n > d else unit @ unit.T
    off_diagonal = float(np.sum(gram ** 2)) - n
    pairs = n * (n - 1)
    expected = pairs / d
    return (off_diagonal - expected) / (pairs * (1.0 - 1.0 / d))
