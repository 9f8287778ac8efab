# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Growth of expected H0 persistence with sample size

For n uniform points on a d-dimensional domain the expected total H0 persistence grows
like n^(1 - 1/d). scaling_experiment samples the unit d-cube over a grid of n, averages
persistence0 over seeded trials and fits the exponent on a log-log scale.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from topo_metrics.core import EmbeddingMatrix, pairwise_distances
from topo_metrics.errors import BadParams
from topo_metrics.homology import rips_h0_diagram, total_persistence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalingFitResult:
    """Log-log fit of mean persistence0 against n for one dimension"""

    dimension_d: int
    sample_sizes: Tuple[int, ...]
    mean_persistence0: Tuple[float, ...]
    fitted_exponent: float
    expected_exponent: float
    alpha_estimate: float

    def as_dict(self) -> Dict[str, object]:
        return {
            "d": self.dimension_d,
            "fitted_exponent": self.fitted_exponent,
            "expected_exponent": self.expected_exponent,
            "alpha_estimate": self.alpha_estimate,
            "mean_persistence0": list(self.mean_persistence0),
        }


def trial_rng(seed: int, d: int, n: int, trial: int) -> np.random.Generator:
    """Independent stream per (d, n, trial), stable regardless of scheduling"""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(d, n, trial)))


def _trial_persistence0(d: int, n: int, trial: int, seed: int) -> float:
    points = trial_rng(seed, d, n, trial).random((n, d))
    dm = pairwise_distances(EmbeddingMatrix(points))
    return total_persistence(rips_h0_diagram(dm)).value


def _check_grid(d: int, sample_sizes: Sequence[int], trials: int) -> List[int]:
    if d < 1:
        raise BadParams(f"dimension must be >= 1, got {d}")
    if trials < 1:
        raise BadParams(f"trials must be >= 1, got {trials}")
    sizes = [int(n) for n in sample_sizes]
    if len(sizes) < 2:
        raise BadParams(f"the fit needs at least 2 sample sizes, got {len(sizes)}")
    if any(n < 2 for n in sizes):
        raise BadParams(f"every sample size must be >= 2, got {sizes}")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise BadParams(f"sample sizes must be strictly increasing, got {sizes}")
    return sizes


def scaling_experiment(
    d: int,
    sample_sizes: Sequence[int],
    trials: int,
    seed: int,
    threads: int = 1,
) -> ScalingFitResult:
    """
    Fit log(mean persistence0) = log(alpha) + exponent * log(n) over uniform cube samples

    Args:
        d: Dimension of the unit cube
        sample_sizes: Strictly increasing point counts (at least two)
        trials: Samples drawn per point count
        seed: Root seed; each trial derives its own stream
        threads: Worker threads for the trials

    Returns:
        ScalingFitResult; alpha_estimate = exp(intercept)

    Raises:
        BadParams: invalid dimension, grid or trial count
    """
    sizes = _check_grid(d, sample_sizes, trials)
    jobs = [(n, t) for n in sizes for t in range(trials)]

    logger.info(f"Scaling experiment d={d}: {len(sizes)} sizes x {trials} trials")
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        values = list(pool.map(lambda job: _trial_persistence0(d, job[0], job[1], seed), jobs))

    means = []
    for i, _ in enumerate(sizes):
        chunk = values[i * trials : (i + 1) * trials]
        means.append(math.fsum(chunk) / trials)

    slope, intercept = np.polyfit(np.log(sizes), np.log(means), 1)
    result = ScalingFitResult(
        dimension_d=d,
        sample_sizes=tuple(sizes),
        mean_persistence0=tuple(means),
        fitted_exponent=float(slope),
        expected_exponent=1.0 - 1.0 / d,
        alpha_estimate=float(math.exp(intercept)),
    )
    logger.info(
        f"d={d}: fitted exponent {result.fitted_exponent:.4f} "
        f"(expected {result.expected_exponent:.4f}), alpha {result.alpha_estimate:.4f}"
    )
    return result
