# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""Seeded synthetic point clouds with known topology"""

import logging
from enum import Enum

import numpy as np

from topo_metrics.core import EmbeddingMatrix
from topo_metrics.errors import BadParams

logger = logging.getLogger(__name__)


class CloudShape(str, Enum):
    CIRCLE = "circle"
    CUBE = "cube"
    CLUSTERS = "clusters"


def synth_cloud(
    shape: CloudShape,
    n: int,
    d: int,
    noise: float = 0.0,
    clusters: int = 3,
    seed: int = 0,
) -> EmbeddingMatrix:
    """
    Generate a point cloud

    - circle: n points at equal angles on the unit circle in the first two coordinates,
      plus isotropic Gaussian noise of scale `noise` in every coordinate
    - cube: uniform in [0, 1]^d
    - clusters: `clusters` centers uniform in [0, 1]^d, points assigned round-robin,
      each offset by Gaussian noise of scale `noise`

    Raises:
        BadParams: non-positive sizes, negative noise, circle with d < 2,
            or a cluster count outside [1, n]
    """
    try:
        shape = CloudShape(shape)
    except ValueError as e:
        raise BadParams(f"unknown shape {shape!r}") from e
    if n < 1 or d < 1:
        raise BadParams(f"n and d must be positive, got n={n}, d={d}")
    if noise < 0:
        raise BadParams(f"noise must be >= 0, got {noise}")

    rng = np.random.default_rng(seed)
    if shape is CloudShape.CIRCLE:
        if d < 2:
            raise BadParams(f"circle needs d >= 2, got {d}")
        angles = 2.0 * np.pi * np.arange(n) / n
        points = np.zeros((n, d))
        points[:, 0] = np.cos(angles)
        points[:, 1] = np.sin(angles)
        if noise > 0:
            points += noise * rng.standard_normal((n, d))
    elif shape is CloudShape.CUBE:
        points = rng.random((n, d))
    else:
        if not 1 <= clusters <= n:
            raise BadParams(f"clusters must be in [1, n={n}], got {clusters}")
        centers = rng.random((clusters, d))
        labels = np.arange(n) % clusters
        points = centers[labels] + noise * rng.standard_normal((n, d))

    logger.debug(f"Generated {shape.value} cloud n={n} d={d} noise={noise} seed={seed}")
    return EmbeddingMatrix(points)
