# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Runtime settings for topo-metrics

Provides a Settings dataclass that supports:
- Worker parallelism cap (TOPO_METRICS_THREADS)
- Default persistence subsample cap and seed
- Logging level
- Environment-based configuration (a .env file is honoured by the CLI)
"""

import os
from dataclasses import dataclass, field
from typing import Optional

DEFAULT_SUBSAMPLE = 512


def _default_threads() -> int:
    return os.cpu_count() or 1


@dataclass
class Settings:
    """topo-metrics runtime settings"""

    # Parallelism
    threads: int = field(default_factory=_default_threads)

    # Persistence defaults
    subsample: Optional[int] = DEFAULT_SUBSAMPLE
    seed: int = 0

    # Logging
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from environment variables"""
        threads = os.getenv("TOPO_METRICS_THREADS")
        subsample = os.getenv("TOPO_METRICS_SUBSAMPLE")
        try:
            return cls(
                threads=int(threads) if threads else _default_threads(),
                subsample=int(subsample) if subsample else DEFAULT_SUBSAMPLE,
                seed=int(os.getenv("TOPO_METRICS_SEED", "0")),
                log_level=os.getenv("TOPO_METRICS_LOG_LEVEL", "WARNING").upper(),
            )
        except ValueError as e:
            raise ValueError(f"Invalid TOPO_METRICS_* environment value: {e}") from e

    def validate(self) -> None:
        """Validate settings"""
        if self.threads < 1:
            raise ValueError("TOPO_METRICS_THREADS must be a positive integer")

        if self.subsample is not None and self.subsample < 2:
            raise ValueError("TOPO_METRICS_SUBSAMPLE must be at least 2")

        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {self.log_level}")
