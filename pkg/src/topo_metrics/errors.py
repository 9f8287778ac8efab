# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Exception hierarchy for topo-metrics

Two families, so callers (and the CLI exit codes) can tell them apart:
- InputError: the data, files or parameters handed in are unusable
- ComputationError: the input was well-formed but the math is undefined for it
"""

from typing import Optional


class TopoMetricsError(Exception):
    """Base class for every error raised by topo_metrics"""


class InputError(TopoMetricsError, ValueError):
    """Bad input data, file content or parameters"""


class ComputationError(TopoMetricsError, ArithmeticError):
    """A metric or diagram is undefined for the given (valid) input"""


# Input errors

class NonFiniteInput(InputError):
    """NaN or Inf found where finite floats are required"""


class ZeroNormRow(InputError):
    """A row has zero norm where a direction is needed (cosine, SelfCluster)"""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} has zero norm")


class ParseError(InputError):
    """A field could not be parsed; row and column are 1-based"""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[int] = None):
        self.row = row
        self.column = column
        where = ""
        if row is not None:
            where = f" (row {row}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{where}")


class ShapeError(InputError):
    """Ragged rows or a size that does not match the declared shape"""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        super().__init__(message if row is None else f"{message} (row {row})")


class BadParams(InputError):
    """Inconsistent or out-of-range parameters"""


class MissingColumn(InputError):
    """A metric, task or group column is absent from a run table"""


class LengthMismatch(InputError):
    """Two series that must be paired have different lengths"""


class TooFewRuns(InputError):
    """Fewer records than a correlation needs"""


class ConfigError(InputError):
    """Malformed evaluation sidecar configuration"""


# Computation errors

class DegenerateCloud(ComputationError):
    """Too few points for the requested operation"""


class ZeroDiameter(ComputationError):
    """All points coincide, so normalizing by the diameter is undefined"""


class AllZeroMatrix(ComputationError):
    """Every singular value is zero"""


class RankTooLow(ComputationError):
    """Numerical rank too small for the requested fit"""


class ZeroVariance(ComputationError):
    """A series has zero variance, so its correlation is undefined"""


class AllTied(ZeroVariance):
    """Every value of a series is tied, so its rank correlation is undefined"""


class TooLarge(ComputationError):
    """Input exceeds the size bound of an exact algorithm"""
