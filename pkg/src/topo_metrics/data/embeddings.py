# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Embedding file formats

- CSV: one row per point, comma separated, optional non-numeric header row
  (written back at 17 significant digits, which round-trips every float64)
- Binary: ASCII magic "EMBMAT01", rows and cols as little-endian uint32,
  then rows*cols little-endian float64 values in row-major order
"""

import csv
import io
import logging
import math
import struct
from enum import Enum
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from topo_metrics.core import EmbeddingMatrix
from topo_metrics.errors import NonFiniteInput, ParseError, ShapeError
from topo_metrics.utils.report import atomic_write_bytes

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

MAGIC = b"EMBMAT01"
HEADER = struct.Struct("<II")
MAGIC_SIZE = len(MAGIC)
HEADER_SIZE = MAGIC_SIZE + HEADER.size
FLOAT = np.dtype("<f8")


class EmbeddingFormat(str, Enum):
    CSV = "csv"
    BINARY = "bin"

    @classmethod
    def infer(cls, path: PathLike) -> "EmbeddingFormat":
        """Binary for a .bin suffix, CSV otherwise"""
        return cls.BINARY if Path(path).suffix.lower() == ".bin" else cls.CSV


def _parse_float(field: str) -> Optional[float]:
    try:
        return float(field.strip())
    except ValueError:
        return None


def _parse_csv(text: str) -> np.ndarray:
    rows = [(line_no, row) for line_no, row in enumerate(csv.reader(io.StringIO(text)), 1) if row]
    if not rows:
        raise ShapeError("CSV file contains no data rows")

    first_no, first = rows[0]
    if all(_parse_float(field) is None for field in first):
        logger.debug(f"Treating row {first_no} as a header: {first}")
        rows = rows[1:]
        if not rows:
            raise ShapeError("CSV file has a header but no data rows")

    width = len(rows[0][1])
    data: List[List[float]] = []
    for line_no, row in rows:
        if len(row) != width:
            raise ShapeError(f"expected {width} fields, found {len(row)}", row=line_no)
        values = []
        for col_no, field in enumerate(row, 1):
            value = _parse_float(field)
            if value is None:
                raise ParseError(f"not a number: {field!r}", row=line_no, column=col_no)
            if not math.isfinite(value):
                raise NonFiniteInput(f"non-finite value {field!r} (row {line_no}, column {col_no})")
            values.append(value)
        data.append(values)
    return np.array(data, dtype=np.float64)


def _parse_binary(blob: bytes) -> np.ndarray:
    if len(blob) < HEADER_SIZE:
        raise ShapeError(f"binary embedding file is {len(blob)} bytes, shorter than its header")
    magic = blob[:MAGIC_SIZE]
    if magic != MAGIC:
        raise ParseError(f"bad magic {magic!r}, expected {MAGIC!r}")

    rows, cols = HEADER.unpack_from(blob, MAGIC_SIZE)
    expected = HEADER_SIZE + FLOAT.itemsize * rows * cols
    if len(blob) != expected:
        raise ShapeError(
            f"binary embedding file is {len(blob)} bytes, "
            f"header ({rows}x{cols}) requires {expected}"
        )
    values = np.frombuffer(blob, dtype=FLOAT, offset=HEADER_SIZE)
    return values.reshape(rows, cols).astype(np.float64)


def load_embeddings(
    path: PathLike, fmt: Optional[Union[EmbeddingFormat, str]] = None
) -> EmbeddingMatrix:
    """
    Read an embedding matrix from disk

    Args:
        path: File to read
        fmt: "csv" or "bin"; inferred from the suffix when omitted

    Raises:
        OSError: the file cannot be read
        ParseError: unparsable field or bad magic (with row/column position)
        ShapeError: ragged rows, empty file or length not matching the header
        NonFiniteInput: NaN or Inf values
    """
    fmt = EmbeddingFormat(fmt) if fmt is not None else EmbeddingFormat.infer(path)
    if fmt is EmbeddingFormat.BINARY:
        values = _parse_binary(Path(path).read_bytes())
    else:
        values = _parse_csv(Path(path).read_text(encoding="utf-8"))

    emb = EmbeddingMatrix(values)
    logger.info(f"Loaded {emb.n}x{emb.d} embedding from {path} ({fmt.value})")
    return emb


def dumps_csv(emb: EmbeddingMatrix) -> str:
    return "".join(",".join(format(v, ".17g") for v in row) + "\n" for row in emb.values.tolist())


def dumps_binary(emb: EmbeddingMatrix) -> bytes:
    header = MAGIC + HEADER.pack(emb.n, emb.d)
    return header + np.ascontiguousarray(emb.values, dtype=FLOAT).tobytes(order="C")


def save_embeddings(
    emb: EmbeddingMatrix, path: PathLike, fmt: Optional[Union[EmbeddingFormat, str]] = None
) -> None:
    """Write an embedding matrix as one atomic whole-file replace"""
    fmt = EmbeddingFormat(fmt) if fmt is not None else EmbeddingFormat.infer(path)
    if fmt is EmbeddingFormat.BINARY:
        atomic_write_bytes(path, dumps_binary(emb))
    else:
        atomic_write_bytes(path, dumps_csv(emb).encode("utf-8"))
    logger.info(f"Saved {emb.n}x{emb.d} embedding to {path} ({fmt.value})")
