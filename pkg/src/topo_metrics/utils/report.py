# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Report serialization and whole-file atomic writes.

Reports are JSON with sorted keys, 2-space indent and a trailing newline, so the same
result always produces the same bytes.
"""

import json
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Optional, Union

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def dumps_report(report: Any) -> str:
    """
    Serialize a report deterministically.

    Raises:
        ValueError: report contains NaN or Inf
    """
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False) + "\n"


def atomic_write_bytes(path: PathLike, data: bytes) -> None:
    """Write data to a temp file next to path, then rename it into place."""
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.debug(f"Wrote {len(data)} bytes to {target}")


def atomic_write_text(path: PathLike, text: str) -> None:
    # utf-8 with '\n' line endings on every platform
    atomic_write_bytes(path, text.encode("utf-8"))


def write_report(report: Any, output: Optional[PathLike] = None) -> str:
    """
    Serialize a report and write it to output, or to stdout when output is None.

    Returns:
        The serialized text
    """
    text = dumps_report(report)
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        atomic_write_text(output, text)
        logger.info(f"Report written to {output}")
    return text
