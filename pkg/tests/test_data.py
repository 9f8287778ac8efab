# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""Tests for embedding file formats and synthetic clouds."""
import struct

import numpy as np
import pytest

from topo_metrics.core import EmbeddingMatrix
from topo_metrics.data import (
    CloudShape,
    EmbeddingFormat,
    load_embeddings,
    save_embeddings,
    synth_cloud,
)
from topo_metrics.data.embeddings import MAGIC, dumps_binary
from topo_metrics.errors import BadParams, NonFiniteInput, ParseError, ShapeError


class TestEmbeddingFormat:
    """Test cases for format inference."""

    @pytest.mark.parametrize(
        "name, expected",
        [("a.csv", EmbeddingFormat.CSV), ("a.BIN", EmbeddingFormat.BINARY), ("a.txt", "csv")],
    )
    def test_infer(self, name, expected):
        """Test .bin means binary and anything else CSV."""
        assert EmbeddingFormat.infer(name) == expected


class TestCsv:
    """Test cases for CSV embeddings."""

    def test_plain(self, tmp_path):
        """Test a headerless file loads as written."""
        path = tmp_path / "e.csv"
        path.write_text("0,0\n1,0\n0,1\n1,1\n", encoding="utf-8")
        emb = load_embeddings(path)
        assert emb.values.tolist() == [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]

    def test_header_skipped(self, tmp_path):
        """Test a non-numeric first row is treated as a header."""
        path = tmp_path / "e.csv"
        path.write_text("x,y\n1.5,2\n3,4e-1\n", encoding="utf-8")
        assert load_embeddings(path).values.tolist() == [[1.5, 2.0], [3.0, 0.4]]

    def test_blank_lines_ignored(self, tmp_path):
        """Test blank lines do not count as rows."""
        path = tmp_path / "e.csv"
        path.write_text("1,2\n\n3,4\n\n", encoding="utf-8")
        assert load_embeddings(path).n == 2

    def test_ragged(self, tmp_path):
        """Test a short row is reported with its line."""
        path = tmp_path / "e.csv"
        path.write_text("1,2\n3\n", encoding="utf-8")
        with pytest.raises(ShapeError) as excinfo:
            load_embeddings(path)
        assert excinfo.value.row == 2

    def test_not_a_number(self, tmp_path):
        """Test a bad field is reported with row and column."""
        path = tmp_path / "e.csv"
        path.write_text("1,2\n3,abc\n", encoding="utf-8")
        with pytest.raises(ParseError) as excinfo:
            load_embeddings(path)
        assert (excinfo.value.row, excinfo.value.column) == (2, 2)

    def test_nan(self, tmp_path):
        """Test NaN values are rejected."""
        path = tmp_path / "e.csv"
        path.write_text("1,2\nnan,4\n", encoding="utf-8")
        with pytest.raises(NonFiniteInput):
            load_embeddings(path)

    def test_empty(self, tmp_path):
        """Test an empty file is rejected."""
        path = tmp_path / "e.csv"
        path.write_text("", encoding="utf-8")
        with pytest.raises(ShapeError):
            load_embeddings(path)

    def test_header_only(self, tmp_path):
        """Test a header without data is rejected."""
        path = tmp_path / "e.csv"
        path.write_text("a,b\n", encoding="utf-8")
        with pytest.raises(ShapeError):
            load_embeddings(path)

    def test_missing_file(self, tmp_path):
        """Test a missing file raises OSError."""
        with pytest.raises(OSError):
            load_embeddings(tmp_path / "absent.csv")

    def test_round_trip_exact(self, tmp_path, random_cloud):
        """Test saved CSV reloads bit-for-bit."""
        emb = random_cloud(n=10, d=4, seed=1)
        path = tmp_path / "e.csv"
        save_embeddings(emb, path)
        assert np.array_equal(load_embeddings(path).values, emb.values)


class TestBinary:
    """Test cases for binary embeddings."""

    def test_layout(self):
        """Test magic, little-endian shape and row-major values."""
        blob = dumps_binary(EmbeddingMatrix(np.array([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])))
        assert blob[:8] == MAGIC
        assert struct.unpack("<II", blob[8:16]) == (2, 3)
        assert np.frombuffer(blob[16:], dtype="<f8").tolist() == [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]

    def test_round_trip(self, tmp_path, random_cloud):
        """Test saved binary reloads bit-for-bit."""
        emb = random_cloud(n=7, d=3, seed=2)
        path = tmp_path / "e.bin"
        save_embeddings(emb, path)
        assert np.array_equal(load_embeddings(path).values, emb.values)

    def test_truncated(self, tmp_path, random_cloud):
        """Test a file shorter than its header promises is rejected."""
        path = tmp_path / "e.bin"
        path.write_bytes(dumps_binary(random_cloud(n=4, d=2))[:-8])
        with pytest.raises(ShapeError):
            load_embeddings(path)

    def test_trailing_bytes(self, tmp_path, random_cloud):
        """Test extra bytes after the values are rejected."""
        path = tmp_path / "e.bin"
        path.write_bytes(dumps_binary(random_cloud(n=4, d=2)) + b"\x00")
        with pytest.raises(ShapeError):
            load_embeddings(path)

    def test_bad_magic(self, tmp_path):
        """Test a wrong magic string is a parse error."""
        path = tmp_path / "e.bin"
        path.write_bytes(b"NOTEMBED" + struct.pack("<II", 1, 1) + struct.pack("<d", 1.0))
        with pytest.raises(ParseError):
            load_embeddings(path)

    def test_short_header(self, tmp_path):
        """Test a file shorter than the header is rejected."""
        path = tmp_path / "e.bin"
        path.write_bytes(MAGIC)
        with pytest.raises(ShapeError):
            load_embeddings(path)

    def test_explicit_format(self, tmp_path, random_cloud):
        """Test the format can be forced regardless of suffix."""
        emb = random_cloud(n=3, d=2)
        path = tmp_path / "e.dat"
        save_embeddings(emb, path, fmt="bin")
        assert np.array_equal(load_embeddings(path, fmt="bin").values, emb.values)


class TestSynthCloud:
    """Test cases for synth_cloud."""

    def test_circle(self):
        """Test circle points lie on the unit circle without noise."""
        emb = synth_cloud(CloudShape.CIRCLE, n=12, d=3)
        radii = np.hypot(emb.values[:, 0], emb.values[:, 1])
        assert np.allclose(radii, 1.0, atol=1e-15)
        assert np.all(emb.values[:, 2] == 0.0)

    def test_cube_range(self):
        """Test cube points stay in [0, 1)."""
        emb = synth_cloud("cube", n=50, d=4, seed=3)
        assert emb.values.min() >= 0.0 and emb.values.max() < 1.0

    def test_clusters_without_noise(self):
        """Test noiseless clusters collapse onto their centers."""
        emb = synth_cloud(CloudShape.CLUSTERS, n=9, d=2, clusters=3, seed=1)
        assert len({tuple(row) for row in emb.values.tolist()}) == 3

    def test_seeded(self):
        """Test the same seed gives the same cloud."""
        a = synth_cloud("cube", n=20, d=3, seed=9)
        b = synth_cloud("cube", n=20, d=3, seed=9)
        assert np.array_equal(a.values, b.values)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"shape": "torus", "n": 5, "d": 2},
            {"shape": "cube", "n": 0, "d": 2},
            {"shape": "cube", "n": 5, "d": 0},
            {"shape": "circle", "n": 5, "d": 1},
            {"shape": "circle", "n": 5, "d": 2, "noise": -1.0},
            {"shape": "clusters", "n": 5, "d": 2, "clusters": 6},
            {"shape": "clusters", "n": 5, "d": 2, "clusters": 0},
        ],
    )
    def test_bad_params(self, kwargs):
        """Test invalid shapes and sizes are rejected."""
        with pytest.raises(BadParams):
            synth_cloud(**kwargs)
