"""Tests for storage utilities."""

import json

import numpy as np
import pytest

from prsplit.models import ConvergenceReport, ConvergenceRow
from prsplit.storage import (
    SNAPSHOT_HEADER,
    SNAPSHOT_MAGIC,
    format_float,
    read_json,
    read_snapshot,
    write_columns_csv,
    write_csv_rows,
    write_json,
    write_snapshot,
    write_text_atomic,
)


class TestSnapshots:
    """Tests for the binary snapshot format."""

    def test_layout(self, tmp_path) -> None:
        """Test the 32-byte header and little-endian row-major body."""
        path = tmp_path / "snap.bin"
        data = np.arange(2 * 4 * 4, dtype=float).reshape(2, 4, 4)

        write_snapshot(path, data, 1.5)

        raw = path.read_bytes()
        assert SNAPSHOT_HEADER.size == 32
        assert raw[:10] == SNAPSHOT_MAGIC
        assert len(raw) == 32 + 2 * 16 * 8
        assert np.frombuffer(raw, dtype="<f8", offset=32)[5] == 5.0

    def test_read_back(self, tmp_path) -> None:
        """Test that read_snapshot recovers components and time."""
        path = tmp_path / "snap.bin"
        data = np.random.default_rng(3).normal(size=(2, 8, 8))

        write_snapshot(path, data, 0.25)
        components, time = read_snapshot(path)

        assert time == 0.25
        assert np.array_equal(components, data)

    def test_bad_magic(self, tmp_path) -> None:
        """Test that foreign files are refused."""
        path = tmp_path / "other.bin"
        path.write_bytes(b"NOTASNAPSH" + bytes(22))

        with pytest.raises(ValueError, match="not a snapshot"):
            read_snapshot(path)

    def test_truncated(self, tmp_path) -> None:
        """Test that short files are refused."""
        path = tmp_path / "short.bin"
        path.write_bytes(SNAPSHOT_MAGIC)

        with pytest.raises(ValueError, match="truncated"):
            read_snapshot(path)

    def test_requires_square_components(self, tmp_path) -> None:
        """Test that non-(c, n, n) arrays are refused."""
        with pytest.raises(ValueError):
            write_snapshot(tmp_path / "x.bin", np.zeros((2, 4, 3)), 0.0)


class TestTextFiles:
    """Tests for CSV, JSON and atomic text writes."""

    def test_csv_rows(self, tmp_path) -> None:
        """Test repr floats and empty cells for None."""
        path = tmp_path / "out.csv"

        write_csv_rows(path, ("h", "n_steps", "error", "observed_order"), [
            (0.25, 4, 0.1, None),
            (0.125, 8, 0.025, 2.0),
        ])

        assert path.read_text() == (
            "h,n_steps,error,observed_order\n0.25,4,0.1,\n0.125,8,0.025,2.0\n"
        )

    def test_format_float_round_trips(self) -> None:
        """Test that formatted floats parse back to the same value."""
        value = 1 / 3
        assert float(format_float(value)) == value

    def test_columns_csv_round_trips(self, tmp_path) -> None:
        """Test header, row order and exact float64 values of column CSVs."""
        path = tmp_path / "final.csv"
        rng = np.random.default_rng(5)
        x = np.arange(6.0).reshape(2, 3)
        y = rng.standard_normal((2, 3)) * 1e-7

        write_columns_csv(path, ("x", "y"), (x, y))

        lines = path.read_text().splitlines()
        assert lines[0] == "x,y"
        assert lines[1].startswith("0,")
        table = np.loadtxt(path, delimiter=",", skiprows=1)
        assert np.array_equal(table[:, 0], x.ravel())
        assert np.array_equal(table[:, 1], y.ravel())

    def test_columns_csv_header_mismatch(self, tmp_path) -> None:
        """Test that a wrong number of column names is refused."""
        with pytest.raises(ValueError):
            write_columns_csv(tmp_path / "bad.csv", ("x",), (np.zeros(2), np.zeros(2)))
        assert not (tmp_path / "bad.csv").exists()

    def test_json_model_with_exclude(self, tmp_path) -> None:
        """Test that excluded nested fields are dropped."""
        report = ConvergenceReport(
            model="gray-scott",
            scheme="pr",
            norm="graph",
            n=32,
            t_final=10.0,
            reference_n_steps=512,
            reference_grid_n=32,
            rows=[ConvergenceRow(h=0.25, n_steps=40, error=1e-3, wall_time=0.5)],
        )
        path = tmp_path / "report.json"

        write_json(path, report, exclude={"rows": {"__all__": {"wall_time"}}})

        data = read_json(path)
        assert data["rows"] == [{"h": 0.25, "n_steps": 40, "error": 1e-3, "observed_order": None}]

    def test_json_dict(self, tmp_path) -> None:
        """Test plain dict output."""
        path = tmp_path / "d.json"

        write_json(path, {"a": 1})

        assert json.loads(path.read_text()) == {"a": 1}

    def test_atomic_write_replaces(self, tmp_path) -> None:
        """Test that a rewrite replaces the content and leaves no temp files."""
        path = tmp_path / "file.txt"

        write_text_atomic(path, "one\n")
        write_text_atomic(path, "two\n")

        assert path.read_text() == "two\n"
        assert [p.name for p in tmp_path.iterdir()] == ["file.txt"]
