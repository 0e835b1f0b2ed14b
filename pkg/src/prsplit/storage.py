"""Storage utilities: atomic writes, binary snapshots, CSV and JSON files."""

import csv
import io
import json
import os
import struct
import tempfile
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np
from pydantic import BaseModel

SNAPSHOT_MAGIC = b"SPLITSNAP1"
# magic, n, component count, padding, time
SNAPSHOT_HEADER = struct.Struct("<10sIH8xd")
assert SNAPSHOT_HEADER.size == 32


def write_atomic(path: Path, data: bytes) -> None:
    """Write a whole file atomically (temp file in the same directory, then rename).

    Args:
        path: Destination path.
        data: File contents.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def write_text_atomic(path: Path, text: str) -> None:
    """Write a text file atomically (UTF-8, '\\n' line endings)."""
    write_atomic(path, text.encode("utf-8"))


def write_snapshot(path: Path, components: np.ndarray, time: float) -> None:
    """Write a snapshot file.

    Layout: 32-byte header (magic `SPLITSNAP1`, n as uint32, component count as
    uint16, 8 padding bytes, time as float64, all little-endian), then the
    components concatenated, each row-major float64 little-endian.

    Args:
        path: Destination path.
        components: Array of shape (c, n, n).
        time: Simulation time of the snapshot.
    """
    components = np.asarray(components, dtype="<f8")
    if components.ndim != 3 or components.shape[1] != components.shape[2]:
        raise ValueError(f"expected (c, n, n) array, got shape {components.shape}")

    c, n, _ = components.shape
    header = SNAPSHOT_HEADER.pack(SNAPSHOT_MAGIC, n, c, float(time))
    write_atomic(path, header + np.ascontiguousarray(components).tobytes(order="C"))


def read_snapshot(path: Path) -> tuple[np.ndarray, float]:
    """Read a snapshot file.

    Args:
        path: Snapshot path.

    Returns:
        (components of shape (c, n, n), time)
    """
    data = Path(path).read_bytes()
    if len(data) < SNAPSHOT_HEADER.size:
        raise ValueError(f"{path}: truncated snapshot header")

    magic, n, c, time = SNAPSHOT_HEADER.unpack_from(data)
    if magic != SNAPSHOT_MAGIC:
        raise ValueError(f"{path}: not a snapshot file (magic {magic!r})")

    body = np.frombuffer(data, dtype="<f8", offset=SNAPSHOT_HEADER.size)
    if body.size != c * n * n:
        raise ValueError(f"{path}: expected {c * n * n} values, found {body.size}")
    return body.reshape(c, n, n).astype(np.float64), time


def format_float(value: float) -> str:
    """Shortest round-trip representation, stable across runs."""
    return repr(float(value))


def write_csv_rows(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """Write a CSV file atomically.

    Floats are written with repr() so identical numbers give identical bytes.

    Args:
        path: Destination path.
        header: Column names.
        rows: Row values; None becomes an empty cell.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [
                "" if v is None else format_float(v) if isinstance(v, float) else v
                for v in row
            ]
        )
    write_text_atomic(path, buffer.getvalue())


def write_columns_csv(path: Path, header: Sequence[str], columns: Sequence[np.ndarray]) -> None:
    """Write equal-size arrays as CSV columns atomically, one row per element.

    Values use %.17g, which parses back to the identical float64.
    """
    table = np.column_stack([np.asarray(c, dtype=np.float64).ravel() for c in columns])
    if table.shape[1] != len(header):
        raise ValueError(f"{len(header)} column names for {table.shape[1]} columns")
    buffer = io.StringIO()
    np.savetxt(buffer, table, fmt="%.17g", delimiter=",", header=",".join(header), comments="")
    write_text_atomic(path, buffer.getvalue())


def read_json(path: Path) -> dict:
    """Read a JSON file.

    Args:
        path: Path to the JSON file.

    Returns:
        Parsed JSON object.
    """
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def write_json(path: Path, data: dict | BaseModel, exclude: Any = None) -> None:
    """Write a JSON file atomically.

    Args:
        path: Path to the JSON file.
        data: Dict or Pydantic model to write.
        exclude: Pydantic exclude spec (set or nested dict) for model data.
    """
    if isinstance(data, BaseModel):
        text = data.model_dump_json(indent=2, exclude=exclude)
    else:
        text = json.dumps(data, indent=2, default=str)
    write_text_atomic(path, text + "\n")
