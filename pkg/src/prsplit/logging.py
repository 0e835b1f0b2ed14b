"""Run logging for prsplit.

Entries are appended as `timestamp | EVENT | json-payload` lines to
`<output>/.prsplit-logs/runs.log`.
"""

import json
import threading
from datetime import datetime
from pathlib import Path
from typing import Any, Optional

from .config import LOGS_DIR, RUN_LOG_FILE

MAX_LOG_SIZE_MB = 10

# Event types
RUN_START = "RUN:start"
RUN_END = "RUN:end"
STABILITY_WARNING = "STABILITY:warning"
STEP_FAILURE = "STEP:failure"
PSI_MEAN_DRIFT = "DRIFT:psi-mean"
STUDY_RUN = "STUDY:run"
STUDY_END = "STUDY:end"


def get_logs_path(base_path: Optional[Path] = None) -> Path:
    """Get the .prsplit-logs directory path.

    Args:
        base_path: Output directory of the run. Defaults to cwd.

    Returns:
        Path to .prsplit-logs directory.
    """
    if base_path is None:
        base_path = Path.cwd()
    return Path(base_path) / LOGS_DIR


class RunLogger:
    """Append-only event log for one output directory."""

    def __init__(self, base_path: Optional[Path] = None):
        self.logs_path = get_logs_path(base_path)
        self.log_file = self.logs_path / RUN_LOG_FILE
        self._lock = threading.Lock()

    def _rotate(self) -> None:
        if self.log_file.exists():
            size_mb = self.log_file.stat().st_size / (1024 * 1024)
            if size_mb > MAX_LOG_SIZE_MB:
                backup = self.logs_path / f"{RUN_LOG_FILE}.1"
                if backup.exists():
                    backup.unlink()
                self.log_file.rename(backup)

    def log(self, event: str, metadata: Optional[dict[str, Any]] = None) -> None:
        """Log one event.

        Args:
            event: Event type, e.g. STABILITY:warning.
            metadata: JSON-serializable payload.
        """
        timestamp = datetime.now().isoformat()
        meta_str = json.dumps(metadata, default=str) if metadata else "{}"
        with self._lock:
            self.logs_path.mkdir(parents=True, exist_ok=True)
            self._rotate()
            with self.log_file.open("a", encoding="utf-8") as f:
                f.write(f"{timestamp} | {event} | {meta_str}\n")


def parse_log_file(base_path: Optional[Path] = None) -> list[dict[str, Any]]:
    """Parse the run log into structured entries.

    Args:
        base_path: Output directory. Defaults to cwd.

    Returns:
        List of dicts with keys: timestamp, event, metadata.
    """
    log_file = get_logs_path(base_path) / RUN_LOG_FILE

    if not log_file.exists():
        return []

    entries = []
    with log_file.open("r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue

            parts = line.split(" | ", 2)
            if len(parts) < 2:
                continue
            try:
                metadata = json.loads(parts[2]) if len(parts) > 2 else {}
            except json.JSONDecodeError:
                metadata = {"raw": parts[2]}
            entries.append({"timestamp": parts[0], "event": parts[1], "metadata": metadata})

    return entries
