"""Configuration and environment loading for prsplit."""

from difflib import get_close_matches
from math import pi
from pathlib import Path
from typing import Any, Optional
import os

# Try to load dotenv if available
try:
    from dotenv import load_dotenv
    HAS_DOTENV = True
except ImportError:
    HAS_DOTENV = False

from .errors import ConfigurationError


def load_env() -> bool:
    """Load environment variables from .env file.

    Returns:
        True if .env file was found and loaded, False otherwise.
    """
    if not HAS_DOTENV:
        return False

    if Path(".env").exists():
        load_dotenv(Path(".env"))
        return True

    return False


# Default model parameters (Caginalp l, Gray-Scott d1, d2, l1, l2)
DEFAULT_ELL = 0.5
DEFAULT_D1 = 8e-4
DEFAULT_D2 = 4e-4
DEFAULT_L1 = 0.024
DEFAULT_L2 = 0.084
DEFAULT_DOMAIN_HALF_WIDTH = pi

# Output layout
OUTPUT_DIR_ENV = "PRSPLIT_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "results"
CONVERGENCE_CSV = "convergence.csv"
CONVERGENCE_SVG = "convergence.svg"
REPORT_JSON = "report.json"
FINAL_CSV = "final.csv"
SNAPSHOT_PATTERN = "snapshot_{step:08d}.bin"

# Run logs (hidden, not part of the deterministic artifact set)
LOGS_DIR = ".prsplit-logs"
RUN_LOG_FILE = "runs.log"

# Oracle scale cap (points per dimension)
ORACLE_MAX_N = 16

# Spot-replication check
LOCAL_MAX_THRESHOLD = 0.1

# Keys accepted in a config file, with the command(s) that require them
VALID_KEYS = [
    "model", "scheme", "n", "t_final", "n_steps", "norm", "out",
    "enforce_stability", "long", "h_list", "ref_steps", "snapshot_times",
    "ell", "d1", "d2", "l1", "l2", "domain_half_width", "workers", "ref_grid_factor",
]

REQUIRED_KEYS = {
    "run": ["model", "scheme", "n", "t_final", "n_steps"],
    "converge": ["model", "scheme", "n", "t_final", "h_list", "ref_steps"],
}

# Full-size protocols filled in under `long` for keys the user did not set
LONG_PROTOCOLS: dict[tuple[str, str], dict[str, Any]] = {
    ("run", "caginalp"): {"scheme": "pr", "n": 512, "t_final": 1.0, "n_steps": 256},
    ("run", "gray-scott"): {
        "scheme": "pr", "n": 256, "t_final": 750.0, "n_steps": 3000, "snapshot_times": "0,750",
    },
    ("converge", "caginalp"): {
        "scheme": "pr", "n": 512, "t_final": 1.0, "h_list": "1/16,1/32,1/64,1/128,1/256",
        "ref_steps": 2**19, "ref_grid_factor": 2,
    },
    ("converge", "gray-scott"): {
        "scheme": "pr", "n": 512, "t_final": 1500.0,
        "h_list": "1500/1024,1500/2048,1500/4096,1500/8192,1500/16384",
        "ref_steps": 2**19, "ref_grid_factor": 2,
    },
}

TRUE_VALUES = {"1", "true", "yes", "on"}


def is_true(value: Any) -> bool:
    """Interpret a config value as a boolean flag."""
    if isinstance(value, str):
        return value.strip().lower() in TRUE_VALUES
    return bool(value)


def get_output_dir(explicit: Optional[Path] = None) -> Path:
    """Resolve the output directory.

    Args:
        explicit: Directory given on the command line or in a config file.

    Returns:
        explicit if given, else $PRSPLIT_OUTPUT_DIR, else ./results.
    """
    if explicit is not None:
        return Path(explicit)
    load_env()
    env_value = os.environ.get(OUTPUT_DIR_ENV)
    if env_value:
        return Path(env_value)
    return Path(DEFAULT_OUTPUT_DIR)


def read_config_file(path: Path) -> dict[str, str]:
    """Read a line-oriented `key = value` config file.

    Args:
        path: Config file path.

    Returns:
        Raw string values by key.

    Raises:
        ConfigurationError: on malformed lines, unknown or duplicate keys.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e

    values: dict[str, str] = {}
    seen_at: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(
                f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}"
            )

        key, value = (part.strip() for part in line.split("=", 1))
        if key not in VALID_KEYS:
            suggestion = get_close_matches(key, VALID_KEYS, n=1)
            hint = f" (did you mean '{suggestion[0]}'?)" if suggestion else ""
            raise ConfigurationError(f"{path}:{lineno}: unknown key '{key}'{hint}")
        if key in seen_at:
            raise ConfigurationError(
                f"{path}:{lineno}: duplicate key '{key}' (first set on line {seen_at[key]})"
            )
        if not value:
            raise ConfigurationError(f"{path}:{lineno}: empty value for '{key}'")

        seen_at[key] = lineno
        values[key] = value

    return values


def parse_config(
    path: Optional[Path] = None,
    overrides: Optional[dict[str, Any]] = None,
    command: str = "run",
):
    """Build a RunSpec from a config file and CLI overrides.

    Args:
        path: Optional config file.
        overrides: Values from command-line flags; None entries are ignored.
        command: "run" or "converge"; selects the required keys.

    Returns:
        Validated RunSpec.

    Raises:
        ConfigurationError: on parse errors, missing keys or invalid values.
    """
    from pydantic import ValidationError
    from .models import RunSpec

    values: dict[str, Any] = read_config_file(path) if path is not None else {}
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value

    required = REQUIRED_KEYS.get(command)
    if required is None:
        raise ConfigurationError(f"unknown command '{command}'")

    if is_true(values.get("long", False)) and "model" in values:
        model = getattr(values["model"], "value", values["model"])
        for key, value in LONG_PROTOCOLS.get((command, str(model)), {}).items():
            values.setdefault(key, value)

    missing = [key for key in required if key not in values]
    if missing:
        raise ConfigurationError(f"missing required keys: {', '.join(missing)}")

    if "out" not in values:
        values["out"] = get_output_dir()

    try:
        return RunSpec.model_validate(values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'spec'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigurationError(f"invalid run spec: {problems}") from e
