"""`prsplit run`: integrate one model and write snapshots."""

from pathlib import Path
from typing import Optional

import typer

from ..config import parse_config
from ..harness import run_simulation
from ..reporting.tables import simulation_table
from .common import cli_errors, console


def run(
    model: Optional[str] = typer.Option(None, "--model", "-m", help="caginalp or gray-scott"),
    scheme: Optional[str] = typer.Option(None, "--scheme", "-s", help="pr or lie"),
    n: Optional[int] = typer.Option(None, "--n", help="Grid points per dimension (power of two)"),
    t_final: Optional[str] = typer.Option(None, "--t-final", help="Final time"),
    n_steps: Optional[int] = typer.Option(None, "--n-steps", help="Number of time steps"),
    norm: Optional[str] = typer.Option(None, "--norm", help="l2, weighted or graph"),
    snapshot_times: Optional[str] = typer.Option(
        None, "--snapshot-times", help="Comma-separated snapshot times"
    ),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="key = value config file"),
    enforce_stability: Optional[bool] = typer.Option(
        None, "--enforce-stability/--no-enforce-stability", help="Fail instead of warn"
    ),
    long: Optional[bool] = typer.Option(
        None, "--long/--no-long", help="Full-size benchmark protocol"
    ),
) -> None:
    """Integrate a model and write snapshots plus a contour CSV.

    Example:
        prsplit run --model caginalp --scheme pr --n 128 --t-final 1 --n-steps 256
        prsplit run --model gray-scott --long
    """
    overrides = {
        "model": model,
        "scheme": scheme,
        "n": n,
        "t_final": t_final,
        "n_steps": n_steps,
        "norm": norm,
        "snapshot_times": snapshot_times,
        "out": out,
        "enforce_stability": enforce_stability,
        "long": long,
    }
    with cli_errors():
        spec = parse_config(config, overrides, command="run")
        result = run_simulation(spec)

    console.print(simulation_table(spec, result))
    console.print(f"[green]Wrote[/green] {len(result.snapshot_paths)} snapshot(s) to {spec.out}")
