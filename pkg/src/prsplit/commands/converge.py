"""`prsplit converge`: temporal convergence study."""

from pathlib import Path
from typing import Optional

import typer

from ..config import CONVERGENCE_CSV, CONVERGENCE_SVG, parse_config
from ..harness import run_convergence_study
from ..reporting.tables import convergence_table
from .common import cli_errors, console


def converge(
    model: Optional[str] = typer.Option(None, "--model", "-m", help="caginalp or gray-scott"),
    scheme: Optional[str] = typer.Option(None, "--scheme", "-s", help="pr or lie"),
    n: Optional[int] = typer.Option(None, "--n", help="Grid points per dimension (power of two)"),
    t_final: Optional[str] = typer.Option(None, "--t-final", help="Final time"),
    h_list: Optional[str] = typer.Option(
        None, "--h-list", help="Comma-separated step sizes, e.g. 1/16,1/32,1/64"
    ),
    ref_steps: Optional[int] = typer.Option(None, "--ref-steps", help="Reference step count"),
    norm: Optional[str] = typer.Option(None, "--norm", help="l2, weighted or graph"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Parallel runs"),
    ref_grid_factor: Optional[int] = typer.Option(
        None, "--ref-grid-factor", help="Refine the reference grid by this factor"
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
    """Measure global errors against a finer-step reference and report observed orders.

    Writes convergence.csv, convergence.svg and report.json.

    Example:
        prsplit converge -m caginalp -s pr --n 128 --t-final 1 \\
            --h-list 1/16,1/32,1/64,1/128,1/256 --ref-steps 4096
    """
    overrides = {
        "model": model,
        "scheme": scheme,
        "n": n,
        "t_final": t_final,
        "h_list": h_list,
        "ref_steps": ref_steps,
        "norm": norm,
        "workers": workers,
        "ref_grid_factor": ref_grid_factor,
        "out": out,
        "enforce_stability": enforce_stability,
        "long": long,
    }
    with cli_errors():
        spec = parse_config(config, overrides, command="converge")
        report = run_convergence_study(spec)

    console.print(convergence_table(report))
    console.print(
        f"[green]Wrote[/green] {spec.out / CONVERGENCE_CSV} and {spec.out / CONVERGENCE_SVG}"
    )
