"""Console summaries rendered with rich."""

from rich.table import Table

from ..models import ConvergenceReport, RunSpec
from ..harness.simulation import SimulationResult


def _order_cell(order: float | None, expected: int) -> str:
    if order is None:
        return "[dim]-[/dim]"
    style = "green" if abs(order - expected) <= 0.25 * expected else "yellow"
    return f"[{style}]{order:.3f}[/{style}]"


def convergence_table(report: ConvergenceReport) -> Table:
    """One row per step size: h, steps, error, observed order, wall time."""
    table = Table(title=f"Convergence: {report.describe()}")
    table.add_column("h", style="cyan", justify="right")
    table.add_column("n_steps", justify="right")
    table.add_column("error", justify="right")
    table.add_column("order", justify="right")
    table.add_column("wall time (s)", style="dim", justify="right")

    for row in report.rows:
        table.add_row(
            f"{row.h:.6g}",
            str(row.n_steps),
            f"{row.error:.4e}",
            _order_cell(row.observed_order, report.expected_order),
            f"{row.wall_time:.2f}",
        )

    table.caption = (
        f"reference: {report.reference_n_steps} steps on n={report.reference_grid_n}; "
        f"expected order {report.expected_order}"
    )
    return table


def simulation_table(spec: RunSpec, result: SimulationResult) -> Table:
    """Key facts about a finished run."""
    table = Table(title=f"Run: {spec.model.value} / {spec.scheme.value.upper()}")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")

    table.add_row("grid", f"{spec.n} x {spec.n}")
    table.add_row("steps", str(spec.n_steps))
    table.add_row("final time", f"{result.time:.6g}")
    table.add_row("snapshots", str(len(result.snapshot_paths)))
    if result.contour_path is not None:
        table.add_row("contour export", str(result.contour_path))
    if result.displacement is not None:
        table.add_row(f"|u(T) - u(0)| ({spec.norm})", f"{result.displacement:.6e}")
    if result.psi_mean_drift is not None:
        table.add_row("mean(psi) drift", f"{result.psi_mean_drift:.3e}")
    return table
