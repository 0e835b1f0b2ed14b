"""Run log commands for prsplit."""

from pathlib import Path
from typing import Optional

import typer
from rich.markup import escape

from ..config import get_output_dir
from ..logging import STABILITY_WARNING, STEP_FAILURE, parse_log_file
from .common import console

app = typer.Typer(help="Inspect run logs.")


@app.command("show")
def logs_show(
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory of the runs"),
    lines: int = typer.Option(50, "--lines", "-n", help="Number of recent entries to show"),
    event: Optional[str] = typer.Option(None, "--event", "-e", help="Only this event type"),
):
    """Show recent log entries."""
    entries = parse_log_file(get_output_dir(out))

    if event:
        entries = [e for e in entries if e["event"] == event]

    if not entries:
        console.print("[yellow]No log entries found.[/yellow]")
        return

    for entry in entries[-lines:]:
        ts = entry["timestamp"][:19]
        name = entry["event"]
        payload = ", ".join(f"{k}={v}" for k, v in entry["metadata"].items())
        if len(payload) > 100:
            payload = payload[:100] + "..."
        payload = escape(payload)

        if name == STEP_FAILURE:
            console.print(f"[bold blue]{ts}[/] [red]{name}[/] {payload}")
        elif name == STABILITY_WARNING:
            console.print(f"[bold blue]{ts}[/] [yellow]{name}[/] {payload}")
        else:
            console.print(f"[dim]{ts}[/] {name} {payload}")
