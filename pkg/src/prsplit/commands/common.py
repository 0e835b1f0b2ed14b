"""Shared plumbing for prsplit commands: error mapping and warning display."""

import warnings
from contextlib import contextmanager
from typing import Iterator

import typer
from rich.console import Console

from ..errors import SplitError, StabilityWarning

console = Console()
err_console = Console(stderr=True)


@contextmanager
def cli_errors() -> Iterator[None]:
    """Print library errors in red and exit with 2 (configuration) or 3 (numerical).

    Stability warnings raised inside the block are shown in yellow.
    """
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", StabilityWarning)
        try:
            yield
        except SplitError as e:
            err_console.print(f"[red]Error:[/red] {e}")
            raise typer.Exit(e.exit_code)
        finally:
            for w in caught:
                if issubclass(w.category, StabilityWarning):
                    err_console.print(f"[yellow]Warning:[/yellow] {w.message}")

