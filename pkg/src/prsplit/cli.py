"""prsplit CLI - splitting integrators for semilinear evolution problems."""

import typer

from . import __version__

app = typer.Typer(
    name="prsplit",
    help="Peaceman-Rachford and Lie splitting for periodic reaction-diffusion problems",
    no_args_is_help=True,
    rich_markup_mode="rich",
    epilog="[dim]Try: prsplit converge -m caginalp -s pr --n 128 --t-final 1 "
    "--h-list 1/16,1/32,1/64,1/128,1/256 --ref-steps 4096[/dim]",
)


# --- "Did you mean?" suggestion system ---
_SUBCOMMAND_SUGGESTIONS: dict[str, list[str]] = {
    "logs": ["show"],
}


def _make_suggestion_callback(group_name: str):
    """Create a callback that shows suggestions when a subcommand group is invoked bare."""
    def callback(ctx: typer.Context) -> None:
        if ctx.invoked_subcommand is None:
            suggestions = _SUBCOMMAND_SUGGESTIONS.get(group_name, [])
            typer.echo(f"Missing command for 'prsplit {group_name}'.", err=True)
            typer.echo("", err=True)
            if suggestions:
                typer.echo("Did you mean one of these?", err=True)
                for s in suggestions:
                    typer.echo(f"  prsplit {group_name} {s}", err=True)
                typer.echo("", err=True)
            typer.echo(f"Use 'prsplit {group_name} --help' for all available commands.", err=True)
            raise typer.Exit(1)
    return callback


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"prsplit {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show version"
    ),
) -> None:
    """prsplit - splitting time integrators, convergence studies and pattern runs."""
    from .config import load_env
    load_env()


# Import and register command modules
from .commands import converge as converge_cmd
from .commands import logs as logs_cmd
from .commands import run as run_cmd

app.command(name="run", rich_help_panel="Experiments")(run_cmd.run)
app.command(name="converge", rich_help_panel="Experiments")(converge_cmd.converge)

_subcommand_groups = {
    "logs": (logs_cmd.app, "Inspection"),
}

for group_name, (group_app, panel) in _subcommand_groups.items():
    group_app.info.invoke_without_command = True
    group_app.registered_callback = None
    group_app.callback()(_make_suggestion_callback(group_name))
    app.add_typer(group_app, name=group_name, rich_help_panel=panel)


if __name__ == "__main__":
    app()
