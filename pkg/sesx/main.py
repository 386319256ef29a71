"""Main entry point for the sesx CLI.

Command modules import the numeric core lazily inside each command, so
``sesx --help`` and ``sesx version`` stay fast.
"""

import importlib
import sys

import typer
from rich.console import Console

from sesx import __version__
from sesx.utils.cli import error_panel

# Command registry: name -> (module_path, function name)
COMMANDS = {
    "compress": ("sesx.commands.codec", "compress"),
    "decompress": ("sesx.commands.codec", "decompress"),
    "verify": ("sesx.commands.codec", "verify"),
    "bms": ("sesx.commands.codec", "bms"),
    "stats": ("sesx.commands.stats", "stats"),
    "gen": ("sesx.commands.gen", "gen"),
}

app = typer.Typer(
    name="sesx",
    help="sesx - compress texts into substring equation systems",
    add_completion=False,
    no_args_is_help=True,
)

console = Console(stderr=True)


def _register_commands() -> None:
    for name, (module_path, attr) in COMMANDS.items():
        module = importlib.import_module(module_path)
        app.command(name)(getattr(module, attr))


_register_commands()


@app.command()
def version():
    """Show CLI version."""
    typer.echo(f"sesx v{__version__}")


@app.command()
def init():
    """Write the default configuration file."""
    from sesx.config.settings import init_config
    from sesx.utils.output import info, success, warning

    config_path, created = init_config()
    if created:
        success(f"Configuration initialized at: {config_path}")
    else:
        warning(f"Configuration already exists at: {config_path}; left unchanged")
    info("Edit this file to change size limits, solver alphabet and log level.")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log pipeline stages and timings"),
):
    """
    sesx - represent a text by a substring equation system of size O(chi).

    Quick commands:
    - sesx compress -i FILE -o FILE.ses
    - sesx decompress -i FILE.ses -o FILE
    - sesx stats FILE...
    - sesx gen thue-morse 10
    """
    from sesx.config.settings import load_config
    from sesx.errors import ConfigError
    from sesx.utils.output import get_logger

    try:
        level = load_config()["logging"]["level"]
    except ConfigError as e:
        error_panel("Config Error", e.message)
        raise typer.Exit(e.exit_code)
    get_logger("DEBUG" if verbose else level)


if __name__ == "__main__":
    try:
        app()
    except KeyboardInterrupt:
        console.print("\n[yellow]Aborted by user.[/yellow]")
        sys.exit(130)
