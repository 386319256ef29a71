"""Pretty output utilities using Rich.

Everything here writes to standard error; standard output is reserved for
data (decompressed bytes, generated words, stats rows).
"""

import logging

from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

console = Console(stderr=True, highlight=False)

LOGGER_NAME = "sesx"


def success(message: str) -> None:
    """Print success message."""
    console.print(f"[bold green]✓[/] {message}")


def warning(message: str) -> None:
    """Print warning message."""
    console.print(f"[bold yellow]![/] {message}")


def info(message: str) -> None:
    """Print info message."""
    console.print(f"[bold blue]→[/] {message}")


def plain(message: str) -> None:
    """Print a machine-readable line without markup."""
    console.print(message, markup=False)


def create_table(title: str, columns: list[tuple[str, str]]) -> Table:
    """Create a styled table."""
    table = Table(title=title, show_header=True, header_style="bold magenta")
    for col_name, col_style in columns:
        table.add_column(col_name, style=col_style, justify="right")
    return table


def status_badge(status: str) -> str:
    """Return colored status badge."""
    status_colors = {
        "unique": "[bold green]● UNIQUE[/]",
        "passed": "[bold green]● PASSED[/]",
        "failed": "[bold red]● FAILED[/]",
    }
    return status_colors.get(status.lower(), f"[dim]● {status.upper()}[/]")


def print_panel(content: str, title: str = "", style: str = "blue") -> None:
    """Print content in a panel."""
    console.print(Panel(content, title=title, border_style=style, box=box.ROUNDED))


def get_logger(level: str = "WARNING") -> logging.Logger:
    """Return the package logger, installing a Rich handler on first use."""
    logger = logging.getLogger(LOGGER_NAME)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=console, show_path=False, markup=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(level.upper())
    return logger
