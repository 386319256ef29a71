"""Glue between commands and the error hierarchy: panels and exit codes."""

import functools
import re
from pathlib import Path
from typing import Callable, Optional

import typer
from rich.markup import escape

from sesx.errors import SesxError
from sesx.utils.output import print_panel


def _title(exc: BaseException) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", " ", type(exc).__name__)


def error_panel(title: str, body: str) -> None:
    print_panel(f"[red]Error:[/] {escape(body)}", title=f"[bold red]{title}[/bold red]", style="red")


def handle_errors(func: Callable) -> Callable:
    """Turn sesx and I/O exceptions into an error panel plus the matching exit code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SesxError as e:
            error_panel(_title(e), e.message)
            raise typer.Exit(e.exit_code)
        except OSError as e:
            error_panel("I/O Error", f"{e.strerror or e}: {e.filename or ''}")
            raise typer.Exit(1)

    return wrapper


def read_bytes(path: Path) -> bytes:
    return Path(path).read_bytes()


def write_bytes(path: Optional[Path], data: bytes) -> None:
    """Write to ``path``, or to standard output when no path is given."""
    if path is None:
        stream = typer.get_binary_stream("stdout")
        stream.write(data)
        stream.flush()
    else:
        Path(path).write_bytes(data)
