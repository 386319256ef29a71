"""Deterministic corpus generators."""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from sesx.utils.cli import handle_errors, write_bytes


class Kind(str, Enum):
    thue_morse = "thue-morse"
    fibonacci = "fibonacci"
    random = "random"


@handle_errors
def gen(
    kind: Kind = typer.Argument(..., help="Word family"),
    order: Optional[int] = typer.Argument(None, help="Order k for thue-morse and fibonacci"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (default from config)"),
    length: Optional[int] = typer.Option(None, "--len", help="Random text length"),
    sigma: Optional[int] = typer.Option(None, "--sigma", help="Random alphabet size"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file (default: standard output)"),
):
    """Generate a Thue-Morse, Fibonacci or seeded random word."""
    from sesx.config.settings import load_config
    from sesx.core.text import fibonacci_word, random_text, thue_morse
    from sesx.errors import OutOfRange

    limits = load_config()["gen"]

    if kind is Kind.random:
        if length is None or sigma is None:
            raise OutOfRange("random needs --len and --sigma")
        word = random_text(length, sigma, limits["default_seed"] if seed is None else seed)
    else:
        if order is None:
            raise OutOfRange(f"{kind.value} needs an order k")
        limit = limits["max_thue_morse_k"] if kind is Kind.thue_morse else limits["max_fibonacci_k"]
        if not 0 <= order <= limit:
            raise OutOfRange(f"{kind.value} order must be in [0, {limit}], got {order}")
        word = thue_morse(order) if kind is Kind.thue_morse else fibonacci_word(order)
    write_bytes(output, word)
