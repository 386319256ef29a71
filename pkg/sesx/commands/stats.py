"""Repetitiveness statistics per input file."""

from pathlib import Path
from typing import Any, List, Optional

import typer

from sesx.utils.cli import handle_errors, read_bytes

COLUMNS = ["n", "sigma", "chi", "r", "z_greedy", "eq", "ch", "size", "literal", "chi_le_2r", "file"]


def measure(raw: bytes, config: dict[str, Any]) -> dict[str, Any]:
    """One stats row for ``raw``; ``literal`` is the size of the all-pins system."""
    from sesx.core.compressor import run_pipeline
    from sesx.core.ses import all_literal_ses
    from sesx.core.suffix import bwt_run_count, greedy_lz_count

    result = run_pipeline(raw, config)
    w = result.text
    r = bwt_run_count(result.index, w)
    return {
        "n": w.n,
        "sigma": w.alphabet.sigma,
        "chi": result.chi,
        "r": r,
        "z_greedy": greedy_lz_count(w, result.index),
        "eq": len(result.ses.eq),
        "ch": len(result.ses.ch),
        "size": result.ses.size,
        "literal": all_literal_ses(w.data).size,
        "chi_le_2r": result.chi <= 2 * r,
    }


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@handle_errors
def stats(
    inputs: Optional[List[Path]] = typer.Argument(None, help="Input files, one row each"),
    input_opts: Optional[List[Path]] = typer.Option(None, "--input", "-i", help="Input file (repeatable)"),
    table: bool = typer.Option(False, "--table", "-t", help="Render a table instead of TSV"),
):
    """Print n, sigma, chi, r, z and SES sizes for each input."""
    from sesx.config.settings import load_config
    from sesx.utils.output import console, create_table, status_badge

    paths = [*(input_opts or []), *(inputs or [])]
    if not paths:
        raise typer.BadParameter("give at least one input file", param_hint="'INPUTS' / '--input'")

    config = load_config()
    rows = []
    for path in paths:
        row = measure(read_bytes(path), config)
        row["file"] = str(path)
        rows.append(row)

    if table:
        rich_table = create_table("Repetitiveness", [(c, "cyan" if c == "file" else "") for c in COLUMNS])
        for row in rows:
            cells = [_cell(row[c]) for c in COLUMNS]
            cells[COLUMNS.index("chi_le_2r")] = status_badge("passed" if row["chi_le_2r"] else "failed")
            rich_table.add_row(*cells)
        console.print(rich_table)
        return

    typer.echo("\t".join(COLUMNS))
    for row in rows:
        typer.echo("\t".join(_cell(row[c]) for c in COLUMNS))
