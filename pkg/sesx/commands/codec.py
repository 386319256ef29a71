"""compress, decompress, verify and bms commands."""

from pathlib import Path
from typing import Optional

import typer

from sesx.utils.cli import handle_errors, read_bytes, write_bytes
from sesx.utils.output import plain, status_badge, success

INPUT = typer.Option(..., "--input", "-i", help="Input file")
OUTPUT = typer.Option(None, "--output", "-o", help="Output file (default: standard output)")


def _resolve_paths(options: dict[str, Optional[Path]], positional: list[Optional[Path]]) -> list[Path]:
    """Fill the options left unset from the positional paths, in order."""
    queue = [p for p in positional if p is not None]
    resolved = []
    for flag, value in options.items():
        if value is None:
            if not queue:
                raise typer.BadParameter("missing path", param_hint=f"'{flag}'")
            value = queue.pop(0)
        resolved.append(value)
    if queue:
        raise typer.BadParameter(f"unexpected extra path {queue[0]}")
    return resolved


@handle_errors
def compress(
    input: Path = INPUT,
    output: Optional[Path] = OUTPUT,
    sizes: bool = typer.Option(False, "--sizes", help="Report word, weighted and byte sizes"),
):
    """Compress a file into an SES container."""
    from sesx.config.settings import load_config
    from sesx.core.compressor import run_pipeline
    from sesx.formats.sesfile import SesFile, write_ses_file

    config = load_config()
    raw = read_bytes(input)
    result = run_pipeline(raw, config)
    container = SesFile(len(raw), result.ses)
    if output is None:
        rendered = container.render().encode("ascii")
        write_bytes(None, rendered)
        written = len(rendered)
    else:
        written = write_ses_file(output, container)

    plain(result.summary())
    if sizes:
        ses = result.ses
        plain(f"words={ses.size} weighted={ses.weighted_size} bytes={written}")


@handle_errors
def decompress(
    input: Path = INPUT,
    output: Optional[Path] = OUTPUT,
):
    """Solve an SES container and write the original bytes."""
    from sesx.config.settings import load_config
    from sesx.core.compressor import decompress as solve_container
    from sesx.formats.sesfile import read_ses_file

    config = load_config()
    container = read_ses_file(input)
    raw = solve_container(
        container.ses,
        container.raw_len,
        config["solver"]["alphabet_size"],
        max_raw_len=config["compress"]["max_raw_len"],
    )
    write_bytes(output, raw)


@handle_errors
def verify(
    original_arg: Optional[Path] = typer.Argument(None, metavar="ORIGINAL", help="Original file"),
    ses_arg: Optional[Path] = typer.Argument(None, metavar="SES", help="SES container to check against it"),
    original_opt: Optional[Path] = typer.Option(None, "--original", help="Original file"),
    ses_opt: Optional[Path] = typer.Option(None, "--ses", help="SES container"),
):
    """Check that a container describes exactly the given original."""
    from sesx.config.settings import load_config
    from sesx.core.ses import check_text, solve, validate
    from sesx.core.text import attach_sentinel
    from sesx.errors import TooLarge, VerificationFailed
    from sesx.formats.sesfile import read_ses_file

    original, ses_path = _resolve_paths({"--original": original_opt, "--ses": ses_opt}, [original_arg, ses_arg])
    config = load_config()
    w = attach_sentinel(read_bytes(original))
    container = read_ses_file(ses_path)
    ses = container.ses
    limit = config["compress"]["max_raw_len"]
    if container.raw_len > limit:
        raise TooLarge(container.raw_len, limit, "container")

    if container.raw_len != w.raw_len:
        raise VerificationFailed(f"container is for {container.raw_len} bytes, original has {w.raw_len}")
    validate(ses)
    violated = check_text(ses, w.data)
    if violated is not None:
        raise VerificationFailed(f"constraint {tuple(violated)} does not hold in the original")
    result = solve(ses, config["solver"]["alphabet_size"])
    if not result.is_unique:
        raise VerificationFailed(f"system is {result.status.value}, expected a unique solution")
    if result.text != w.data:
        raise VerificationFailed("solution differs from the original")
    success(f"{ses_path} describes {original} ({ses.size} constraints) {status_badge(result.status.value)}")


@handle_errors
def bms(
    input: Path = INPUT,
    output: Optional[Path] = OUTPUT,
):
    """Write the greedy left-pointing macro scheme of a file."""
    from sesx.core.bms import bms_to_ses, greedy_left_bms
    from sesx.core.ses import reconstruct
    from sesx.core.text import attach_sentinel
    from sesx.errors import VerificationFailed
    from sesx.formats.bmsfile import render_bms

    w = attach_sentinel(read_bytes(input))
    scheme = greedy_left_bms(w)
    ses = bms_to_ses(scheme, w)
    if reconstruct(ses) != w.data:
        raise VerificationFailed("converted system does not reconstruct the input")
    write_bytes(output, render_bms(scheme).encode("ascii"))
    plain(f"n={w.n} phrases={len(scheme)} eq={len(ses.eq)} ch={len(ses.ch)} size={ses.size}")
