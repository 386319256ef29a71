"""Exception hierarchy for sesx.

Every error carries the process exit code the CLI reports for it, so the
command layer can turn any failure into a panel plus ``typer.Exit``.
"""

from typing import Any, Optional


class SesxError(Exception):
    """Base class for all sesx errors."""

    exit_code: int = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# Input / text errors


class SentinelCollision(SesxError):
    """Raw input contains the reserved sentinel byte 0x00."""

    exit_code = 2

    def __init__(self, offset: int):
        super().__init__(f"input contains the sentinel byte 0x00 at offset {offset}")
        self.offset = offset


class OutOfRange(SesxError):
    """A generator or size parameter is outside its allowed range."""

    exit_code = 2


class TooLarge(SesxError):
    """Input exceeds the size limit of the operation."""

    exit_code = 2

    def __init__(self, size: int, limit: int, what: str = "input"):
        super().__init__(f"{what} of size {size} exceeds the limit of {limit}")
        self.size = size
        self.limit = limit


class PositionOutOfBounds(SesxError):
    """A position set refers to positions outside [1..n]."""

    exit_code = 2

    def __init__(self, position: int, n: int):
        super().__init__(f"position {position} is outside [1..{n}]")
        self.position = position
        self.n = n


# Substring equation systems


class MalformedSystem(SesxError):
    """A system violates the bounds of its definition."""

    exit_code = 2

    def __init__(self, message: str, constraint: Optional[Any] = None):
        super().__init__(message)
        self.constraint = constraint


class NotRepresenting(SesxError):
    """A system has no unique satisfying string."""

    exit_code = 3

    def __init__(self, result: Any):
        super().__init__(f"system does not represent a unique text ({result.status.value})")
        self.result = result


class Corrupted(SesxError):
    """A compressed container does not decode to a valid text."""

    exit_code = 3


# Bidirectional macro schemes


class InvalidBms(SesxError):
    """The transition function of a macro scheme has a cycle."""

    exit_code = 2

    def __init__(self, position: int):
        super().__init__(f"position {position} never reaches a literal (reference cycle)")
        self.position = position


class InconsistentBms(SesxError):
    """A copy phrase does not match the text it claims to describe."""

    exit_code = 2

    def __init__(self, phrase_index: int, message: str):
        super().__init__(f"phrase {phrase_index}: {message}")
        self.phrase_index = phrase_index


# Files, config, verification


class ParseError(SesxError):
    """A container file could not be parsed."""

    exit_code = 2

    def __init__(self, message: str, line_no: Optional[int] = None):
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}{message}")
        self.line_no = line_no


class ConfigError(SesxError):
    """Configuration file is invalid."""

    exit_code = 2


class VerificationFailed(SesxError):
    """A compressed file does not describe the given original."""

    exit_code = 4
