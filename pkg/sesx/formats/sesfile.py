"""Line-oriented container for compressed texts.

    SESX1
    raw <raw_len>
    n <n>
    E <i> <j> <l>        zero or more, in emission order
    C <k> <byte>         one or more, in emission order
"""

from dataclasses import dataclass
from pathlib import Path

from sesx.core.ses import Equation, Pin, Ses
from sesx.errors import ParseError

MAGIC = "SESX1"


@dataclass(frozen=True)
class SesFile:
    raw_len: int
    ses: Ses

    def render(self) -> str:
        lines = [MAGIC, f"raw {self.raw_len}", f"n {self.ses.n}"]
        lines.extend(f"E {i} {j} {length}" for i, j, length in self.ses.eq)
        lines.extend(f"C {pos} {byte}" for pos, byte in self.ses.ch)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "SesFile":
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        else:
            raise ParseError("file is not newline-terminated", len(lines))
        if len(lines) < 4:
            raise ParseError("file is truncated", len(lines))
        if lines[0] != MAGIC:
            raise ParseError(f"bad magic {lines[0]!r}, expected {MAGIC}", 1)
        raw_len = _header(lines[1], "raw", 2)
        n = _header(lines[2], "n", 3)
        if n != raw_len + 1:
            raise ParseError(f"n {n} does not equal raw length {raw_len} + 1", 3)

        equations: list[Equation] = []
        pins: list[Pin] = []
        for line_no, line in enumerate(lines[3:], start=4):
            tag, *fields = line.split(" ")
            if tag == "E":
                if pins:
                    raise ParseError("E line after C lines", line_no)
                equations.append(Equation(*_ints(fields, 3, line_no)))
            elif tag == "C":
                pins.append(Pin(*_ints(fields, 2, line_no)))
            else:
                raise ParseError(f"unknown record {tag!r}", line_no)
        if not pins:
            raise ParseError("no C lines", len(lines))
        return cls(raw_len, Ses(n, tuple(equations), tuple(pins)))


def _ints(fields: list[str], count: int, line_no: int) -> list[int]:
    if len(fields) != count:
        raise ParseError(f"expected {count} fields, got {len(fields)}", line_no)
    if any(not f.isdigit() for f in fields):
        raise ParseError(f"fields must be unsigned decimals, got {' '.join(fields)!r}", line_no)
    return [int(f) for f in fields]


def _header(line: str, key: str, line_no: int) -> int:
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != key:
        raise ParseError(f"expected '{key} <int>', got {line!r}", line_no)
    return _ints(parts[1:], 1, line_no)[0]


def read_ses_file(path: Path) -> SesFile:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError:
        raise ParseError("file is not ASCII text")
    return SesFile.parse(text)


def write_ses_file(path: Path, container: SesFile) -> int:
    """Write the container; return its size in bytes."""
    rendered = container.render()
    Path(path).write_text(rendered, encoding="ascii")
    return len(rendered)
