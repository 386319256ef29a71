"""Text format for macro schemes: optional ``n <n>`` header, then one
``L <byte>`` or ``C <src> <len>`` line per phrase."""

from sesx.core.bms import Bms, Copy, Literal, Phrase
from sesx.errors import ParseError


def render_bms(bms: Bms) -> str:
    lines = [f"n {bms.n}"]
    for phrase in bms.phrases:
        if isinstance(phrase, Literal):
            lines.append(f"L {phrase.byte}")
        else:
            lines.append(f"C {phrase.src} {phrase.length}")
    return "\n".join(lines) + "\n"


def parse_bms(text: str) -> Bms:
    n = None
    phrases: list[Phrase] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        tag, *fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", line_no)
        if tag == "n" and len(values) == 1 and n is None and not phrases:
            n = values[0]
        elif tag == "L" and len(values) == 1:
            phrases.append(Literal(values[0]))
        elif tag == "C" and len(values) == 2:
            phrases.append(Copy(values[0], values[1]))
        else:
            raise ParseError(f"unexpected record {line!r}", line_no)
    if n is None:
        n = sum(p.length for p in phrases)
    return Bms(n, tuple(phrases))
