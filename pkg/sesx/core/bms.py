"""Bidirectional macro schemes and their conversion to equation systems."""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from sesx.core.ses import Equation, Pin, Ses
from sesx.core.suffix import SuffixIndex, build_index, lpf_array
from sesx.core.text import Text
from sesx.errors import InconsistentBms, InvalidBms


class Literal(NamedTuple):
    byte: int

    @property
    def length(self) -> int:
        return 1


class Copy(NamedTuple):
    """Phrase copied from ``w[src .. src + length - 1]``."""

    src: int
    length: int


Phrase = Union[Literal, Copy]


@dataclass(frozen=True)
class Bms:
    """A partition of a length-``n`` text into literal and copy phrases."""

    n: int
    phrases: tuple[Phrase, ...]

    def __post_init__(self):
        object.__setattr__(self, "phrases", tuple(self.phrases))
        total = 0
        for t, phrase in enumerate(self.phrases):
            if isinstance(phrase, Copy):
                if phrase.length < 1:
                    raise InconsistentBms(t, f"copy length must be positive, got {phrase.length}")
                if phrase.src < 1 or phrase.src + phrase.length - 1 > self.n:
                    raise InconsistentBms(t, f"source [{phrase.src}..{phrase.src + phrase.length - 1}] is outside [1..{self.n}]")
            elif not 0 <= phrase.byte <= 255:
                raise InconsistentBms(t, f"literal {phrase.byte} is not a byte value")
            total += phrase.length
        if total != self.n:
            raise InconsistentBms(len(self.phrases), f"phrase lengths sum to {total}, expected {self.n}")

    def __len__(self) -> int:
        return len(self.phrases)


@dataclass(frozen=True)
class TransitionFn:
    """tau over positions 1..n; ``None`` marks literal positions."""

    tau: tuple[Optional[int], ...]

    def __call__(self, i: int) -> Optional[int]:
        return self.tau[i - 1]

    def __len__(self) -> int:
        return len(self.tau)


def phrase_intervals(b: Bms) -> list[tuple[int, int]]:
    out = []
    start = 1
    for phrase in b.phrases:
        out.append((start, start + phrase.length - 1))
        start += phrase.length
    return out


def transition_function(b: Bms) -> TransitionFn:
    tau: list[Optional[int]] = []
    for phrase in b.phrases:
        if isinstance(phrase, Literal):
            tau.append(None)
        else:
            tau.extend(range(phrase.src, phrase.src + phrase.length))
    return TransitionFn(tuple(tau))


def validate_bms(b: Bms) -> None:
    """Raise InvalidBms unless every position reaches a literal under tau.

    Positions are coloured white (0), grey (1, on the current walk) or black
    (2, known to reach a literal); stepping onto a grey position is a cycle.
    """
    tau = transition_function(b)
    color = [0] * (b.n + 1)
    for start in range(1, b.n + 1):
        walk = []
        i: Optional[int] = start
        while i is not None and color[i] == 0:
            color[i] = 1
            walk.append(i)
            i = tau(i)
        if i is not None and color[i] == 1:
            raise InvalidBms(i)
        for p in walk:
            color[p] = 2


def bms_to_ses(b: Bms, w: Text) -> Ses:
    """One pin per literal and one equation per copy; size equals the phrase count."""
    if b.n != w.n:
        raise InconsistentBms(0, f"scheme describes {b.n} positions, text has {w.n}")
    validate_bms(b)
    equations: list[Equation] = []
    pins: list[Pin] = []
    for t, ((a, _), phrase) in enumerate(zip(phrase_intervals(b), b.phrases)):
        if isinstance(phrase, Literal):
            if w[a] != phrase.byte:
                raise InconsistentBms(t, f"literal {phrase.byte} does not match w[{a}] = {w[a]}")
            pins.append(Pin(a, phrase.byte))
        else:
            if w.substring(a, phrase.length) != w.substring(phrase.src, phrase.length):
                raise InconsistentBms(t, f"w[{a}..{a + phrase.length - 1}] differs from its source at {phrase.src}")
            equations.append(Equation(a, phrase.src, phrase.length))
    return Ses(w.n, tuple(equations), tuple(pins))


def literal_bms(w: Text) -> Bms:
    return Bms(w.n, tuple(Literal(c) for c in w.data))


def greedy_left_bms(w: Text, idx: Optional[SuffixIndex] = None) -> Bms:
    """Greedy longest-previous-factor parse; every copy points strictly left."""
    idx = idx or build_index(w)
    lengths, sources = lpf_array(idx)
    lengths_l = lengths.tolist()
    sources_l = sources.tolist()
    phrases: list[Phrase] = []
    i = 0
    while i < w.n:
        if lengths_l[i] >= 1:
            phrases.append(Copy(sources_l[i], lengths_l[i]))
            i += lengths_l[i]
        else:
            phrases.append(Literal(w.data[i]))
            i += 1
    return Bms(w.n, tuple(phrases))
