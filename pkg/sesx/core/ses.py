"""Substring equation systems: data model, validation, solver and metrics.

A system ``(n, Eq, Ch)`` constrains an unknown string of length ``n`` with
substring equalities ``w[i..i+l-1] = w[j..j+l-1]`` and character pins
``w[k] = c``. The solver computes the equivalence closure of the position
identities implied by the equalities, then checks the pins against it.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from sesx.errors import MalformedSystem, NotRepresenting, OutOfRange

DEFAULT_ALPHABET_SIZE = 256


class Equation(NamedTuple):
    """``w[i..i+length-1] = w[j..j+length-1]`` (1-based)."""

    i: int
    j: int
    length: int


class Pin(NamedTuple):
    """``w[pos] = byte`` (1-based)."""

    pos: int
    byte: int


Constraint = Union[Equation, Pin]


@dataclass(frozen=True)
class Ses:
    """A substring equation system over texts of length ``n``.

    ``eq`` may also be given as an (m, 3) integer array; ``eq_array`` then
    keeps it without a round trip through Python tuples.
    """

    n: int
    eq: tuple[Equation, ...] = ()
    ch: tuple[Pin, ...] = ()

    def __post_init__(self):
        if isinstance(self.eq, np.ndarray):
            rows = self.eq.astype(np.int64).reshape(-1, 3)
            self.__dict__["eq_array"] = rows
            object.__setattr__(self, "eq", tuple(map(Equation._make, rows.tolist())))
        else:
            object.__setattr__(self, "eq", tuple(map(Equation._make, self.eq)))
        object.__setattr__(self, "ch", tuple(map(Pin._make, self.ch)))

    @cached_property
    def eq_array(self) -> np.ndarray:
        return np.array(self.eq, dtype=np.int64).reshape(-1, 3)

    @property
    def size(self) -> int:
        return len(self.eq) + len(self.ch)

    @property
    def weighted_size(self) -> int:
        return 8 * len(self.eq) + len(self.ch)


class SolveStatus(Enum):
    UNSAT = "unsat"
    AMBIGUOUS = "ambiguous"
    UNIQUE = "unique"


@dataclass
class SolveResult:
    """Outcome of solving a system.

    ``classes[k - 1]`` is the smallest position in the class of position ``k``,
    so two results describe the same partition iff their label lists are equal.
    """

    status: SolveStatus
    classes: list[int] = field(default_factory=list)
    text: Optional[bytes] = None
    conflict: Optional[tuple[int, int]] = None
    free_pos: Optional[int] = None

    @property
    def is_unique(self) -> bool:
        return self.status is SolveStatus.UNIQUE

    def partition(self) -> list[list[int]]:
        """Classes as sorted position lists, ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for pos, label in enumerate(self.classes, start=1):
            groups.setdefault(label, []).append(pos)
        return [groups[label] for label in sorted(groups)]


def _equation_rows(sys: Ses) -> np.ndarray:
    try:
        return sys.eq_array
    except OverflowError:
        raise MalformedSystem("equation field does not fit in 64 bits")


def _first_bad_equation(n: int, rows: np.ndarray) -> Optional[int]:
    """Index of the first equation with a position or length out of bounds."""
    if len(rows) == 0:
        return None
    i, j, length = rows[:, 0], rows[:, 1], rows[:, 2]
    bad_pos = (i < 1) | (i > n) | (j < 1) | (j > n)
    bad_len = (length < 1) | (length > n - np.maximum(i, j) + 1)
    bad = np.flatnonzero(bad_pos | bad_len)
    return int(bad[0]) if len(bad) else None


def validate(sys: Ses) -> None:
    """Raise MalformedSystem on the first constraint outside its bounds."""
    n = sys.n
    if n < 1:
        raise MalformedSystem(f"text length must be at least 1, got {n}")
    k = _first_bad_equation(n, _equation_rows(sys))
    if k is not None:
        e = sys.eq[k]
        if not (1 <= e.i <= n and 1 <= e.j <= n):
            raise MalformedSystem(f"equation {tuple(e)} has a position outside [1..{n}]", e)
        raise MalformedSystem(f"equation {tuple(e)} has length outside [1..{n - max(e.i, e.j) + 1}]", e)
    seen: set[Pin] = set()
    for p in sys.ch:
        if not 1 <= p.pos <= n:
            raise MalformedSystem(f"pin {tuple(p)} is outside [1..{n}]", p)
        if not 0 <= p.byte <= 255:
            raise MalformedSystem(f"pin {tuple(p)} is not a byte value", p)
        if p in seen:
            raise MalformedSystem(f"pin {tuple(p)} appears twice", p)
        seen.add(p)


def _smallest_members(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Connected components of the edges a-b.

    Returns the sorted vertices touched by an edge and, for each, the smallest
    vertex of its component.
    """
    ids, inverse = np.unique(np.concatenate((a, b)), return_inverse=True)
    inverse = inverse.reshape(-1)
    m = len(a)
    graph = coo_matrix((np.ones(m, dtype=np.int32), (inverse[:m], inverse[m:])), shape=(len(ids), len(ids)))
    _, component = connected_components(graph, directed=False)
    # ids are sorted, so the first vertex met per component is its smallest
    _, first = np.unique(component, return_index=True)
    return ids, ids[first[component]]


def class_labels(n: int, rows: np.ndarray) -> np.ndarray:
    """Equivalence closure of the positions identified by ``rows`` (i, j, l).

    Each equation of length l is covered by two aligned equations of length
    2^k, k = floor(log2 l). Level k merges block starts as a graph; every
    block that joins a smaller one hands two half-length merges to level k-1.
    Returns 1-based labels, each the smallest position of its class.
    """
    labels = np.arange(n, dtype=np.int64)
    if len(rows) == 0:
        return labels + 1
    i, j, length = rows[:, 0] - 1, rows[:, 1] - 1, rows[:, 2]
    level = np.frexp(length.astype(np.float64))[1] - 1
    shift = length - (np.int64(1) << level)
    level = np.concatenate((level, level))
    order = np.argsort(level, kind="stable")
    level = level[order]
    starts_a = np.concatenate((i, i + shift))[order]
    starts_b = np.concatenate((j, j + shift))[order]

    carry_a = carry_b = np.empty(0, dtype=np.int64)
    for k in range(int(level[-1]), -1, -1):
        lo, hi = np.searchsorted(level, [k, k + 1])
        a = np.concatenate((starts_a[lo:hi], carry_a))
        b = np.concatenate((starts_b[lo:hi], carry_b))
        if len(a) == 0:
            continue
        ids, smallest = _smallest_members(a, b)
        if k == 0:
            labels[ids] = smallest
            break
        joined = ids != smallest
        half = 1 << (k - 1)
        root, member = smallest[joined], ids[joined]
        carry_a = np.concatenate((root, root + half))
        carry_b = np.concatenate((member, member + half))
    return labels + 1


def position_classes(n: int, equations: Iterable[Equation]) -> list[int]:
    """Label of every position: the smallest position of its class, 1-based."""
    if not isinstance(equations, np.ndarray):
        equations = np.array(list(equations), dtype=np.int64)
    return class_labels(n, equations.reshape(-1, 3)).tolist()


def first_conflict(pins_by_class: dict[int, list[Pin]]) -> Optional[tuple[int, int]]:
    """Lexicographically smallest pair of differently pinned positions in one class."""
    best: Optional[tuple[int, int]] = None
    for pins in pins_by_class.values():
        pins = sorted(pins)
        first = pins[0]
        for other in pins[1:]:
            if other.byte != first.byte:
                pair = (first.pos, other.pos)
                if best is None or pair < best:
                    best = pair
                break
    return best


def solve(sys: Ses, alphabet_size: int = DEFAULT_ALPHABET_SIZE) -> SolveResult:
    """Decide satisfiability and uniqueness; build the text when unique."""
    validate(sys)
    if not 1 <= alphabet_size <= 256:
        raise OutOfRange(f"alphabet size must be in [1, 256], got {alphabet_size}")

    labels = class_labels(sys.n, sys.eq_array)
    classes = labels.tolist()
    pins_by_class: dict[int, list[Pin]] = {}
    for pin in sys.ch:
        pins_by_class.setdefault(classes[pin.pos - 1], []).append(pin)

    conflict = first_conflict(pins_by_class)
    if conflict is not None:
        return SolveResult(SolveStatus.UNSAT, classes=classes, conflict=conflict)

    byte_of = {label: pins[0].byte for label, pins in pins_by_class.items()}
    pinned = np.zeros(sys.n + 1, dtype=bool)
    pinned[list(byte_of)] = True
    unpinned = ~pinned[labels]
    fill = 0
    if unpinned.any():
        if alphabet_size >= 2:
            free = int(np.argmax(unpinned)) + 1
            return SolveResult(SolveStatus.AMBIGUOUS, classes=classes, free_pos=free)
        # a one-letter alphabet leaves no choice for unpinned classes
        fill = min(sys.ch).byte if sys.ch else 0
    byte_table = np.full(sys.n + 1, fill, dtype=np.uint8)
    byte_table[list(byte_of)] = list(byte_of.values())
    return SolveResult(SolveStatus.UNIQUE, classes=classes, text=byte_table[labels].tobytes())


def reconstruct(sys: Ses, alphabet_size: int = DEFAULT_ALPHABET_SIZE) -> bytes:
    """Return the unique text of ``sys`` or raise NotRepresenting."""
    result = solve(sys, alphabet_size)
    if not result.is_unique:
        raise NotRepresenting(result)
    return result.text


def size(sys: Ses) -> int:
    return sys.size


def weighted_size(sys: Ses) -> int:
    return sys.weighted_size


def attractor_from_ses(sys: Ses, alphabet_size: int = DEFAULT_ALPHABET_SIZE) -> set[int]:
    """Pinned positions plus the four endpoints of every equation."""
    result = solve(sys, alphabet_size)
    if not result.is_unique:
        raise NotRepresenting(result)
    positions = {p.pos for p in sys.ch}
    for i, j, length in sys.eq:
        positions.update((i, i + length - 1, j, j + length - 1))
    return positions


def _equations_hold(sys: Ses, text: bytes) -> bool:
    """All equations hold iff every class of their closure is one byte."""
    try:
        rows = sys.eq_array
    except OverflowError:
        return False
    if _first_bad_equation(sys.n, rows) is not None:
        return False
    codes = np.frombuffer(text, dtype=np.uint8)
    labels = class_labels(sys.n, rows)
    return bool(np.array_equal(codes[labels - 1], codes))


def check_text(sys: Ses, text: bytes) -> Optional[Constraint]:
    """Return the first constraint ``text`` violates, or None."""
    if len(text) != sys.n:
        raise ValueError(f"text has length {len(text)}, system expects {sys.n}")
    if not _equations_hold(sys, text):
        for e in sys.eq:
            i, j, length = e
            if text[i - 1 : i - 1 + length] != text[j - 1 : j - 1 + length]:
                return e
    for p in sys.ch:
        if text[p.pos - 1] != p.byte:
            return p
    return None


def all_literal_ses(text: bytes) -> Ses:
    """The trivial system pinning every position."""
    return Ses(len(text), (), tuple(Pin(k, c) for k, c in enumerate(text, start=1)))
