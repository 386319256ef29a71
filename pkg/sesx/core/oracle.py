"""Brute-force reference implementations used as ground truth in tests.

Everything here follows the definitions literally and is size-capped; none
of it is meant to be fast.
"""

from dataclasses import dataclass
from typing import Iterable

from sesx.core.ses import DEFAULT_ALPHABET_SIZE, Ses, SolveResult, SolveStatus
from sesx.core.text import Text
from sesx.core.union_find import DisjointSet
from sesx.errors import MalformedSystem, PositionOutOfBounds, TooLarge

MAX_N = 2000
MAX_SOLVE_N = 500
MAX_SOLVE_EQ = 500
MAX_ATTRACTOR_N = 500


@dataclass(frozen=True)
class StringSet:
    """Distinct substrings of one text, each stored as its leftmost (start, length)."""

    items: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.items)

    def strings(self, w: Text) -> set[bytes]:
        return {w.substring(start, length) for start, length in self.items}


def _check_size(w: Text, limit: int) -> None:
    if w.n > limit:
        raise TooLarge(w.n, limit, "text")


def _check_positions(positions: Iterable[int], n: int) -> set[int]:
    out = set(positions)
    for p in out:
        if not 1 <= p <= n:
            raise PositionOutOfBounds(p, n)
    return out


def _extension_table(w: Text) -> dict[bytes, tuple[int, set[int]]]:
    """Map each repeated-or-not body x to (leftmost start, following bytes).

    Lengths are enumerated upward and the scan stops at the first length
    with no repeated substring, since no longer body can branch.
    """
    data = w.data
    n = len(data)
    table: dict[bytes, tuple[int, set[int]]] = {b"": (1, set(data))}
    length = 1
    while length < n:
        seen: dict[bytes, tuple[int, set[int]]] = {}
        repeated = False
        for start in range(n - length):
            body = data[start : start + length]
            entry = seen.get(body)
            if entry is None:
                seen[body] = (start + 1, {data[start + length]})
            else:
                entry[1].add(data[start + length])
                repeated = True
        table.update(seen)
        if not repeated:
            break
        length += 1
    return table


def _leftmost(w: Text, s: bytes) -> int:
    return w.data.find(s) + 1


def naive_right_extensions(w: Text) -> StringSet:
    """All xc occurring in w such that xc' also occurs for some c' != c."""
    _check_size(w, MAX_N)
    items = set()
    for body, (_, followers) in _extension_table(w).items():
        if len(followers) < 2:
            continue
        for c in followers:
            s = body + bytes([c])
            items.add((_leftmost(w, s), len(s)))
    return StringSet(frozenset(items))


def naive_sre(w: Text) -> StringSet:
    """Right extensions that are not a proper suffix of another right extension."""
    extensions = naive_right_extensions(w)
    strings = {w.substring(s, l): (s, l) for s, l in extensions.items}
    dominated = set()
    for s in strings:
        for cut in range(1, len(s)):
            if s[cut:] in strings:
                dominated.add(s[cut:])
    return StringSet(frozenset(loc for s, loc in strings.items() if s not in dominated))


def verify_suffixient(w: Text, positions: Iterable[int]) -> bool:
    """True iff every right extension is a suffix of some prefix w[1..j], j in S."""
    _check_size(w, MAX_N)
    ends = _check_positions(positions, w.n)
    prefixes = [w.data[:j] for j in sorted(ends)]
    for s in naive_right_extensions(w).strings(w):
        if not any(prefix.endswith(s) for prefix in prefixes):
            return False
    return True


def naive_smallest_suffixient(w: Text) -> set[int]:
    """End positions of the leftmost occurrences of the super-maximal right extensions."""
    return {start + length - 1 for start, length in naive_sre(w).items}


def naive_chi(w: Text) -> int:
    return len(naive_sre(w))


def naive_ses_solve(sys: Ses, alphabet_size: int = DEFAULT_ALPHABET_SIZE) -> SolveResult:
    """Solve by expanding every equation into single-position identities."""
    n = sys.n
    if n > MAX_SOLVE_N or len(sys.eq) > MAX_SOLVE_EQ:
        raise TooLarge(max(n, len(sys.eq)), MAX_SOLVE_N, "system")
    if n < 1:
        raise MalformedSystem(f"text length must be at least 1, got {n}")
    for e in sys.eq:
        if not (1 <= e.i <= n and 1 <= e.j <= n and 1 <= e.length <= n - max(e.i, e.j) + 1):
            raise MalformedSystem(f"equation {tuple(e)} is out of bounds", e)
    for p in sys.ch:
        if not 1 <= p.pos <= n:
            raise MalformedSystem(f"pin {tuple(p)} is out of bounds", p)

    positions = DisjointSet(n)
    for e in sys.eq:
        for k in range(e.length):
            positions.union(e.i - 1 + k, e.j - 1 + k)
    classes = [label + 1 for label in positions.labels()]

    conflicts = [
        (min(p.pos, q.pos), max(p.pos, q.pos))
        for x, p in enumerate(sys.ch)
        for q in sys.ch[x + 1 :]
        if classes[p.pos - 1] == classes[q.pos - 1] and p.byte != q.byte
    ]
    if conflicts:
        return SolveResult(SolveStatus.UNSAT, classes=classes, conflict=min(conflicts))

    byte_of: dict[int, int] = {}
    for p in sys.ch:
        byte_of[classes[p.pos - 1]] = p.byte
    unpinned = [k for k in range(1, n + 1) if classes[k - 1] not in byte_of]
    if unpinned and alphabet_size >= 2:
        return SolveResult(SolveStatus.AMBIGUOUS, classes=classes, free_pos=unpinned[0])
    fill = min(sys.ch, key=lambda p: p.pos).byte if sys.ch else 0
    text = bytes(byte_of.get(classes[k], fill) for k in range(n))
    return SolveResult(SolveStatus.UNIQUE, classes=classes, text=text)


def naive_attractor_check(w: Text, positions: Iterable[int]) -> bool:
    """True iff every distinct substring has an occurrence crossing a marked position."""
    _check_size(w, MAX_ATTRACTOR_N)
    marks = _check_positions(positions, w.n)
    data = w.data
    n = len(data)
    covered: dict[bytes, bool] = {}
    for i in range(1, n + 1):
        crossed = False
        for j in range(i, n + 1):
            crossed = crossed or j in marks
            s = data[i - 1 : j]
            covered[s] = covered.get(s, False) or crossed
    return all(covered.values())


def naive_bwt_runs(w: Text) -> int:
    """Run count of the BWT built from explicitly sorted rotations."""
    data = w.data
    rotations = sorted(data[i:] + data[:i] for i in range(len(data)))
    last = [r[-1] for r in rotations]
    return 1 + sum(1 for a, b in zip(last, last[1:]) if a != b)


def naive_lz_count(w: Text) -> int:
    """Greedy factor count with sources starting strictly to the left (overlap allowed)."""
    data = w.data
    n = len(data)
    i = count = 0
    while i < n:
        best = 0
        for j in range(i):
            length = 0
            while i + length < n and data[j + length] == data[i + length]:
                length += 1
            best = max(best, length)
        i += max(best, 1)
        count += 1
    return count
