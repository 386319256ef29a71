"""Compression by super-maximal right extensions.

Pipeline: attach the sentinel, index the text, collect its super-maximal
right extensions xc (leftmost occurrences), arrange the reversed bodies x^R
in a compacted trie, and walk the trie depth-first. Every two consecutive
entries share the suffix spelled by their lowest common ancestor, which
becomes one substring equation; one pin per distinct byte completes the
system.

The pipeline never materialises the trie: the depth-first order of its
entries is the lexicographic order of (x^R, c), and the LCA of two
neighbours spells their longest common prefix. Both come from the suffix
array of the reversed text. ``build_reverse_trie`` builds the nodes on
demand for inspection.
"""

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, NamedTuple, Optional

import numpy as np

from sesx.core.ses import (
    DEFAULT_ALPHABET_SIZE,
    Equation,
    Pin,
    Ses,
    SolveResult,
    position_classes,
    solve,
    validate,
)
from sesx.core.suffix import SreRecord, SreTable, SuffixIndex, build_index, compute_sre
from sesx.core.text import SENTINEL, Text, attach_sentinel
from sesx.errors import Corrupted, TooLarge

logger = logging.getLogger(__name__)

DEFAULT_MAX_RAW_LEN = 2**31 - 2
TRIE_METHODS = ("suffix", "insert")


def _as_table(records: Sequence[SreRecord]) -> SreTable:
    return records if isinstance(records, SreTable) else SreTable.from_records(records)


def reverse_order(entries: SreTable, w: Text) -> tuple[np.ndarray, np.ndarray]:
    """Order entries by (x^R, ext_char) and measure neighbouring bodies.

    Returns the permutation and, for each entry in that order, the longest
    common prefix of its x^R with the previous one (0 for the first).
    Every entry must have a nonempty body.
    """
    m = len(entries)
    if m == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    rev = build_index(Text(w.raw[::-1] + bytes([SENTINEL])))
    # raw position p starts the reversed suffix w[p] w[p-1] ... w[1]
    starts = w.raw_len - entries.anchor_pos + 1
    depths = entries.x_len
    # first suffix array row beginning with x^R; a prefix sorts before its extensions
    first_row = rev.lcp_rmq.previous_less(rev.rank[starts] + 1, depths)
    order = np.lexsort((entries.ext_char, depths, first_row))

    shared = np.zeros(m, dtype=np.int64)
    if m > 1:
        s, d = starts[order], depths[order]
        shared[1:] = np.minimum(np.minimum(d[:-1], d[1:]), rev.lcp_of(s[:-1], s[1:]))
    return order, shared


# =============================================================================
# Reverse compacted trie
# =============================================================================


@dataclass
class TrieNode:
    """A node whose path string is x^R for ``x = w[rep - string_depth + 1 .. rep]``.

    ``rep`` is the anchor of any entry in the node's subtree; it is enough to
    spell the path and edge labels.
    """

    parent: int
    string_depth: int
    rep: int
    edge_len: int = 0
    first_byte: int = -1
    children: list[int] = field(default_factory=list)
    entries: list[SreRecord] = field(default_factory=list)


@dataclass
class ReverseCompactedTrie:
    nodes: list[TrieNode]
    root: int = 0

    @property
    def entry_count(self) -> int:
        return sum(len(node.entries) for node in self.nodes)

    def path_string(self, node_id: int, w: Text) -> bytes:
        """The node's path string x^R."""
        node = self.nodes[node_id]
        if node.string_depth == 0:
            return b""
        return w.substring(node.rep - node.string_depth + 1, node.string_depth)[::-1]

    def shape(self, node_id: Optional[int] = None) -> tuple:
        """Canonical nested description, equal for tries of the same shape."""
        node = self.nodes[self.root if node_id is None else node_id]
        return (
            node.string_depth,
            node.first_byte,
            tuple(e.ext_pos for e in node.entries),
            tuple(self.shape(child) for child in node.children),
        )


def _finalize(nodes: list[TrieNode], w: Text) -> ReverseCompactedTrie:
    data = w.data
    for node in nodes[1:]:
        parent = nodes[node.parent]
        node.edge_len = node.string_depth - parent.string_depth
        # first byte of the edge is character number parent_depth of x^R
        node.first_byte = data[node.rep - parent.string_depth - 1]
    for node in nodes:
        node.children.sort(key=lambda c: nodes[c].first_byte)
        node.entries.sort(key=lambda e: e.ext_char)
    return ReverseCompactedTrie(nodes)


def _trie_from_reverse_index(entries: SreTable, w: Text) -> ReverseCompactedTrie:
    """Stack construction over the entries in (x^R, ext_char) order."""
    nodes = [TrieNode(parent=-1, string_depth=0, rep=0)]
    order, shared = reverse_order(entries, w)
    stack = [0]
    for entry, h in zip(entries[order], shared.tolist()):
        popped = None
        while nodes[stack[-1]].string_depth > h:
            popped = stack.pop()
        top = stack[-1]
        if nodes[top].string_depth < h:
            mid = len(nodes)
            nodes.append(TrieNode(parent=top, string_depth=h, rep=nodes[popped].rep))
            nodes[top].children[-1] = mid
            nodes[popped].parent = mid
            nodes[mid].children.append(popped)
            stack.append(mid)
            top = mid
        if entry.x_len > h:
            child = len(nodes)
            nodes.append(TrieNode(parent=top, string_depth=entry.x_len, rep=entry.anchor_pos))
            nodes[top].children.append(child)
            stack.append(child)
            top = child
        nodes[top].entries.append(entry)
    return _finalize(nodes, w)


def _trie_by_insertion(entries: SreTable, w: Text) -> ReverseCompactedTrie:
    """Insert every x^R into a plain trie, then contract unary entry-free nodes.

    Quadratic in the worst case; intended for cross-checking small inputs.
    """
    data = w.data
    kids: list[dict[int, int]] = [{}]
    held: list[list[SreRecord]] = [[]]
    for entry in entries:
        cur = 0
        for k in range(entry.x_len):
            byte = data[entry.anchor_pos - k - 1]
            nxt = kids[cur].get(byte)
            if nxt is None:
                nxt = len(kids)
                kids[cur][byte] = nxt
                kids.append({})
                held.append([])
            cur = nxt
        held[cur].append(entry)

    nodes = [TrieNode(parent=-1, string_depth=0, rep=0)]
    reps: dict[int, int] = {}
    # post-order pass so every plain node knows an anchor from its subtree
    order = [0]
    visit: list[int] = []
    while order:
        plain = order.pop()
        visit.append(plain)
        order.extend(kids[plain].values())
    for plain in reversed(visit):
        if held[plain]:
            reps[plain] = held[plain][0].anchor_pos
        elif kids[plain]:
            reps[plain] = reps[next(iter(kids[plain].values()))]

    pending = [(child, 0, 1) for child in kids[0].values()]
    while pending:
        plain, parent, depth = pending.pop()
        while len(kids[plain]) == 1 and not held[plain]:
            plain = next(iter(kids[plain].values()))
            depth += 1
        node_id = len(nodes)
        nodes.append(TrieNode(parent=parent, string_depth=depth, rep=reps[plain], entries=list(held[plain])))
        nodes[parent].children.append(node_id)
        pending.extend((child, node_id, depth + 1) for child in kids[plain].values())
    nodes[0].entries = list(held[0])
    return _finalize(nodes, w)


def build_reverse_trie(records: Sequence[SreRecord], w: Text, method: str = "suffix") -> ReverseCompactedTrie:
    """Compacted trie of the reversed bodies x^R of the records with x nonempty."""
    if method not in TRIE_METHODS:
        raise ValueError(f"unknown trie method {method!r}, expected one of {TRIE_METHODS}")
    entries = _as_table(records).with_body()
    if method == "suffix":
        return _trie_from_reverse_index(entries, w)
    return _trie_by_insertion(entries, w)


# =============================================================================
# Emission
# =============================================================================


class PairRecord(NamedTuple):
    """Two DFS-consecutive entries and the string depth of their LCA."""

    first: SreRecord
    second: SreRecord
    lca_depth: int

    def equation(self) -> Optional[Equation]:
        d = self.lca_depth
        if d == 0:
            return None
        return Equation(self.first.anchor_pos - d + 1, self.second.anchor_pos - d + 1, d)


@dataclass
class EmissionPlan:
    """Entries in DFS order; ``lca_depth[k]`` belongs to entries k and k + 1."""

    entries: SreTable
    lca_depth: np.ndarray

    @property
    def dfs_list(self) -> list[SreRecord]:
        return list(self.entries)

    @property
    def pairs(self) -> list[PairRecord]:
        dfs = self.dfs_list
        return [PairRecord(a, b, d) for a, b, d in zip(dfs, dfs[1:], self.lca_depth.tolist())]

    @property
    def root_pairs(self) -> int:
        return int(np.count_nonzero(self.lca_depth == 0))

    def equations(self) -> np.ndarray:
        """(i, j, l) rows for the pairs below the root, in DFS order."""
        d = self.lca_depth
        keep = d >= 1
        anchors = self.entries.anchor_pos
        first = anchors[:-1][keep] - d[keep] + 1
        second = anchors[1:][keep] - d[keep] + 1
        return np.column_stack((first, second, d[keep])).astype(np.int64)


def plan_emission(trie: ReverseCompactedTrie) -> EmissionPlan:
    """Pre-order walk: a node's entries, then its children by first byte.

    ``low`` tracks the shallowest node passed since the previous entry, which
    is the depth of the LCA of the two entries.
    """
    nodes = trie.nodes
    dfs: list[SreRecord] = []
    lows: list[int] = []
    low = float("inf")

    def enter(node_id: int) -> None:
        nonlocal low
        node = nodes[node_id]
        for entry in node.entries:
            low = min(low, node.string_depth)
            if dfs:
                lows.append(int(low))
            dfs.append(entry)
            low = float("inf")

    enter(trie.root)
    stack = [(trie.root, iter(nodes[trie.root].children))]
    while stack:
        node_id, children = stack[-1]
        low = min(low, nodes[node_id].string_depth)
        child = next(children, None)
        if child is None:
            stack.pop()
            continue
        enter(child)
        stack.append((child, iter(nodes[child].children)))
    return EmissionPlan(SreTable.from_records(dfs), np.array(lows, dtype=np.int64))


def plan_from_records(records: Sequence[SreRecord], w: Text) -> EmissionPlan:
    """The plan ``plan_emission`` derives from the trie, without building it."""
    entries = _as_table(records).with_body()
    order, shared = reverse_order(entries, w)
    return EmissionPlan(entries[order], shared[1:])


def character_pins(w: Text) -> list[Pin]:
    """One pin per distinct byte at its leftmost position, by position."""
    values, first = np.unique(w.codes, return_index=True)
    order = np.argsort(first)
    return [Pin(int(first[k]) + 1, int(values[k])) for k in order]


def emit_ses(trie: ReverseCompactedTrie, w: Text, plan: Optional[EmissionPlan] = None) -> Ses:
    plan = plan or plan_emission(trie)
    return Ses(w.n, plan.equations(), tuple(character_pins(w)))


# =============================================================================
# Entry points
# =============================================================================


@dataclass
class PipelineResult:
    text: Text
    index: SuffixIndex
    records: SreTable
    plan: EmissionPlan
    ses: Ses
    timings: dict[str, float] = field(default_factory=dict)
    method: str = "suffix"

    @cached_property
    def trie(self) -> ReverseCompactedTrie:
        return build_reverse_trie(self.records, self.text, method=self.method)

    @property
    def chi(self) -> int:
        return len(self.records)

    def summary(self) -> str:
        ses = self.ses
        return (
            f"n={ses.n} chi={self.chi} sigma={self.text.alphabet.sigma} "
            f"eq={len(ses.eq)} ch={len(ses.ch)} size={ses.size}"
        )


def _max_raw_len(config: Optional[dict[str, Any]]) -> int:
    if not config:
        return DEFAULT_MAX_RAW_LEN
    return int(config.get("compress", {}).get("max_raw_len", DEFAULT_MAX_RAW_LEN))


def run_pipeline(raw: bytes, config: Optional[dict[str, Any]] = None, method: str = "suffix") -> PipelineResult:
    """Compress ``raw`` and keep every intermediate structure.

    ``method`` selects how ``result.trie`` is built when it is inspected.
    """
    limit = _max_raw_len(config)
    if len(raw) > limit:
        raise TooLarge(len(raw), limit, "input")
    if method not in TRIE_METHODS:
        raise ValueError(f"unknown trie method {method!r}, expected one of {TRIE_METHODS}")

    timings: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(stage: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        timings[stage] = now - clock
        logger.debug("%s: %.3f s", stage, timings[stage])
        clock = now

    w = attach_sentinel(raw)
    idx = build_index(w)
    _ = idx.tree
    lap("index")
    records = compute_sre(idx, w)
    lap("sre")
    entries = records.with_body()
    order, shared = reverse_order(entries, w)
    lap("trie")
    plan = EmissionPlan(entries[order], shared[1:])
    ses = Ses(w.n, plan.equations(), tuple(character_pins(w)))
    lap("emission")
    return PipelineResult(w, idx, records, plan, ses, timings, method)


def compress(raw: bytes, config: Optional[dict[str, Any]] = None) -> Ses:
    """Return an SES representing ``raw`` + sentinel; ``raw_len`` is ``n - 1``."""
    return run_pipeline(raw, config).ses


def decompress(
    sys: Ses,
    raw_len: int,
    alphabet_size: int = DEFAULT_ALPHABET_SIZE,
    max_raw_len: int = DEFAULT_MAX_RAW_LEN,
) -> bytes:
    """Solve ``sys`` and strip the sentinel.

    Raises TooLarge before allocating anything for a raw length above
    ``max_raw_len``, MalformedSystem if ``sys`` fails validation and Corrupted
    if it does not describe exactly one sentinel-terminated text of the
    stated length.
    """
    if raw_len > max_raw_len:
        raise TooLarge(raw_len, max_raw_len, "container")
    if sys.n != raw_len + 1:
        raise Corrupted(f"system length {sys.n} does not match raw length {raw_len} + 1")
    validate(sys)
    # each equation merges at most l pairs of classes and each pin fixes one class
    covered = len(sys.ch) + int(sys.eq_array[:, 2].sum())
    if alphabet_size >= 2 and covered < sys.n:
        raise Corrupted(f"{sys.size} constraints cannot determine {sys.n} positions")
    started = time.perf_counter()
    result: SolveResult = solve(sys, alphabet_size)
    logger.debug("solve: %.3f s", time.perf_counter() - started)
    if not result.is_unique:
        raise Corrupted(f"system is {result.status.value}, expected a unique solution")
    text = result.text
    if text[-1] != SENTINEL:
        raise Corrupted("decoded text does not end with the sentinel")
    if text.find(SENTINEL) != len(text) - 1:
        raise Corrupted(f"decoded text contains the sentinel at offset {text.find(SENTINEL)}")
    return text[:-1]


def position_equivalence_classes(w: Text) -> list[list[int]]:
    """Classes of positions identified by the equations emitted for ``w``."""
    labels = position_classes(w.n, compress(w.raw).eq_array)
    groups: dict[int, list[int]] = {}
    for pos, label in enumerate(labels, start=1):
        groups.setdefault(label, []).append(pos)
    return [groups[label] for label in sorted(groups)]
