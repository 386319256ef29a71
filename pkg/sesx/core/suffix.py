"""Suffix array machinery: index construction, super-maximal right extensions,
suffixient sets and corpus statistics.

The suffix tree is never materialised as pointers. Its internal nodes are
the LCP intervals of the suffix array; children, suffix links and subtree
minima are stored as flat numpy arrays (see ``TreeView``).
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

import numpy as np

from sesx.core.rmq import ArrayLike, RangeMin
from sesx.core.text import Text


# =============================================================================
# Construction
# =============================================================================


def _dense_ranks(keys_sorted: np.ndarray) -> np.ndarray:
    steps = keys_sorted[1:] != keys_sorted[:-1]
    return np.concatenate(([0], np.cumsum(steps)))


def prefix_doubling(codes: np.ndarray) -> tuple[np.ndarray, list[np.ndarray]]:
    """0-based suffix array by prefix doubling, O(n log n) argsorts.

    Also returns the rank arrays of every round: ``levels[k][i]`` ranks the
    prefix of length 2^k of the suffix at i. The last level is the inverse
    suffix array. ``codes`` must end with a unique smallest symbol.
    """
    n = len(codes)
    key = codes.astype(np.int64)
    sa = np.argsort(key, kind="stable")
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = _dense_ranks(key[sa])
    levels = [rank.astype(np.int32)]
    k = 1
    while rank[sa[-1]] < n - 1:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        key = rank * (n + 1) + (second + 1)
        sa = np.argsort(key, kind="stable")
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = _dense_ranks(key[sa])
        levels.append(rank.astype(np.int32))
        k *= 2
    return sa, levels


def common_prefix(levels: list[np.ndarray], p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """LCP of the suffixes at 0-based positions p and q, p != q elementwise.

    Matches whole power-of-two blocks, largest first; equal block ranks mean
    equal prefixes since the sentinel is unique.
    """
    n = len(levels[0])
    h = np.zeros(len(p), dtype=np.int64)
    for k in range(len(levels) - 1, -1, -1):
        rank = levels[k]
        a, b = p + h, q + h
        inside = (a < n) & (b < n)
        same = inside & (rank[np.minimum(a, n - 1)] == rank[np.minimum(b, n - 1)])
        h += same.astype(np.int64) << k
    return h


def lcp_array(sa: np.ndarray, levels: list[np.ndarray]) -> np.ndarray:
    """``lcp[r]`` is the LCP of suffixes ``sa[r-1]`` and ``sa[r]``; ``lcp[0] = 0``."""
    lcp = np.zeros(len(sa), dtype=np.int64)
    if len(sa) > 1:
        lcp[1:] = common_prefix(levels, sa[:-1], sa[1:])
    return lcp


# =============================================================================
# Data types
# =============================================================================


@dataclass
class TreeView:
    """Internal nodes of the suffix tree as LCP intervals.

    Node arrays are indexed by node id; SA intervals ``[lb, rb]`` are 0-based
    inclusive. Child arrays are in CSR layout: the children of node v are
    entries ``child_offset[v] : child_offset[v + 1]``, in ascending order of
    their first character. ``child_node`` is -1 for leaves. ``min_start`` and
    ``child_min`` are 1-based text positions of leftmost occurrences.
    """

    depth: np.ndarray
    lb: np.ndarray
    rb: np.ndarray
    slink: np.ndarray
    min_start: np.ndarray
    child_offset: np.ndarray
    child_owner: np.ndarray
    child_char: np.ndarray
    child_lb: np.ndarray
    child_rb: np.ndarray
    child_min: np.ndarray
    child_node: np.ndarray
    root: int

    @property
    def num_nodes(self) -> int:
        return len(self.depth)

    def children(self, node: int) -> range:
        return range(int(self.child_offset[node]), int(self.child_offset[node + 1]))


@dataclass
class SuffixIndex:
    """Suffix array, LCP and inverse suffix array of a text.

    ``sa`` holds 1-based text positions; ``rank[p]`` is the index of position
    ``p`` in ``sa`` (``rank[0]`` is unused and set to -1).
    """

    text: Text
    sa: np.ndarray
    lcp: np.ndarray
    rank: np.ndarray

    @property
    def n(self) -> int:
        return len(self.sa)

    @cached_property
    def sa0(self) -> np.ndarray:
        return self.sa - 1

    @cached_property
    def lcp_rmq(self) -> RangeMin:
        return RangeMin(self.lcp)

    @cached_property
    def sa_rmq(self) -> RangeMin:
        return RangeMin(self.sa0)

    @cached_property
    def tree(self) -> TreeView:
        return _build_tree(self)

    def lcp_of(self, p: ArrayLike, q: ArrayLike) -> Union[int, np.ndarray]:
        """Longest common prefix of the suffixes starting at positions p and q.

        Accepts scalars or equal-length arrays of 1-based positions.
        """
        scalar = np.ndim(p) == 0 and np.ndim(q) == 0
        p = np.atleast_1d(np.asarray(p, dtype=np.int64))
        q = np.atleast_1d(np.asarray(q, dtype=np.int64))
        out = self.n - p + 1
        apart = np.nonzero(p != q)[0]
        if len(apart):
            rp, rq = self.rank[p[apart]], self.rank[q[apart]]
            out[apart] = self.lcp_rmq.min(np.minimum(rp, rq) + 1, np.maximum(rp, rq))
        return int(out[0]) if scalar else out


@dataclass(frozen=True)
class SreRecord:
    """One super-maximal right extension xc, located at its leftmost occurrence.

    ``ext_pos`` is the position of c, ``x_len`` the length of x.
    """

    ext_pos: int
    x_len: int
    ext_char: int

    @property
    def anchor_pos(self) -> int:
        return self.ext_pos - 1

    @property
    def start(self) -> int:
        return self.ext_pos - self.x_len

    def string(self, w: Text) -> bytes:
        return w.substring(self.start, self.x_len + 1)


@dataclass(frozen=True, eq=False)
class SreTable(Sequence):
    """Columnar records; indexing with an int yields an ``SreRecord``,
    with a slice, mask or index array a smaller table."""

    ext_pos: np.ndarray
    x_len: np.ndarray
    ext_char: np.ndarray

    @classmethod
    def from_records(cls, records: Iterable[SreRecord]) -> "SreTable":
        rows = [(r.ext_pos, r.x_len, r.ext_char) for r in records]
        cols = np.array(rows, dtype=np.int64).reshape(-1, 3)
        return cls(cols[:, 0].copy(), cols[:, 1].copy(), cols[:, 2].copy())

    def __len__(self) -> int:
        return len(self.ext_pos)

    def __getitem__(self, item):
        if isinstance(item, (int, np.integer)):
            return SreRecord(int(self.ext_pos[item]), int(self.x_len[item]), int(self.ext_char[item]))
        return SreTable(self.ext_pos[item], self.x_len[item], self.ext_char[item])

    def __iter__(self) -> Iterator[SreRecord]:
        for p, x, c in zip(self.ext_pos.tolist(), self.x_len.tolist(), self.ext_char.tolist()):
            yield SreRecord(p, x, c)

    @property
    def anchor_pos(self) -> np.ndarray:
        return self.ext_pos - 1

    def with_body(self) -> "SreTable":
        """Records whose x is nonempty."""
        return self[self.x_len >= 1]


# =============================================================================
# Operations
# =============================================================================


def build_index(w: Text) -> SuffixIndex:
    """Suffix array, LCP and rank of ``w``."""
    sa0, levels = prefix_doubling(w.codes)
    lcp = lcp_array(sa0, levels)
    rank = np.concatenate(([-1], levels[-1].astype(np.int64)))
    return SuffixIndex(text=w, sa=sa0 + 1, lcp=lcp, rank=rank)


def _build_tree(idx: SuffixIndex) -> TreeView:
    n = idx.n
    sa0 = idx.sa0
    width = n + 1

    # boundary m opens a child of the interval of depth lcp[m] around it;
    # the fences at both ends close the root
    bounds = np.arange(1, n, dtype=np.int64)
    bound_depth = idx.lcp[1:]
    fenced = RangeMin(np.concatenate(([-1], bound_depth, [-1])))
    lo = fenced.previous_less(bounds, bound_depth)
    hi = fenced.next_less(bounds, bound_depth) - 1

    keys = np.concatenate((lo * width + hi, [n - 1]))
    node_keys, owner = np.unique(keys, return_inverse=True)
    owner = owner.reshape(-1)
    num_nodes = len(node_keys)
    lb_a = node_keys // width
    rb_a = node_keys % width
    depth_a = np.zeros(num_nodes, dtype=np.int64)
    depth_a[owner[:-1]] = bound_depth
    owner_of_boundary = np.zeros(n, dtype=np.int64)
    owner_of_boundary[1:] = owner[:-1]

    c_owner = np.concatenate((np.arange(num_nodes, dtype=np.int64), owner[:-1]))
    c_start = np.concatenate((lb_a, bounds))
    order = np.lexsort((c_start, c_owner))
    c_owner, c_start = c_owner[order], c_start[order]
    offset_a = np.concatenate(([0], np.cumsum(np.bincount(c_owner, minlength=num_nodes))))
    c_end = np.empty_like(c_start)
    c_end[:-1] = c_start[1:] - 1
    c_end[offset_a[1:] - 1] = rb_a
    c_char = idx.text.codes[sa0[c_start] + depth_a[c_owner]].astype(np.int64)

    c_min = idx.sa_rmq.min(c_start, c_end) + 1
    min_start = idx.sa_rmq.min(lb_a, rb_a) + 1

    found = np.minimum(np.searchsorted(node_keys, c_start * width + c_end), num_nodes - 1)
    c_node = np.where(c_start == c_end, -1, found)

    slink = np.full(num_nodes, -1, dtype=np.int64)
    inner = np.nonzero(depth_a > 0)[0]
    if len(inner):
        rank0 = idx.rank[1:]
        p = rank0[sa0[lb_a[inner]] + 1]
        q = rank0[sa0[rb_a[inner]] + 1]
        m = idx.lcp_rmq.argmin(p + 1, q)
        slink[inner] = owner_of_boundary[m]

    return TreeView(
        depth=depth_a,
        lb=lb_a,
        rb=rb_a,
        slink=slink,
        min_start=min_start,
        child_offset=offset_a,
        child_owner=c_owner,
        child_char=c_char,
        child_lb=c_start,
        child_rb=c_end,
        child_min=c_min,
        child_node=c_node,
        root=int(owner[-1]),
    )


def _or_by_group(groups: np.ndarray, masks: np.ndarray, size: int) -> np.ndarray:
    """Bitwise OR of mask rows sharing a group id; groups without rows stay 0."""
    out = np.zeros((size, masks.shape[1]), dtype=np.uint64)
    if len(groups) == 0:
        return out
    order = np.argsort(groups, kind="stable")
    ids, starts = np.unique(groups[order], return_index=True)
    out[ids] = np.bitwise_or.reduceat(masks[order], starts, axis=0)
    return out


def compute_sre(idx: SuffixIndex, w: Optional[Text] = None) -> SreTable:
    """Super-maximal right extensions of the indexed text, sorted by ext_pos.

    path(v)c is a right extension for every branching node v and child
    character c. It is super-maximal iff no node u with path(u) = a path(v),
    i.e. no child of v in the suffix-link tree, also branches on c.
    """
    tree = idx.tree
    chars = tree.child_char
    word = chars >> 6
    shift = (chars & 63).astype(np.uint64)
    bit = np.left_shift(np.uint64(1), shift)

    # 256 bits per node as four uint64 words
    child_bits = np.zeros((len(chars), 4), dtype=np.uint64)
    child_bits[np.arange(len(chars)), word] = bit
    branching = _or_by_group(tree.child_owner, child_bits, tree.num_nodes)

    linked = np.nonzero(tree.slink >= 0)[0]
    extended = _or_by_group(tree.slink[linked], branching[linked], tree.num_nodes)

    blocked = (extended[tree.child_owner, word] >> shift) & np.uint64(1)
    # a lone root (text "\x00") has one child and no right extension
    branches = np.diff(tree.child_offset)[tree.child_owner] >= 2
    keep = np.nonzero((blocked == 0) & branches)[0]

    x_len = tree.depth[tree.child_owner[keep]]
    ext_pos = tree.child_min[keep] + x_len
    order = np.argsort(ext_pos)
    return SreTable(ext_pos=ext_pos[order], x_len=x_len[order], ext_char=chars[keep][order])


def chi(w: Text) -> int:
    return len(compute_sre(build_index(w), w))


def smallest_suffixient_set(w: Text, idx: Optional[SuffixIndex] = None) -> set[int]:
    idx = idx or build_index(w)
    return set(compute_sre(idx, w).ext_pos.tolist())


def bwt(idx: SuffixIndex) -> bytes:
    """BWT[r] = w[sa[r] - 1], wrapping to w[n] for the suffix at position 1."""
    return idx.text.codes[idx.sa0 - 1].tobytes()


def bwt_run_count(idx: SuffixIndex, w: Optional[Text] = None) -> int:
    last = idx.text.codes[idx.sa0 - 1]
    return 1 + int(np.count_nonzero(last[1:] != last[:-1]))


def lpf_array(idx: SuffixIndex) -> tuple[np.ndarray, np.ndarray]:
    """Longest previous factor per position.

    Returns ``(lengths, sources)`` indexed by 0-based position: the longest
    prefix of the suffix at i that also starts strictly left of i, and the
    1-based start of such an occurrence (0 when the length is 0). Candidates
    are the nearest SA neighbours with a smaller text position.
    """
    n = idx.n
    ranks = np.arange(n, dtype=np.int64)
    psv = idx.sa_rmq.previous_less(ranks, idx.sa0)
    nsv = idx.sa_rmq.next_less(ranks, idx.sa0)
    nsv = np.where(nsv < n, nsv, -1)

    left_len = np.zeros(n, dtype=np.int64)
    right_len = np.zeros(n, dtype=np.int64)
    has_left = psv >= 0
    has_right = nsv >= 0
    if has_left.any():
        left_len[has_left] = idx.lcp_rmq.min(psv[has_left] + 1, ranks[has_left])
    if has_right.any():
        right_len[has_right] = idx.lcp_rmq.min(ranks[has_right] + 1, nsv[has_right])

    left_src = np.where(has_left, idx.sa[np.maximum(psv, 0)], 0)
    right_src = np.where(has_right, idx.sa[np.maximum(nsv, 0)], 0)
    use_right = (right_len > left_len) | ((right_len == left_len) & has_right & (right_src < left_src))
    best_len = np.where(use_right, right_len, left_len)
    best_src = np.where(best_len > 0, np.where(use_right, right_src, left_src), 0)

    lengths = np.empty(n, dtype=np.int64)
    sources = np.empty(n, dtype=np.int64)
    lengths[idx.sa0] = best_len
    sources[idx.sa0] = best_src
    return lengths, sources


def greedy_lz_count(w: Text, idx: Optional[SuffixIndex] = None) -> int:
    """Factor count of the greedy parse with sources strictly to the left."""
    idx = idx or build_index(w)
    lengths = lpf_array(idx)[0].tolist()
    i = count = 0
    while i < w.n:
        i += max(1, lengths[i])
        count += 1
    return count
