"""Sparse-table range minimum queries, vectorised over batches of ranges."""

from typing import Union

import numpy as np

ArrayLike = Union[np.ndarray, list, int]


class RangeMin:
    """Leftmost argmin over inclusive ranges of a fixed array.

    Level k stores, for every start i, the argmin of ``values[i : i + 2**k]``.
    A query [lo, hi] is answered from two overlapping power-of-two blocks.
    """

    def __init__(self, values: np.ndarray):
        self.values = np.asarray(values)
        n = len(self.values)
        self._levels = [np.arange(n, dtype=np.int32)]
        span = 1
        while 2 * span <= n:
            prev = self._levels[-1]
            left = prev[: n - 2 * span + 1]
            right = prev[span : n - span + 1]
            self._levels.append(np.where(self.values[right] < self.values[left], right, left))
            span *= 2

    def __len__(self) -> int:
        return len(self.values)

    def argmin(self, lo: ArrayLike, hi: ArrayLike) -> np.ndarray:
        lo = np.atleast_1d(np.asarray(lo, dtype=np.int64))
        hi = np.atleast_1d(np.asarray(hi, dtype=np.int64))
        if np.any(hi < lo):
            raise ValueError("empty range in range-minimum query")
        level = np.frexp((hi - lo + 1).astype(np.float64))[1] - 1
        out = np.empty(len(lo), dtype=np.int64)
        for k in np.unique(level):
            mask = level == k
            table = self._levels[k]
            a = table[lo[mask]]
            b = table[hi[mask] - (1 << int(k)) + 1]
            out[mask] = np.where(self.values[b] < self.values[a], b, a)
        return out

    def min(self, lo: ArrayLike, hi: ArrayLike) -> np.ndarray:
        return self.values[self.argmin(lo, hi)]

    def min_at(self, lo: int, hi: int) -> int:
        return int(self.min(lo, hi)[0])

    def previous_less(self, pos: ArrayLike, bound: ArrayLike) -> np.ndarray:
        """Largest j < pos with ``values[j] < bound``, or -1.

        Walks left from ``pos`` in power-of-two blocks whose minimum is still
        at least ``bound``, largest block first.
        """
        pos = np.array(np.atleast_1d(pos), dtype=np.int64)
        bound = np.atleast_1d(np.asarray(bound))
        for k in range(len(self._levels) - 1, -1, -1):
            start = pos - (1 << k)
            fits = start >= 0
            block_min = self.values[self._levels[k][np.maximum(start, 0)]]
            pos = np.where(fits & (block_min >= bound), start, pos)
        return pos - 1

    def next_less(self, pos: ArrayLike, bound: ArrayLike) -> np.ndarray:
        """Smallest j > pos with ``values[j] < bound``, or ``len(values)``."""
        end = np.array(np.atleast_1d(pos), dtype=np.int64) + 1
        bound = np.atleast_1d(np.asarray(bound))
        n = len(self.values)
        for k in range(len(self._levels) - 1, -1, -1):
            span = 1 << k
            table = self._levels[k]
            fits = end + span <= n
            block_min = self.values[table[np.minimum(end, len(table) - 1)]]
            end = np.where(fits & (block_min >= bound), end + span, end)
        return end
