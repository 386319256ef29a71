"""Disjoint-set forest over the integers 0..size-1."""


class DisjointSet:
    """Union by rank with path halving.

    Examples:
        >>> ds = DisjointSet(3)
        >>> ds.union(0, 2)
        True
        >>> ds.find(0) == ds.find(2)
        True
        >>> ds.union(2, 0)
        False
    """

    __slots__ = ("parent", "rank")

    def __init__(self, size: int):
        if size < 0:
            raise ValueError(f"size must be non-negative, got {size}")
        self.parent = list(range(size))
        self.rank = [0] * size

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of ``x`` and ``y``; return False if already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        rank = self.rank
        if rank[rx] < rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if rank[rx] == rank[ry]:
            rank[rx] += 1
        return True

    def labels(self) -> list[int]:
        """Label every element with the smallest element of its set."""
        smallest: dict[int, int] = {}
        out = []
        for x in range(len(self.parent)):
            root = self.find(x)
            out.append(smallest.setdefault(root, x))
        return out
