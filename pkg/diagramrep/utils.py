"""Small helpers: subset bitmasks, disjoint sets and counting sequences"""

from functools import lru_cache
from typing import Dict, Iterable, List


# Subsets of [n] are bitmasks with element i on bit i-1.
def mask_of(elements: Iterable[int]) -> int:
    """Encode a collection of positive integers as a bitmask."""
    mask = 0
    for x in elements:
        if x < 1:
            raise ValueError(f"Subset elements must be positive, got {x}")
        mask |= 1 << (x - 1)
    return mask


def members(mask: int) -> List[int]:
    """Decode a bitmask into its sorted list of elements."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_mask(n) & ~mask


def format_subset(mask: int) -> str:
    """Render a bitmask as `{1,3}`."""
    return "{" + ",".join(str(x) for x in members(mask)) + "}"


class DisjointSet:
    """Union-find with path compression and union by rank."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1

    def union_chain(self, nodes: List[int]) -> None:
        """Join a whole group by a spanning path."""
        for u, v in zip(nodes, nodes[1:]):
            self.union(u, v)

    def groups(self) -> Dict[int, List[int]]:
        """Map each root to the sorted members of its class."""
        out: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return out


# Counting sequences, used as independent oracles for enumeration sizes.
@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def double_factorial_matchings(k: int) -> int:
    """Number of perfect matchings on k points: (k-1)!! for even k, else 0."""
    if k % 2:
        return 0
    out = 1
    for x in range(k - 1, 0, -2):
        out *= x
    return out


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """Fibonacci numbers with f_0 = f_1 = 1."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a
