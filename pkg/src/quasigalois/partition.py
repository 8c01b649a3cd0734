"""Equivalence relations on {0..n-1} in canonical form.

A partition is stored as the tuple of block labels, where the label of a
point is the smallest element of its block.  Two partitions are equal
exactly when their label tuples are equal.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; return True if they were distinct."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        # the smaller root wins so labels come out canonical
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def labels(self) -> tuple[int, ...]:
        return tuple(self.find(i) for i in range(len(self.parent)))


class Partition:
    __slots__ = ("labels", "_hash")

    def __init__(self, labels: Sequence[int]):
        labels = tuple(labels)
        first = {}
        canon = []
        for i, lab in enumerate(labels):
            canon.append(first.setdefault(lab, i))
        self.labels = tuple(canon)
        self._hash = hash(self.labels)

    @classmethod
    def discrete(cls, n: int) -> Partition:
        return cls(range(n))

    @classmethod
    def full(cls, n: int) -> Partition:
        return cls([0] * n)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> Partition:
        labels = list(range(n))
        seen = set()
        for block in blocks:
            block = sorted(block)
            if not block:
                continue
            for x in block:
                if x in seen or not 0 <= x < n:
                    raise ValueError(f"invalid or repeated point {x} in blocks")
                seen.add(x)
                labels[x] = block[0]
        return cls(labels)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Partition:
        uf = UnionFind(n)
        for x, y in pairs:
            uf.union(x, y)
        return cls(uf.labels())

    @property
    def n(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.labels == other.labels

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inner = ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks())
        return f"Partition({inner})"

    def sort_key(self):
        return (-self.num_blocks, self.labels)

    def blocks(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(i)
        return [tuple(b) for b in out.values()]

    @property
    def num_blocks(self) -> int:
        return len(set(self.labels))

    def block_index(self) -> tuple[int, ...]:
        """Map each point to the index of its block, blocks ordered by minimum."""
        index: dict[int, int] = {}
        return tuple(index.setdefault(lab, len(index)) for lab in self.labels)

    def related(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All ordered pairs (x, y) with x related to y, including x == y."""
        for block in self.blocks():
            for x in block:
                for y in block:
                    yield x, y

    def num_pairs(self) -> int:
        return sum(len(b) ** 2 for b in self.blocks())

    def is_discrete(self) -> bool:
        return all(lab == i for i, lab in enumerate(self.labels))

    def is_full(self) -> bool:
        return all(lab == 0 for lab in self.labels)

    def leq(self, other: Partition) -> bool:
        """True if every block of self lies inside a block of other."""
        lab = other.labels
        return all(lab[i] == lab[self.labels[i]] for i in range(self.n))

    __le__ = leq

    def __lt__(self, other):
        return self != other and self.leq(other)

    def meet(self, other: Partition) -> Partition:
        return Partition(list(zip(self.labels, other.labels)))

    def join(self, other: Partition) -> Partition:
        """Join in the lattice of equivalence relations (transitive closure)."""
        uf = UnionFind(self.n)
        for i in range(self.n):
            uf.union(i, self.labels[i])
            uf.union(i, other.labels[i])
        return Partition(uf.labels())

    def restrict(self, points: Sequence[int]) -> Partition:
        """The induced equivalence on the listed points, relabeled 0..k-1."""
        return Partition([self.labels[p] for p in points])


def all_equivalences(n: int) -> Iterator[Partition]:
    """Every equivalence relation on n points, via restricted growth strings."""
    if n == 0:
        yield Partition(())
        return
    labels = [0] * n

    def rec(i, top):
        if i == n:
            yield Partition(labels)
            return
        for lab in range(top + 2):
            labels[i] = lab
            yield from rec(i + 1, max(top, lab))

    yield from rec(1, 0)


def random_equivalence(n: int, rng) -> Partition:
    k = rng.randint(1, n)
    return Partition([rng.randrange(k) for _ in range(n)])


def principal_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
