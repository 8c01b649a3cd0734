"""Backtracking enumeration of small left quasigroups.

A left quasigroup of order n is a choice of n permutations (its rows), so
there are (n!)^n labeled tables.  Rows are chosen in order; the idempotent
filter restricts row x to permutations fixing x, the rack filter rejects a
partial table as soon as an instance of x(yz) = (xy)(xz) among assigned rows
fails, and the latin filter keeps columns injective.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator

from ..errors import CapacityError
from ..lquasi import LeftQuasigroup, canonical_table

FILTERS = ("idempotent", "rack", "quandle", "latin")
MAX_UNFILTERED_ORDER = 5
MAX_PRUNED_ORDER = 8


def _normalize_filters(filters: Iterable[str]) -> frozenset:
    fs = set(filters)
    unknown = fs - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filter(s): {', '.join(sorted(unknown))}; choose from {', '.join(FILTERS)}")
    if "quandle" in fs:
        fs |= {"idempotent", "rack"}
    return frozenset(fs)


def enumerate_structures(order: int, filters: Iterable[str] = (), isomorph_reject: bool = False,
                         ) -> Iterator[LeftQuasigroup]:
    """Every left quasigroup of the given order passing the filters.

    Labeled tables are produced in lexicographic order of their rows.  With
    ``isomorph_reject`` only the first table of each isomorphism class is kept.
    """
    fs = _normalize_filters(filters)
    if order < 1:
        raise ValueError("order must be positive")
    cap = MAX_PRUNED_ORDER if {"idempotent", "rack"} <= fs else MAX_UNFILTERED_ORDER
    if order > cap:
        raise CapacityError("enumeration order", cap, stage="enumerate")
    seen = set()
    for rows in _tables(order, fs):
        Q = LeftQuasigroup(rows)
        if isomorph_reject:
            key = canonical_table(Q)
            if key in seen:
                continue
            seen.add(key)
        yield Q


def _tables(n: int, fs: frozenset) -> Iterator[list]:
    perms = list(permutations(range(n)))
    idem = "idempotent" in fs
    rack = "rack" in fs
    latin = "latin" in fs
    choices = [[p for p in perms if not idem or p[x] == x] for x in range(n)]
    rows: list = []
    cols = [set() for _ in range(n)]

    def rack_ok(x):
        # every instance whose three rows a, b, a*b are assigned and involve x
        for a in range(x + 1):
            Ra = rows[a]
            for b in range(x + 1):
                c = Ra[b]
                if c > x or x not in (a, b, c):
                    continue
                Rb, Rc = rows[b], rows[c]
                for y in range(n):
                    if Ra[Rb[y]] != Rc[Ra[y]]:
                        return False
        return True

    def rec(x):
        if x == n:
            yield [list(r) for r in rows]
            return
        for p in choices[x]:
            if latin and any(p[y] in cols[y] for y in range(n)):
                continue
            rows.append(p)
            if not rack or rack_ok(x):
                if latin:
                    for y in range(n):
                        cols[y].add(p[y])
                yield from rec(x + 1)
                if latin:
                    for y in range(n):
                        cols[y].discard(p[y])
            rows.pop()

    yield from rec(0)


def count_structures(order: int, filters: Iterable[str] = (), isomorph_reject: bool = False) -> int:
    return sum(1 for _ in enumerate_structures(order, filters, isomorph_reject))
