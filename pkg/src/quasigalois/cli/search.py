"""Search for a quandle with CDOs that lacks CDSg.

Such a quandle is not sharp, and the search is restricted to non-faithful
quandles (nontrivial Cayley kernel), which are never sharp.  CDOs forces
connectivity by Dis(Q), so the Cayley-kernel blocks all have the same size s
and Q/lambda is a connected quandle of order n/s.  Every candidate is
therefore a lift of a connected quandle P of order m = n/s: points are pairs
(i, r) with i in P and r < s, and L_(i,r) depends only on i.  L_i sends
block j onto block i*j by some bijection and fixes block i pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from ..displ import is_cdos, is_sharp
from ..lquasi import LeftQuasigroup
from ..perm import compose, inverse, is_transitive
from .enumeration import enumerate_structures

DEFAULT_BUDGET = 1_000_000


@dataclass
class SearchResult:
    status: str                     # "found", "none" or "budget-exhausted"
    quandle: LeftQuasigroup | None
    examined: int
    budget: int


def lifts(P: LeftQuasigroup, s: int) -> Iterator[LeftQuasigroup]:
    """Quandles on P x {0..s-1} with L_(i,r) = L_i covering the rows of P."""
    m = P.n
    n = m * s
    offsets = list(permutations(range(s)))
    ident = tuple(range(s))

    def row_choices(i):
        others = [j for j in range(m) if j != i]
        for pick in product(offsets, repeat=len(others)):
            sigma = dict(zip(others, pick))
            sigma[i] = ident
            yield tuple(P.table[i][j] * s + sigma[j][r] for j in range(m) for r in range(s))

    L: list = []

    def consistent(k):
        # L_i L_j L_i^-1 == L_{i*j} whenever all three are assigned and k is involved
        for i in range(k + 1):
            inv_i = inverse(L[i])
            for j in range(k + 1):
                c = P.table[i][j]
                if c <= k and k in (i, j, c):
                    if compose(L[i], compose(L[j], inv_i)) != L[c]:
                        return False
        return True

    def rec(k):
        if k == m:
            yield LeftQuasigroup([L[p // s] for p in range(n)])
            return
        for row in row_choices(k):
            L.append(row)
            if consistent(k):
                yield from rec(k + 1)
            L.pop()

    yield from rec(0)


def search_cdos_not_cdsg(order: int, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """First non-faithful quandle of the given order with CDOs (hence not CDSg)."""
    examined = 0
    for m in range(1, order):
        if order % m:
            continue
        bases = [P for P in enumerate_structures(m, ["quandle"], isomorph_reject=True)
                 if is_transitive(P.lmlt)]
        for P in bases:
            for Q in lifts(P, order // m):
                if examined >= budget:
                    return SearchResult("budget-exhausted", None, examined, budget)
                examined += 1
                if is_transitive(Q.dis) and is_cdos(Q) and not is_sharp(Q):
                    return SearchResult("found", Q, examined, budget)
    return SearchResult("none", None, examined, budget)
