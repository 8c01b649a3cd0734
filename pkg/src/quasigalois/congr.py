"""Congruences: generation, the full lattice Con(Q), and the Cayley kernel."""

from __future__ import annotations

from typing import Iterable

from .config import limits
from .errors import CapacityError
from .lquasi import LeftQuasigroup, compatible
from .partition import Partition, UnionFind, all_equivalences

__all__ = [
    "Partition", "is_congruence", "congruence_generated", "all_congruences",
    "meet", "join_c", "leq", "quotient_congruence", "lift_congruence",
    "cayley_kernel", "is_cayley", "is_faithful", "bottom", "top",
]


def bottom(Q: LeftQuasigroup) -> Partition:
    return Partition.discrete(Q.n)


def top(Q: LeftQuasigroup) -> Partition:
    return Partition.full(Q.n)


def is_congruence(Q: LeftQuasigroup, alpha: Partition) -> bool:
    return compatible(Q, alpha)


def congruence_generated(Q: LeftQuasigroup, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Least congruence containing the given pairs (union-find fixpoint)."""
    n = Q.n
    T, D = Q.table, Q.ldiv_table
    uf = UnionFind(n)
    work = []
    for a, b in pairs:
        if uf.union(a, b):
            work.append((a, b))
    # translating a spanning set of merged pairs spans the translated relation
    while work:
        p, q = work.pop()
        Tp, Tq, Dp, Dq = T[p], T[q], D[p], D[q]
        for c in range(n):
            Tc, Dc = T[c], D[c]
            for u, v in ((Tc[p], Tc[q]), (Tp[c], Tq[c]), (Dc[p], Dc[q]), (Dp[c], Dq[c])):
                if uf.union(u, v):
                    work.append((u, v))
    return Partition(uf.labels())


def _spanning_pairs(alpha: Partition):
    return ((i, lab) for i, lab in enumerate(alpha.labels) if i != lab)


def principal_congruences(Q: LeftQuasigroup) -> list[Partition]:
    def build():
        out = {congruence_generated(Q, [(a, b)]) for a in range(Q.n) for b in range(a + 1, Q.n)}
        return sorted(out, key=Partition.sort_key)
    return Q.memo("principal", build)


def all_congruences(Q: LeftQuasigroup) -> list[Partition]:
    """Con(Q): 0_Q together with every join of principal congruences.

    Sorted finest first, so 0_Q is the first entry and 1_Q the last.
    """
    def build():
        cap = limits.max_congruences
        principals = principal_congruences(Q)
        found = {Partition.discrete(Q.n)}
        frontier = list(found)
        while frontier:
            nxt = []
            for a in frontier:
                for p in principals:
                    if p.leq(a):
                        continue
                    j = a.join(p)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
                        if len(found) > cap:
                            raise CapacityError("number of congruences", cap, stage="congruence lattice")
            frontier = nxt
        return sorted(found, key=Partition.sort_key)
    return Q.memo("congruences", build)


def all_congruences_brute(Q: LeftQuasigroup) -> list[Partition]:
    """Reference enumeration: filter every equivalence relation."""
    return sorted((a for a in all_equivalences(Q.n) if is_congruence(Q, a)), key=Partition.sort_key)


def meet(alpha: Partition, beta: Partition) -> Partition:
    return alpha.meet(beta)


def join_c(Q: LeftQuasigroup, alpha: Partition, beta: Partition) -> Partition:
    """Join in Con(Q): transitive closure of the union, then congruence closure."""
    pairs = list(_spanning_pairs(alpha)) + list(_spanning_pairs(beta))
    return congruence_generated(Q, pairs)


def leq(alpha: Partition, beta: Partition) -> bool:
    return alpha.leq(beta)


def quotient_congruence(alpha: Partition, beta: Partition) -> Partition:
    """beta/alpha as a partition of the blocks of alpha."""
    if not alpha.leq(beta):
        raise ValueError(f"{alpha} is not below {beta}")
    reps = [b[0] for b in alpha.blocks()]
    return Partition([beta.labels[r] for r in reps])


def lift_congruence(Q: LeftQuasigroup, alpha: Partition, gamma: Partition) -> Partition:
    """The congruence of Q whose quotient by alpha is gamma."""
    bmap = alpha.block_index()
    if gamma.n != alpha.num_blocks:
        raise ValueError("gamma must live on the blocks of alpha")
    return Partition([gamma.labels[bmap[x]] for x in range(Q.n)])


def cayley_kernel(Q: LeftQuasigroup) -> Partition:
    """x ~ y iff L_x == L_y."""
    first: dict = {}
    return Partition([first.setdefault(row, x) for x, row in enumerate(Q.table)])


def is_cayley(Q: LeftQuasigroup) -> bool:
    return is_congruence(Q, cayley_kernel(Q))


def is_faithful(Q: LeftQuasigroup) -> bool:
    return cayley_kernel(Q).is_discrete()
