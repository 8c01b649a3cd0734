"""Displacement operators and the two Galois connections they induce.

For an equivalence alpha on Q:

* ``dis_alpha``     -- the normal closure in LMlt(Q) of {L_x L_y^-1 : x alpha y}
* ``dis_sup_alpha`` -- the elements of Dis(Q) that fix every alpha-block

and for a subgroup N of LMlt(Q):

* ``orbit_eq``  -- x ~ y iff y is in the N-orbit of x
* ``cayley_eq`` -- x ~ y iff L_x L_y^-1 lies in N

``dis_sup_alpha`` deliberately works inside Dis(Q) rather than all of
LMlt(Q); that makes it the kernel of the induced action on blocks and keeps
it admissible.  The LMlt-wide set is available as ``dis_sup_alpha_lmlt``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .config import limits
from .congr import all_congruences, cayley_kernel, is_congruence, quotient_congruence
from .errors import InconsistencyError
from .lquasi import LeftQuasigroup, all_subalgebras, quotient, subalgebra
from .partition import Partition, all_equivalences, random_equivalence
from .perm import (
    PermGroup, all_normal_subgroups, compose, image_group, is_transitive,
    normal_closure, orbits,
)

EXHAUSTIVE_EQUIV_ORDER = 4
RANDOM_EQUIVALENCES = 200


# -- operators ---------------------------------------------------------------

def dis_alpha(Q: LeftQuasigroup, alpha: Partition) -> PermGroup:
    def build():
        D = Q.ldiv_table
        # L_x L_r^-1 with r the block minimum spans every L_x L_y^-1, x alpha y
        seed = [compose(Q.table[x], D[r]) for x, r in enumerate(alpha.labels) if x != r]
        return normal_closure(Q.lmlt, seed)
    return Q.memo(("dis_low", alpha), build)


def dis_sup_alpha(Q: LeftQuasigroup, alpha: Partition) -> PermGroup:
    def build():
        lab = alpha.labels
        rng = range(Q.n)
        elems = frozenset(h for h in Q.dis.elements if all(lab[h[x]] == lab[x] for x in rng))
        return PermGroup(Q.n, _gens_for(elems), elems)
    return Q.memo(("dis_high", alpha), build)


def dis_sup_alpha_lmlt(Q: LeftQuasigroup, alpha: Partition) -> PermGroup:
    """Block-fixing elements of the whole of LMlt(Q) (diagnostic reading)."""
    lab = alpha.labels
    rng = range(Q.n)
    elems = frozenset(h for h in Q.lmlt.elements if all(lab[h[x]] == lab[x] for x in rng))
    return PermGroup(Q.n, _gens_for(elems), elems)


def _gens_for(elems: frozenset):
    """A small generating set for a materialized group (greedy)."""
    from .perm import _bfs
    degree = len(next(iter(elems)))
    gens: list = []
    span = frozenset([tuple(range(degree))])
    for h in sorted(elems):
        if h not in span:
            gens.append(h)
            span = _bfs(gens, degree, start=span)
            if len(span) == len(elems):
                break
    return gens


def orbit_eq(Q: LeftQuasigroup, N: PermGroup) -> Partition:
    return orbits(N)


def cayley_eq(Q: LeftQuasigroup, N: PermGroup) -> Partition:
    def build():
        elems = N.elements
        reps: list[int] = []
        labels = []
        for x in range(Q.n):
            Lx = Q.table[x]
            for r in reps:
                if compose(Lx, Q.ldiv_table[r]) in elems:
                    labels.append(r)
                    break
            else:
                reps.append(x)
                labels.append(x)
        return Partition(labels)
    return Q.memo(("cay", N), build)


def pi_image(Q: LeftQuasigroup, alpha: Partition, N: PermGroup) -> PermGroup:
    """Image of N under the induced action on the blocks of the congruence alpha."""
    _, bmap = quotient(Q, alpha)
    return image_group(N, bmap, alpha.num_blocks)


# -- admissible subgroups ----------------------------------------------------

def normal_subgroups(Q: LeftQuasigroup) -> list[PermGroup]:
    return Q.memo("normal", lambda: all_normal_subgroups(Q.lmlt))


def normal_subgroups_in_dis(Q: LeftQuasigroup) -> list[PermGroup]:
    def build():
        if "normal" in Q._memo:
            dis = Q.dis.elements
            return [N for N in Q._memo["normal"] if N.elements <= dis]
        return all_normal_subgroups(Q.lmlt, within=Q.dis)
    return Q.memo("normal_dis", build)


def admissibles(Q: LeftQuasigroup) -> list[PermGroup]:
    """Norm'(Q): normal subgroups N <= Dis(Q) of LMlt(Q) with O_N <= c_N."""
    def build():
        out = []
        for N in normal_subgroups_in_dis(Q):
            by_orbits = orbit_eq(Q, N).leq(cayley_eq(Q, N))
            by_displacement = dis_alpha(Q, orbit_eq(Q, N)) <= N
            if by_orbits != by_displacement:
                raise InconsistencyError(
                    f"admissibility characterizations disagree on a subgroup of order {N.order}")
            if by_orbits:
                out.append(N)
        return out
    return Q.memo("admissibles", build)


# -- Galois connections ------------------------------------------------------

def adjunction_orbits_violations(Q: LeftQuasigroup):
    """Pairs (alpha, N) breaking  O_N <= alpha  <=>  N <= Dis^alpha."""
    for alpha in all_congruences(Q):
        high = dis_sup_alpha(Q, alpha)
        for N in admissibles(Q):
            if orbit_eq(Q, N).leq(alpha) != (N <= high):
                yield alpha, N


def check_adjunction_orbits(Q: LeftQuasigroup) -> bool:
    return next(adjunction_orbits_violations(Q), None) is None


def sampled_equivalences(Q: LeftQuasigroup, seed: int | None = None) -> list[Partition]:
    """All equivalences for small Q, else Con(Q) plus seeded random ones."""
    if Q.n <= EXHAUSTIVE_EQUIV_ORDER:
        return list(all_equivalences(Q.n))
    rng = random.Random(limits.seed if seed is None else seed)
    out = dict.fromkeys(all_congruences(Q))
    for _ in range(RANDOM_EQUIVALENCES):
        out.setdefault(random_equivalence(Q.n, rng))
    return list(out)


def adjunction_subgroups_violations(Q: LeftQuasigroup, seed: int | None = None):
    """Pairs (alpha, N) breaking  Dis_alpha <= N  <=>  alpha <= c_N."""
    normals = normal_subgroups(Q)
    cays = [cayley_eq(Q, N) for N in normals]
    for alpha in sampled_equivalences(Q, seed):
        low = dis_alpha(Q, alpha)
        for N, c in zip(normals, cays):
            if (low <= N) != alpha.leq(c):
                yield alpha, N


def check_adjunction_subgroups(Q: LeftQuasigroup, seed: int | None = None) -> bool:
    return next(adjunction_subgroups_violations(Q, seed), None) is None


# -- classification ----------------------------------------------------------

def is_cdos(Q: LeftQuasigroup) -> bool:
    """(Dis^*, O_*) are mutually inverse between Con(Q) and Norm'(Q)."""
    def build():
        for alpha in all_congruences(Q):
            if orbit_eq(Q, dis_sup_alpha(Q, alpha)) != alpha:
                return False
        for N in admissibles(Q):
            o = orbit_eq(Q, N)
            if not is_congruence(Q, o) or dis_sup_alpha(Q, o) != N:
                return False
        return True
    return Q.memo("cdos", build)


def is_cdsg(Q: LeftQuasigroup) -> bool:
    """(Dis_*, c_*) are mutually inverse between Con(Q) and Norm'(Q)."""
    def build():
        for alpha in all_congruences(Q):
            if cayley_eq(Q, dis_alpha(Q, alpha)) != alpha:
                return False
        for N in admissibles(Q):
            c = cayley_eq(Q, N)
            # c_N may fail to be a congruence; then the maps cannot be inverse
            if not is_congruence(Q, c) or dis_alpha(Q, c) != N:
                return False
        return True
    return Q.memo("cdsg", build)


def is_sharp(Q: LeftQuasigroup) -> bool:
    """O_{Dis_alpha} = O_{Dis^alpha} = alpha for every congruence alpha."""
    def build():
        return all(
            orbit_eq(Q, dis_alpha(Q, a)) == a and orbit_eq(Q, dis_sup_alpha(Q, a)) == a
            for a in all_congruences(Q)
        )
    return Q.memo("sharp", build)


def is_sharp_by_definition(Q: LeftQuasigroup) -> bool:
    """No pair alpha < beta of congruences with beta/alpha below the Cayley kernel of Q/alpha."""
    cons = all_congruences(Q)
    for alpha in cons:
        Qa, _ = quotient(Q, alpha)
        lam = cayley_kernel(Qa)
        for beta in cons:
            if alpha != beta and alpha.leq(beta) and quotient_congruence(alpha, beta).leq(lam):
                return False
    return True


def operators_coincide(Q: LeftQuasigroup) -> bool:
    """c_* = O_* on Norm'(Q) and Dis_* = Dis^* on Con(Q)."""
    return all(cayley_eq(Q, N) == orbit_eq(Q, N) for N in admissibles(Q)) and all(
        dis_alpha(Q, a) == dis_sup_alpha(Q, a) for a in all_congruences(Q)
    )


def all_quotients_faithful(Q: LeftQuasigroup) -> bool:
    return all(cayley_kernel(quotient(Q, a)[0]).is_discrete() for a in all_congruences(Q))


@dataclass(frozen=True)
class ConnectFlags:
    connected: bool
    connected_by_dis: bool
    superconnected: bool
    semiregular: bool


def is_semiregular(Q: LeftQuasigroup) -> bool:
    ident = tuple(range(Q.n))
    return not any(h != ident and h[x] == x for h in Q.dis.elements for x in range(Q.n))


def is_superconnected(Q: LeftQuasigroup) -> bool:
    def build():
        for S in all_subalgebras(Q):
            if len(S) > 1:
                sub, _ = subalgebra(Q, S)
                if not is_transitive(sub.lmlt):
                    return False
        return True
    return Q.memo("superconnected", build)


def connect_flags(Q: LeftQuasigroup) -> ConnectFlags:
    return ConnectFlags(
        connected=is_transitive(Q.lmlt),
        connected_by_dis=is_transitive(Q.dis),
        superconnected=is_superconnected(Q),
        semiregular=is_semiregular(Q),
    )


# -- report ------------------------------------------------------------------

@dataclass
class GaloisReport:
    congruences: list
    admissibles: list
    dis_low: dict = field(default_factory=dict)
    dis_high: dict = field(default_factory=dict)
    orb: dict = field(default_factory=dict)
    cay: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)


def full_report(Q: LeftQuasigroup) -> GaloisReport:
    cons = all_congruences(Q)
    adm = admissibles(Q)
    rep = GaloisReport(congruences=cons, admissibles=adm)
    for a in cons:
        rep.dis_low[a] = dis_alpha(Q, a)
        rep.dis_high[a] = dis_sup_alpha(Q, a)
    for N in adm:
        rep.orb[N] = orbit_eq(Q, N)
        rep.cay[N] = cayley_eq(Q, N)
    lam = cayley_kernel(Q)
    cf = connect_flags(Q)
    preds = Q.predicates
    rep.flags = {
        "cdos": is_cdos(Q),
        "cdsg": is_cdsg(Q),
        "sharp": is_sharp(Q),
        "faithful": lam.is_discrete(),
        "cayley": is_congruence(Q, lam),
        "connected": cf.connected,
        "connected_by_dis": cf.connected_by_dis,
        "superconnected": cf.superconnected,
        "semiregular": cf.semiregular,
        "operators_coincide": operators_coincide(Q),
        **preds.as_dict(),
    }
    _check_report(Q, rep)
    return rep


def _check_report(Q: LeftQuasigroup, rep: GaloisReport):
    def fail(msg):
        raise InconsistencyError(f"{msg} for table {[list(r) for r in Q.table]}")

    for a in rep.congruences:
        lo, hi = rep.dis_low[a], rep.dis_high[a]
        if not lo <= hi:
            fail(f"Dis_alpha not below Dis^alpha at {a}")
        chain = [orbit_eq(Q, lo), orbit_eq(Q, hi), a, cayley_eq(Q, lo), cayley_eq(Q, hi)]
        if not all(x.leq(y) for x, y in zip(chain, chain[1:])):
            fail(f"operator chain broken at {a}")
    for N in rep.admissibles:
        if not rep.orb[N].leq(rep.cay[N]):
            fail("orbit relation not below Cayley relation for an admissible subgroup")
