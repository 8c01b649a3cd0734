"""Named laws checked by ``verify-theorems``.

Each law takes an ``Instance`` and returns a list of failure records; an
empty list means the law holds on that instance.  A law raises ``Skip`` when
the instance is outside its affordable range, and ``PreconditionError`` when
the caller supplied a relation that is not a congruence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..commut import (
    _violations, center, centralizes, decode, eval_dag, generate_matrices, is_central_congruence,
    nilpotency_class, sampled_matrices, term_value_tables, witness_term,
)
from ..config import limits
from ..congr import all_congruences, all_congruences_brute, cayley_kernel, is_congruence, lift_congruence, quotient_congruence
from ..displ import (
    adjunction_orbits_violations, adjunction_subgroups_violations, admissibles, all_quotients_faithful,
    cayley_eq, dis_alpha, dis_sup_alpha, is_cdos, is_cdsg, is_semiregular, is_sharp,
    is_sharp_by_definition, is_superconnected, normal_subgroups, operators_coincide, orbit_eq,
    pi_image, sampled_equivalences,
)
from ..errors import InvarianceError, QuasigaloisError
from ..ext import (
    CentralExtension, EndoMap, all_subgroups, alpha_N, alpha_N_unchecked, block_connectivity_check,
    build_affine, dis_ker_p1_translations, displacement_action_check, is_idempotent_extension,
    is_invariant, ker_p1, ldiv_formula, random_terms, term_form_violations,
)
from ..lquasi import LeftQuasigroup, are_isomorphic, cyclic_affine, projection, quotient, random_term
from ..partition import Partition
from ..perm import close, compose, is_normal_in, join, perm_order, pointwise_stabilizer, center_of

# instances with more congruences than this skip the laws that loop over pairs
PAIRWISE_MAX_CONGRUENCES = 60
TERM_SAMPLES = 500
TERM_DEPTH = 6
TERM_ARITY = 3
TERM_SAMPLING_MAX_ORDER = 4
EXTENSION_TERMS = 300
BRUTE_CONGRUENCE_MAX_ORDER = 6


class PreconditionError(QuasigaloisError, ValueError):
    """A relation handed to the harness is not a congruence."""


class Skip(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class Instance:
    name: str
    Q: LeftQuasigroup
    family: str = ""
    ext: CentralExtension | None = None
    congruences: list | None = None


@dataclass(frozen=True)
class Law:
    name: str
    check: Callable
    summary: str
    extensions_only: bool = False


def congruences_of(inst: Instance) -> list[Partition]:
    if inst.congruences is None:
        return all_congruences(inst.Q)
    for a in inst.congruences:
        if a.n != inst.Q.n or not is_congruence(inst.Q, a):
            raise PreconditionError(f"{a} is not a congruence of {inst.name}")
    return list(inst.congruences)


def _pairwise(inst: Instance) -> list[Partition]:
    cons = congruences_of(inst)
    if len(cons) > PAIRWISE_MAX_CONGRUENCES:
        raise Skip(f"{len(cons)} congruences (pairwise limit {PAIRWISE_MAX_CONGRUENCES})")
    return cons


def blocks(p: Partition):
    return [list(b) for b in p.blocks()]


def failure(inst: Instance, detail: str, alpha: Partition | None = None, N=None) -> dict:
    rec = {"instance": inst.name, "table": [list(r) for r in inst.Q.table], "detail": detail}
    if alpha is not None:
        rec["congruence"] = blocks(alpha)
    if N is not None:
        rec["subgroup"] = {"order": N.order, "generators": [list(g) for g in N.generators]}
    return rec


# -- displacement groups -----------------------------------------------------

def exponent_sum_zero(Q: LeftQuasigroup) -> frozenset:
    """Products of left translations whose exponents sum to zero.

    Walks the group generated by (L_x, 1) in LMlt(Q) x Z_M with M the order
    of L_0; (1, M) lies in that group, so reducing the exponent sum mod M
    loses nothing.
    """
    n = Q.n
    M = perm_order(Q.table[0])
    start = (tuple(range(n)), 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for g, s in frontier:
            for L in Q.table:
                h = (compose(L, g), (s + 1) % M)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(g for g, s in seen if s == 0)


def law_lmlt_decomposition(inst):
    Q = inst.Q
    out = []
    G, D = Q.lmlt, Q.dis
    if not is_normal_in(D, G):
        out.append(failure(inst, "Dis(Q) is not normal in LMlt(Q)"))
    for x in range(Q.n):
        if close(D.generators + (Q.table[x],), Q.n) != G:
            out.append(failure(inst, f"LMlt(Q) != Dis(Q)<L_{x}>"))
    if exponent_sum_zero(Q) != D.elements:
        out.append(failure(inst, "Dis(Q) differs from the exponent-sum-zero products"))
    return out


def law_quotient_transport(inst):
    Q = inst.Q
    cons = _pairwise(inst)
    out = []
    for a in cons:
        Qa, bmap = quotient(Q, a)
        reps = [b[0] for b in a.blocks()]
        for x in range(Q.n):
            induced = tuple(bmap[Q.table[x][r]] for r in reps)
            if induced != Qa.table[bmap[x]]:
                out.append(failure(inst, f"L_{x} does not induce L_[{x}] on blocks", a))
        for b in cons:
            if not a.leq(b):
                continue
            ba = quotient_congruence(a, b)
            if not is_congruence(Qa, ba) or lift_congruence(Q, a, ba) != b:
                out.append(failure(inst, "beta/alpha does not correspond to beta", a))
                continue
            if pi_image(Q, a, dis_alpha(Q, b)) != dis_alpha(Qa, ba):
                out.append(failure(inst, f"pi_alpha(Dis_beta) != Dis_(beta/alpha) for beta={b}", a))
            if pi_image(Q, a, dis_sup_alpha(Q, b)) != dis_sup_alpha(Qa, ba):
                out.append(failure(inst, f"pi_alpha(Dis^beta) != Dis^(beta/alpha) for beta={b}", a))
    return out


def law_admissible_correspondence(inst):
    Q = inst.Q
    out = []
    adm = admissibles(Q)
    for a in congruences_of(inst):
        hi = dis_sup_alpha(Q, a)
        above = [N for N in adm if hi <= N]
        Qa, _ = quotient(Q, a)
        images = [pi_image(Q, a, N) for N in above]
        if len(set(images)) != len(above) or set(images) != set(admissibles(Qa)):
            out.append(failure(inst, "pi_alpha is not a bijection onto Norm'(Q/alpha)", a))
            continue
        for N, iN in zip(above, images):
            for M, iM in zip(above, images):
                if (N <= M) != (iN <= iM):
                    out.append(failure(inst, "pi_alpha does not preserve and reflect order", a, N))
    return out


def law_orbit_cayley_transport(inst):
    Q = inst.Q
    out = []
    adm = admissibles(Q)
    for a in congruences_of(inst):
        hi = dis_sup_alpha(Q, a)
        beta = orbit_eq(Q, hi)
        Qb, _ = quotient(Q, beta)
        Qa, _ = quotient(Q, a)
        for N in adm:
            if not hi <= N:
                continue
            if quotient_congruence(beta, orbit_eq(Q, N)) != orbit_eq(Qb, pi_image(Q, beta, N)):
                out.append(failure(inst, "O_N/beta != O_(pi_beta(N))", a, N))
            if quotient_congruence(a, cayley_eq(Q, N)) != cayley_eq(Qa, pi_image(Q, a, N)):
                out.append(failure(inst, "c_N/alpha != c_(pi_alpha(N))", a, N))
    return out


def law_cayley_kernel_remarks(inst):
    Q = inst.Q
    out = []
    lam = cayley_kernel(Q)
    if lam != cayley_eq(Q, close([], Q.n)):
        out.append(failure(inst, "lambda_Q differs from c_1"))
    if Q.predicates.rack and not is_congruence(Q, lam):
        out.append(failure(inst, "a rack whose Cayley kernel is not a congruence"))
    if (Q.dis.order == 1) != lam.is_full():
        out.append(failure(inst, "Dis(Q) = 1 does not match lambda_Q = 1_Q"))
    for a in congruences_of(inst):
        if a.leq(lam) != (dis_alpha(Q, a).order == 1):
            out.append(failure(inst, "alpha <= lambda_Q disagrees with Dis_alpha = 1", a))
        Qa, _ = quotient(Q, a)
        if cayley_kernel(Qa) != quotient_congruence(a, cayley_eq(Q, dis_sup_alpha(Q, a))):
            out.append(failure(inst, "lambda_(Q/alpha) != c_(Dis^alpha)/alpha", a))
    return out


def law_below_cayley_kernel(inst):
    Q = inst.Q
    out = []
    for a in congruences_of(inst):
        for label, grp in (("Dis^alpha", dis_sup_alpha(Q, a)), ("Dis_alpha", dis_alpha(Q, a))):
            b = orbit_eq(Q, grp)
            if not is_congruence(Q, b):
                out.append(failure(inst, f"orbits of {label} are not a congruence", a))
                continue
            Qb, _ = quotient(Q, b)
            if not quotient_congruence(b, a).leq(cayley_kernel(Qb)):
                out.append(failure(inst, f"alpha/O_({label}) is not below the Cayley kernel", a))
    return out


def law_sharp_characterization(inst):
    _pairwise(inst)
    Q = inst.Q
    op, df = is_sharp(Q), is_sharp_by_definition(Q)
    return [] if op == df else [failure(inst, f"operator form says sharp={op}, definition says {df}")]


def law_orbit_equals_cayley(inst):
    Q = inst.Q
    cons = congruences_of(inst)
    i = all(cayley_eq(Q, N) == orbit_eq(Q, N) for N in admissibles(Q))
    ii = True
    for a in cons:
        lo, hi = dis_alpha(Q, a), dis_sup_alpha(Q, a)
        if not (orbit_eq(Q, lo) == orbit_eq(Q, hi) == a == cayley_eq(Q, lo) == cayley_eq(Q, hi)):
            ii = False
            break
    iii = all_quotients_faithful(Q)
    out = []
    if not i == ii == iii:
        out.append(failure(inst, f"O=c conditions disagree: (i)={i} (ii)={ii} (iii)={iii}"))
    if i and not is_sharp(Q):
        out.append(failure(inst, "O_* = c_* but Q is not sharp"))
    return out


# -- Galois connections ------------------------------------------------------

def law_orbit_galois(inst):
    Q = inst.Q
    out = [failure(inst, "O_N <= alpha disagrees with N <= Dis^alpha", a, N)
           for a, N in adjunction_orbits_violations(Q)]
    adm = admissibles(Q)
    adm_set = set(adm)
    for a in congruences_of(inst):
        hi, lo = dis_sup_alpha(Q, a), dis_alpha(Q, a)
        if hi not in adm_set or lo not in adm_set:
            out.append(failure(inst, "Dis_alpha or Dis^alpha is not admissible", a))
        if dis_sup_alpha(Q, orbit_eq(Q, hi)) != hi:
            out.append(failure(inst, "Dis^(O_(Dis^alpha)) != Dis^alpha", a))
    for N in adm:
        o = orbit_eq(Q, N)
        if not is_congruence(Q, o) or not N <= dis_sup_alpha(Q, o):
            out.append(failure(inst, "O_N is not a congruence with N <= Dis^(O_N)", None, N))
            continue
        if orbit_eq(Q, dis_sup_alpha(Q, o)) != o:
            out.append(failure(inst, "O_(Dis^(O_N)) != O_N", None, N))
    return out


def law_cayley_galois(inst):
    Q = inst.Q
    congruences_of(inst)
    out = [failure(inst, "Dis_alpha <= N disagrees with alpha <= c_N", a, N)
           for a, N in adjunction_subgroups_violations(Q)]
    for a in sampled_equivalences(Q):
        lo = dis_alpha(Q, a)
        if dis_alpha(Q, cayley_eq(Q, lo)) != lo:
            out.append(failure(inst, "Dis_(c_(Dis_alpha)) != Dis_alpha", a))
    for N in normal_subgroups(Q):
        c = cayley_eq(Q, N)
        if cayley_eq(Q, dis_alpha(Q, c)) != c:
            out.append(failure(inst, "c_(Dis_(c_N)) != c_N", None, N))
    return out


def law_normal_subgroup_lattice(inst):
    Q = inst.Q
    G = Q.lmlt
    normals = normal_subgroups(Q)
    out = []
    found = set(normals)
    if close([], Q.n) not in found or G not in found:
        out.append(failure(inst, "normal subgroup list misses 1 or LMlt(Q)"))
    for N in normals:
        if not is_normal_in(N, G):
            out.append(failure(inst, "listed subgroup is not normal", None, N))
    for N in normals:
        for M in normals:
            if join(N, M) not in found:
                out.append(failure(inst, "normal subgroups not closed under join", None, N))
                return out
    return out


def law_operator_chain(inst):
    Q = inst.Q
    cons = _pairwise(inst)
    out = []
    for a in cons:
        lo, hi = dis_alpha(Q, a), dis_sup_alpha(Q, a)
        if not lo <= hi:
            out.append(failure(inst, "Dis_alpha is not below Dis^alpha", a))
        chain = [orbit_eq(Q, lo), orbit_eq(Q, hi), a, cayley_eq(Q, lo), cayley_eq(Q, hi)]
        if not all(x.leq(y) for x, y in zip(chain, chain[1:])):
            out.append(failure(inst, "O_(Dis_a) <= O_(Dis^a) <= a <= c_(Dis_a) <= c_(Dis^a) fails", a))
    for a in cons:
        for b in cons:
            if a.leq(b) and not (dis_alpha(Q, a) <= dis_alpha(Q, b) and dis_sup_alpha(Q, a) <= dis_sup_alpha(Q, b)):
                out.append(failure(inst, f"displacement operators not monotone up to {b}", a))
    return out


def law_congruence_lattice(inst):
    Q = inst.Q
    cons = all_congruences(Q)
    out = []
    found = set(cons)
    if Partition.discrete(Q.n) not in found or Partition.full(Q.n) not in found:
        out.append(failure(inst, "Con(Q) misses 0_Q or 1_Q"))
    if Q.n <= BRUTE_CONGRUENCE_MAX_ORDER and cons != all_congruences_brute(Q):
        out.append(failure(inst, "Con(Q) differs from the filtered equivalence sweep"))
    if len(cons) <= PAIRWISE_MAX_CONGRUENCES:
        for a in cons:
            for b in cons:
                if a.meet(b) not in found:
                    out.append(failure(inst, "Con(Q) not closed under meet", a))
    return out


# -- classification ----------------------------------------------------------

def law_quotient_closure(inst):
    Q = inst.Q
    props = {"cdos": is_cdos, "cdsg": is_cdsg, "sharp": is_sharp, "quotients-faithful": all_quotients_faithful}
    held = {k: f(Q) for k, f in props.items()}
    out = []
    for a in congruences_of(inst):
        Qa, _ = quotient(Q, a)
        for k, f in props.items():
            if held[k] and not f(Qa):
                out.append(failure(inst, f"{k} is lost in the quotient", a))
    return out


def law_cdsg_cdos(inst):
    Q = inst.Q
    i = is_cdsg(Q)
    ii = is_sharp(Q) and is_cdos(Q)
    iii = operators_coincide(Q)
    if i == ii == iii:
        return []
    return [failure(inst, f"cdsg={i}, sharp and cdos={ii}, operators coincide={iii}")]


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def law_simple_classification(inst):
    Q = inst.Q
    cons = congruences_of(inst)
    if Q.n < 2 or len(cons) != 2:
        return []
    out = []
    lam = cayley_kernel(Q)
    if set(admissibles(Q)) != {close([], Q.n), Q.dis}:
        out.append(failure(inst, "simple but Norm'(Q) != {1, Dis(Q)}"))
    if not lam.is_full():
        if not is_cdos(Q):
            out.append(failure(inst, "simple with lambda_Q != 1_Q but no CDOs"))
    elif Q.predicates.idempotent:
        if Q.n != 2 or not are_isomorphic(Q, projection(2)):
            out.append(failure(inst, "simple idempotent with lambda_Q = 1_Q is not P_2"))
    elif not (_is_prime(Q.n) and are_isomorphic(Q, cyclic_affine(Q.n, 0, 1, 1))):
        out.append(failure(inst, "simple with lambda_Q = 1_Q is not Aff(Z_p,0,1,1)"))
    if is_congruence(Q, lam) and lam.is_discrete() and not is_cdsg(Q):
        out.append(failure(inst, "simple faithful Cayley left quasigroup without CDSg"))
    return out


def law_superconnected_classes(inst):
    Q = inst.Q
    if not (Q.predicates.idempotent and is_superconnected(Q)):
        return []
    out = []
    if not is_sharp(Q) or not cayley_kernel(Q).is_discrete():
        out.append(failure(inst, "idempotent superconnected but not sharp and faithful"))
    if is_cdos(Q) != is_cdsg(Q):
        out.append(failure(inst, "idempotent superconnected with cdos != cdsg"))
    if is_semiregular(Q) and not (Q.predicates.quandle and is_cdsg(Q)):
        out.append(failure(inst, "superconnected idempotent semiregular but not a CDSg quandle"))
    return out


# -- commutators -------------------------------------------------------------

def _same_stabilizers(G, alpha: Partition) -> bool:
    stab = {}
    for x in range(alpha.n):
        s = pointwise_stabilizer(G, x)
        r = alpha.labels[x]
        if stab.setdefault(r, s) != s:
            return False
    return True


def _generators_commute(N, M) -> bool:
    return all(compose(g, h) == compose(h, g) for g in N.generators for h in M.generators)


def law_centralizer_displacement(inst):
    Q = inst.Q
    cons = _pairwise(inst)
    zero = Partition.discrete(Q.n)
    out = []
    for a in cons:
        for b in cons:
            if not centralizes(Q, a, b, zero):
                continue
            Da, Db = dis_alpha(Q, a), dis_alpha(Q, b)
            if not _generators_commute(Da, Db):
                out.append(failure(inst, f"C(alpha,beta;0) but [Dis_alpha, Dis_beta] != 1 for beta={b}", a))
            if not _same_stabilizers(Db, a):
                out.append(failure(inst, f"C(alpha,beta;0) but Dis_beta stabilizers differ along alpha, beta={b}", a))
    return out


def law_center_displacement(inst):
    Q = inst.Q
    z = center(Q)
    D = Q.dis
    Z = center_of(D)
    out = []
    for a in congruences_of(inst):
        if not a.leq(z):
            continue
        if not dis_alpha(Q, a) <= Z:
            out.append(failure(inst, "Dis_alpha not central in Dis(Q) for alpha below the center", a))
        if not _same_stabilizers(D, a):
            out.append(failure(inst, "Dis(Q) stabilizers differ along alpha below the center", a))
    return out


def law_term_condition_sampling(inst):
    Q = inst.Q
    if Q.n > TERM_SAMPLING_MAX_ORDER:
        raise Skip(f"order {Q.n} above {TERM_SAMPLING_MAX_ORDER}")
    cons = _pairwise(inst)
    rng = random.Random(limits.seed)
    terms = [random_term(rng, TERM_ARITY, TERM_DEPTH) for _ in range(TERM_SAMPLES)]
    values = term_value_tables(Q, terms, TERM_ARITY)
    out = []
    for a in cons:
        for b in cons:
            ms = generate_matrices(Q, a, b)
            sampled = sampled_matrices(Q, values, TERM_ARITY, a, b)
            missing = sampled[~np.isin(sampled, ms.codes)]
            if len(missing):
                out.append(failure(inst, f"{len(missing)} term matrices missing from the closure, beta={b}", a))
                continue
            sq = decode(sampled, Q.n)
            for d in cons:
                lab = np.array(d.labels)
                bad = _violations(ms, d)
                sampled_bad = ((lab[sq[:, 0]] == lab[sq[:, 1]]) & (lab[sq[:, 2]] != lab[sq[:, 3]])).any()
                if sampled_bad and not len(bad):
                    out.append(failure(inst, f"sampled terms break C but the closure does not, delta={d}", a))
                if len(bad):
                    quad = tuple(int(v) for v in bad[0])
                    t, gens = witness_term(ms, quad)
                    got = tuple(eval_dag(Q, t, [g[k] for g in gens]) for k in range(4))
                    if got != quad:
                        out.append(failure(inst, f"witness term evaluates to {got}, not {quad}", a))
    return out


# -- extensions --------------------------------------------------------------

def law_ext_term_form(inst):
    ext = inst.ext
    E = ext.E
    out = []
    alpha = ker_p1(ext)
    QE, _ = quotient(E, alpha)
    if QE.table != ext.Q.table:
        out.append(failure(inst, "E/ker p1 is not Q", alpha))
    terms = random_terms(EXTENSION_TERMS, TERM_ARITY, TERM_DEPTH, limits.seed)
    for t, where in term_form_violations(ext, terms, TERM_ARITY):
        out.append(failure(inst, f"term {t} breaks the extension term form ({where})"))
    return out


def law_ext_kernel_central(inst):
    ext = inst.ext
    alpha = ker_p1(ext)
    if is_central_congruence(ext.E, alpha):
        return []
    return [failure(inst, "ker p1 is not central", alpha)]


def law_ext_displacement(inst):
    ext = inst.ext
    E = ext.E
    out = []
    if not all(ldiv_formula(ext, p, q) == E.ldiv(p, q) for p in range(E.n) for q in range(E.n)):
        out.append(failure(inst, "left division differs from the closed formula"))
    if not displacement_action_check(ext):
        out.append(failure(inst, "conjugated displacements do not act as c -> c + f^k g(a - b)"))
    if dis_alpha(E, ker_p1(ext)).elements != dis_ker_p1_translations(ext):
        out.append(failure(inst, "Dis_(ker p1) is not the group of translations by H"))
    return out


def law_ext_alpha_n(inst):
    ext = inst.ext
    E = ext.E
    A = ext.A
    out = []
    for N in all_subgroups(A):
        if is_invariant(ext, N):
            a = alpha_N(ext, N)
            if not is_congruence(E, a):
                out.append(failure(inst, f"alpha_N not a congruence for invariant N={sorted(N)}", a))
        else:
            try:
                alpha_N(ext, N)
                out.append(failure(inst, f"alpha_N accepted non-invariant N={sorted(N)}"))
            except InvarianceError:
                pass
    if alpha_N_unchecked(ext, frozenset(range(A.order))) != ker_p1(ext):
        out.append(failure(inst, "alpha_A != ker p1"))
    if alpha_N_unchecked(ext, frozenset([0])) != Partition.discrete(E.n):
        out.append(failure(inst, "alpha_0 != 0_E"))
    return out


def law_ext_block_connectivity(inst):
    ext = inst.ext
    if not ext.Q.predicates.idempotent:
        return []
    return [] if block_connectivity_check(ext) else [failure(inst, "Dis_(ker p1) orbits or block connectivity wrong")]


def law_affine_superconnected(inst):
    ext = inst.ext
    if not is_idempotent_extension(ext.Q, ext.g, ext.f, ext.theta):
        return []
    out = []
    if not ext.E.predicates.idempotent:
        out.append(failure(inst, "idempotent extension conditions hold but E is not idempotent"))
    if is_cdos(ext.E):
        one = EndoMap.identity(ext.A)
        aff = build_affine(ext.A, one - ext.f, ext.f, 0)
        if not is_superconnected(aff):
            out.append(failure(inst, "E has CDOs but Aff(A,1-f,f,0) is not superconnected"))
    return out


def law_nilpotent_cdsg(inst):
    Q = inst.Q
    if not Q.predicates.idempotent or nilpotency_class(Q) is None:
        return []
    p = Q.predicates
    rhs = is_semiregular(Q) and is_superconnected(Q) and p.latin and p.quandle
    lhs = is_cdsg(Q)
    return [] if lhs == rhs else [failure(inst, f"nilpotent idempotent: cdsg={lhs} but semiregular superconnected latin quandle={rhs}")]


LAWS: dict[str, Law] = {law.name: law for law in [
    Law("lmlt-decomposition", law_lmlt_decomposition, "Dis normal in LMlt, LMlt = Dis<L_x>, Dis = exponent-sum-zero words"),
    Law("congruence-lattice", law_congruence_lattice, "Con(Q) contains 0 and 1, is meet-closed and matches brute force"),
    Law("normal-subgroup-lattice", law_normal_subgroup_lattice, "normal subgroups of LMlt are normal and join-closed"),
    Law("displacement-quotient-transport", law_quotient_transport, "pi_alpha(Dis_beta) = Dis_(beta/alpha), same for Dis^"),
    Law("admissible-lattice-correspondence", law_admissible_correspondence, "pi_alpha: {N >= Dis^alpha} -> Norm'(Q/alpha) is an order isomorphism"),
    Law("orbit-cayley-transport", law_orbit_cayley_transport, "O_N/beta = O_(pi_beta N) and c_N/alpha = c_(pi_alpha N)"),
    Law("cayley-kernel-remarks", law_cayley_kernel_remarks, "alpha <= lambda iff Dis_alpha = 1; lambda_(Q/alpha) = c_(Dis^alpha)/alpha"),
    Law("below-cayley-kernel", law_below_cayley_kernel, "alpha/O_(Dis^alpha) and alpha/O_(Dis_alpha) lie below the Cayley kernel"),
    Law("sharp-characterization", law_sharp_characterization, "operator form of sharpness equals the definition"),
    Law("orbit-equals-cayley", law_orbit_equals_cayley, "O_* = c_* iff the operator chain collapses iff all quotients are faithful"),
    Law("orbit-galois-connection", law_orbit_galois, "(Dis^*, O_*) is a Galois connection between Con and Norm'"),
    Law("cayley-galois-connection", law_cayley_galois, "(Dis_*, c_*) is a Galois connection between Equiv and normal subgroups"),
    Law("operator-chain", law_operator_chain, "the five-term operator chain and monotonicity"),
    Law("quotient-closure", law_quotient_closure, "CDOs, CDSg, sharpness pass to quotients"),
    Law("cdsg-cdos-equivalence", law_cdsg_cdos, "CDSg iff sharp and CDOs iff the operators coincide"),
    Law("simple-classification", law_simple_classification, "simple left quasigroups: Norm' = {1, Dis} and the lambda dichotomy"),
    Law("superconnected-classes", law_superconnected_classes, "idempotent superconnected: sharp, faithful, CDOs iff CDSg"),
    Law("centralizer-displacement", law_centralizer_displacement, "C(alpha,beta;0) forces [Dis_alpha, Dis_beta] = 1 and equal stabilizers"),
    Law("center-displacement", law_center_displacement, "below the center Dis_alpha is central in Dis(Q)"),
    Law("term-condition-sampling", law_term_condition_sampling, "matrix closure agrees with random-term sampling"),
    Law("nilpotent-cdsg", law_nilpotent_cdsg, "nilpotent idempotent: CDSg iff semiregular superconnected latin quandle"),
    Law("extension-term-form", law_ext_term_form, "E/ker p1 = Q and term operations are affine in the A-coordinates", True),
    Law("extension-kernel-central", law_ext_kernel_central, "ker p1 is a central congruence", True),
    Law("extension-displacement-action", law_ext_displacement, "Dis_(ker p1) acts by c -> c + f^k g(a - b)", True),
    Law("extension-alpha-n", law_ext_alpha_n, "alpha_N is a congruence for invariant N", True),
    Law("extension-block-connectivity", law_ext_block_connectivity, "Dis_(ker p1) orbits are (y, c + H)", True),
    Law("affine-superconnected", law_affine_superconnected, "CDOs idempotent extensions have superconnected Aff(A,1-f,f,0)", True),
]}
