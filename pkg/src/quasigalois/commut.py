"""Term-condition centrality, commutators, the center and nilpotency.

The term condition C(alpha, beta; delta) quantifies over all terms.  Instead
of enumerating terms we close the 2x2 matrices

    (x x)          (z u)
    (y y) x a y,   (z u) z b u

under the basic operations applied entrywise.  The closure is exactly the set
of matrices (t(x,z), t(x,u); t(y,z), t(y,u)), so C holds iff no closed matrix
has its top row delta-related and its bottom row not.  Matrices are stored as
integer codes ((m11*n + m12)*n + m21)*n + m22 with m11, m12 the top row.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .congr import all_congruences, congruence_generated, lift_congruence
from .errors import InconsistencyError, JoinFailureError
from .lquasi import LDiv, LeftQuasigroup, Mul, Term, Var, eval_term_array, quotient
from .partition import Partition

CHUNK = 1 << 20
GEN, MUL, DIV = -1, 0, 1


@dataclass
class MatrixSet:
    base: LeftQuasigroup
    alpha: Partition
    beta: Partition
    codes: np.ndarray          # sorted int64 codes of the closed set
    generators: list           # generator quads, in code order
    parent_op: np.ndarray      # per code: GEN, MUL or DIV (only meaningful for members)
    parent_a: np.ndarray
    parent_b: np.ndarray

    @property
    def quads(self) -> np.ndarray:
        """(k, 4) array of the closed matrices as (m11, m12, m21, m22)."""
        return decode(self.codes, self.base.n)

    def __len__(self):
        return len(self.codes)

    def __contains__(self, quad) -> bool:
        n = self.base.n
        code = encode(*quad, n)
        return self.parent_op[code] != -2


def encode(m11, m12, m21, m22, n):
    return ((m11 * n + m12) * n + m21) * n + m22


def decode(codes: np.ndarray, n: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((len(codes), 4), dtype=np.int64)
    c = codes.copy()
    for k in (3, 2, 1, 0):
        out[:, k] = c % n
        c //= n
    return out


def generate_matrices(Q: LeftQuasigroup, alpha: Partition, beta: Partition) -> MatrixSet:
    return Q.memo(("matrices", alpha, beta), lambda: _close(Q, alpha, beta))


def _close(Q, alpha, beta, stop_delta=None):
    """Close the generators; with stop_delta, bail out (returning None) at
    the first matrix that breaks C(alpha, beta; stop_delta)."""
    n = Q.n
    lab = None if stop_delta is None else np.array(stop_delta.labels, dtype=np.int64)
    size = n ** 4
    parent_op = np.full(size, -2, dtype=np.int8)
    parent_a = np.zeros(size, dtype=np.int64)
    parent_b = np.zeros(size, dtype=np.int64)

    gens = {(x, x, y, y) for x, y in alpha.pairs()}
    gens |= {(z, u, z, u) for z, u in beta.pairs()}
    gens = sorted(gens, key=lambda q: encode(*q, n))
    gen_codes = np.array([encode(*q, n) for q in gens], dtype=np.int64)
    parent_op[gen_codes] = GEN
    parent_a[gen_codes] = np.arange(len(gens))

    tables = (Q.np_table.ravel(), Q.np_ldiv.ravel())
    members = [gen_codes]
    frontier = gen_codes
    if lab is not None and _any_violation(gen_codes, n, lab):
        return None
    old = np.zeros(0, dtype=np.int64)
    while len(frontier):
        allc = np.concatenate([old, frontier])
        found = []
        for kind, flat in zip((MUL, DIV), tables):
            for left, right in ((frontier, allc), (old, frontier)):
                if len(left) and len(right):
                    found.append(_products(kind, flat, left, right, n, parent_op, parent_a, parent_b))
        new = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
        old = allc
        frontier = new
        if len(new):
            members.append(new)
            if lab is not None and _any_violation(new, n, lab):
                return None
    codes = np.sort(np.concatenate(members))
    return MatrixSet(Q, alpha, beta, codes, gens, parent_op, parent_a, parent_b)


def _products(kind, flat, left, right, n, parent_op, parent_a, parent_b):
    """Entrywise products left[i] op right[j]; record and return unseen codes."""
    ld = decode(left, n)
    rd = decode(right, n)
    step = max(1, CHUNK // len(right))
    out = []
    for start in range(0, len(left), step):
        a = ld[start:start + step]
        code = flat[a[:, 0, None] * n + rd[None, :, 0]]
        for k in (1, 2, 3):
            code = code * n + flat[a[:, k, None] * n + rd[None, :, k]]
        code = code.ravel()
        fresh = parent_op[code] == -2
        if not fresh.any():
            continue
        pos = np.flatnonzero(fresh)
        uniq, first = np.unique(code[pos], return_index=True)
        i, j = np.divmod(pos[first], len(right))
        parent_op[uniq] = kind
        parent_a[uniq] = left[start + i]
        parent_b[uniq] = right[j]
        out.append(uniq)
    return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)


def _any_violation(codes, n, lab) -> bool:
    q = decode(codes, n)
    return bool(((lab[q[:, 0]] == lab[q[:, 1]]) & (lab[q[:, 2]] != lab[q[:, 3]])).any())


def _violations(ms: MatrixSet, delta: Partition) -> np.ndarray:
    lab = np.array(delta.labels, dtype=np.int64)
    q = ms.quads
    bad = (lab[q[:, 0]] == lab[q[:, 1]]) & (lab[q[:, 2]] != lab[q[:, 3]])
    return q[bad]


def centralizes(Q: LeftQuasigroup, alpha: Partition, beta: Partition, delta: Partition) -> bool:
    """C(alpha, beta; delta)."""
    key = ("matrices", alpha, beta)
    if key not in Q._memo:
        ms = _close(Q, alpha, beta, stop_delta=delta)
        if ms is None:
            return False
        # ran to completion, so it is the full closure
        Q._memo[key] = ms
    return len(_violations(Q._memo[key], delta)) == 0


def centralizer_witness(Q, alpha, beta, delta):
    """A closed matrix breaking C(alpha, beta; delta), or None."""
    bad = _violations(generate_matrices(Q, alpha, beta), delta)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def commutator(Q: LeftQuasigroup, alpha: Partition, beta: Partition) -> Partition:
    """[alpha, beta]: the least congruence delta with C(alpha, beta; delta)."""
    ms = generate_matrices(Q, alpha, beta)
    q = ms.quads
    delta = Partition.discrete(Q.n)
    # rounds strictly coarsen delta, so at most n of them
    for _ in range(Q.n + 1):
        lab = np.array(delta.labels)
        forced = q[lab[q[:, 0]] == lab[q[:, 1]]][:, 2:]
        pairs = [(i, r) for i, r in enumerate(delta.labels) if i != r]
        pairs += [tuple(p) for p in np.unique(forced, axis=0).tolist() if p[0] != p[1]]
        nxt = congruence_generated(Q, pairs)
        if nxt == delta:
            break
        delta = nxt
    if len(_violations(ms, delta)):
        raise InconsistencyError("commutator fixpoint does not centralize")
    for d in all_congruences(Q):
        if d != delta and d.leq(delta) and not len(_violations(ms, d)):
            raise InconsistencyError("commutator fixpoint is not minimal")
    return delta


def is_abelian_congruence(Q: LeftQuasigroup, alpha: Partition) -> bool:
    return centralizes(Q, alpha, alpha, Partition.discrete(Q.n))


def is_central_congruence(Q: LeftQuasigroup, alpha: Partition) -> bool:
    return centralizes(Q, alpha, Partition.full(Q.n), Partition.discrete(Q.n))


def center(Q: LeftQuasigroup) -> Partition:
    """The largest congruence centralizing 1_Q over 0_Q."""
    def build():
        cons = all_congruences(Q)
        central: list[Partition] = []
        noncentral: list[Partition] = []
        # coarsest first; centrality passes down and failure passes up
        for a in reversed(cons):
            if any(a.leq(c) for c in central):
                central.append(a)
            elif any(c.leq(a) for c in noncentral):
                noncentral.append(a)
            elif is_central_congruence(Q, a):
                central.append(a)
            else:
                noncentral.append(a)
        z = Partition.discrete(Q.n)
        for c in central:
            z = z.join(c)
        if not is_central_congruence(Q, z):
            raise JoinFailureError("join of the central congruences is not central")
        return z
    return Q.memo("center", build)


def nilpotency_series(Q: LeftQuasigroup) -> list[Partition]:
    """zeta_1 <= zeta_2 <= ... up to 1_Q, or up to the point where it stalls."""
    series: list[Partition] = []
    current = Partition.discrete(Q.n)
    while not current.is_full():
        Qk, _ = quotient(Q, current)
        nxt = lift_congruence(Q, current, center(Qk))
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


def nilpotency_class(Q: LeftQuasigroup):
    """Length of the upper central series, or None when Q is not nilpotent."""
    def build():
        series = nilpotency_series(Q)
        if Q.n <= 1:
            return 0
        return len(series) if series and series[-1].is_full() else None
    return Q.memo("nilpotency_class", build)


# -- term witnesses and sampling ----------------------------------------------

def witness_term(ms: MatrixSet, quad) -> tuple[Term, list]:
    """A term t and generator matrices g_1..g_k with t(g_1..g_k) == quad.

    The term is returned as a DAG of shared nodes; evaluate it with
    ``eval_dag`` rather than plain recursion.
    """
    n = ms.base.n
    used: dict[int, int] = {}
    memo: dict[int, Term] = {}

    def build(code):
        stack = [code]
        while stack:
            c = stack[-1]
            if c in memo:
                stack.pop()
                continue
            kind = int(ms.parent_op[c])
            if kind == GEN:
                g = int(ms.parent_a[c])
                memo[c] = Var(used.setdefault(g, len(used)))
                stack.pop()
                continue
            if kind == -2:
                raise KeyError(f"code {c} is not in the closure")
            a, b = int(ms.parent_a[c]), int(ms.parent_b[c])
            if a in memo and b in memo:
                memo[c] = (Mul if kind == MUL else LDiv)(memo[a], memo[b])
                stack.pop()
            else:
                stack.extend(x for x in (a, b) if x not in memo)
        return memo[code]

    t = build(int(encode(*quad, n)))
    gens = [None] * len(used)
    for g, v in used.items():
        gens[v] = ms.generators[g]
    return t, gens


def eval_dag(Q: LeftQuasigroup, t: Term, args) -> int:
    memo: dict[int, int] = {}
    stack = [t]
    while stack:
        s = stack[-1]
        if id(s) in memo:
            stack.pop()
            continue
        if isinstance(s, Var):
            memo[id(s)] = args[s.index]
            stack.pop()
            continue
        if id(s.left) in memo and id(s.right) in memo:
            a, b = memo[id(s.left)], memo[id(s.right)]
            memo[id(s)] = Q.table[a][b] if isinstance(s, Mul) else Q.ldiv_table[a][b]
            stack.pop()
        else:
            stack.extend(x for x in (s.left, s.right) if id(x) not in memo)
    return memo[id(t)]


def term_value_tables(Q: LeftQuasigroup, terms, arity: int) -> np.ndarray:
    """Values of each term on every argument tuple, shape (len(terms), n**arity)."""
    n = Q.n
    grids = np.meshgrid(*[np.arange(n)] * arity, indexing="ij")
    args = [g.ravel() for g in grids]
    return np.stack([eval_term_array(Q.np_table, Q.np_ldiv, t, args) for t in terms])


def sampled_matrices(Q: LeftQuasigroup, values: np.ndarray, arity: int, alpha, beta) -> np.ndarray:
    """Codes of (t(x,z), t(x,u); t(y,z), t(y,u)) over all x alpha y, z beta u.

    The first variable of each term is the alpha-variable and the remaining
    arity-1 variables are beta-variables.
    """
    n = Q.n
    ap = np.array(list(alpha.pairs()), dtype=np.int64)
    bp = np.array(list(beta.pairs()), dtype=np.int64)
    zi = np.zeros(1, dtype=np.int64)
    ui = np.zeros(1, dtype=np.int64)
    for _ in range(arity - 1):
        zi = (zi[:, None] * n + bp[None, :, 0]).ravel()
        ui = (ui[:, None] * n + bp[None, :, 1]).ravel()
    stride = n ** (arity - 1)
    xi = ap[:, 0, None] * stride
    yi = ap[:, 1, None] * stride
    idx = [(xi + zi).ravel(), (xi + ui).ravel(), (yi + zi).ravel(), (yi + ui).ravel()]
    m = [values[:, i] for i in idx]
    return np.unique(encode(m[0], m[1], m[2], m[3], n))
