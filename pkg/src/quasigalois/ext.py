"""Central extensions Q x A of a left quasigroup by a finite abelian group.

    (x, a) * (y, b) = (x*y, g(a) + f(b) + theta(x, y))

with f an automorphism and g an endomorphism of A.  Points of the extension
are numbered lexicographically, Q-index major: (x, a) -> x * |A| + index(a).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InvarianceError, NotAnAutomorphismError
from .lquasi import LeftQuasigroup, Term, eval_term_array, random_term, subalgebra
from .partition import Partition
from .perm import is_transitive, orbits, perm_order


class AbelianGroup:
    """Z_{n_1} x ... x Z_{n_k}; elements are indexed in lexicographic order."""

    def __init__(self, moduli: Sequence[int]):
        moduli = tuple(int(m) for m in moduli)
        if any(m < 1 for m in moduli):
            raise ValueError(f"moduli must be positive, got {moduli}")
        self.moduli = moduli
        self.elements = tuple(itertools.product(*(range(m) for m in moduli)))
        self._index = {e: i for i, e in enumerate(self.elements)}

    @classmethod
    def cyclic(cls, n: int) -> AbelianGroup:
        return cls((n,))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return " x ".join(f"Z{m}" for m in self.moduli) or "0"

    def normalize(self, v) -> tuple:
        if isinstance(v, (int, np.integer)):
            v = (v,)
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError(f"{v} is not an element of {self}")
        return tuple(int(c) % m for c, m in zip(v, self.moduli))

    def index(self, v) -> int:
        return self._index[self.normalize(v)]

    def vec(self, i: int) -> tuple:
        return self.elements[i]

    @property
    def zero(self) -> int:
        return 0

    def basis(self) -> list[int]:
        out = []
        for j in range(self.rank):
            e = [0] * self.rank
            e[j] = 1
            out.append(self.index(e))
        return out

    @cached_property
    def add_table(self) -> np.ndarray:
        vecs = np.array(self.elements, dtype=np.int64).reshape(self.order, self.rank)
        mods = np.array(self.moduli, dtype=np.int64)
        s = (vecs[:, None, :] + vecs[None, :, :]) % mods
        return self._encode(s)

    @cached_property
    def neg_table(self) -> np.ndarray:
        vecs = np.array(self.elements, dtype=np.int64).reshape(self.order, self.rank)
        mods = np.array(self.moduli, dtype=np.int64)
        return self._encode((-vecs) % mods)

    def _encode(self, vecs: np.ndarray) -> np.ndarray:
        out = np.zeros(vecs.shape[:-1], dtype=np.int64)
        for j, m in enumerate(self.moduli):
            out = out * m + vecs[..., j]
        return out

    def add(self, i: int, j: int) -> int:
        return int(self.add_table[i, j])

    def neg(self, i: int) -> int:
        return int(self.neg_table[i])

    def sub(self, i: int, j: int) -> int:
        return int(self.add_table[i, self.neg_table[j]])


class EndoMap:
    """An endomorphism of A given by an integer matrix acting on coordinate vectors."""

    def __init__(self, A: AbelianGroup, matrix: Sequence[Sequence[int]]):
        k = A.rank
        m = [list(r) for r in matrix]
        if len(m) != k or any(len(r) != k for r in m):
            raise ValueError(f"endomorphism of {A} needs a {k}x{k} matrix")
        mods = A.moduli
        m = [[int(m[i][j]) % mods[i] for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(k):
                if m[i][j] * mods[j] % mods[i]:
                    raise ValueError(
                        f"matrix entry ({i},{j}) = {m[i][j]} does not respect the orders "
                        f"Z{mods[j]} -> Z{mods[i]}")
        self.A = A
        self.matrix = tuple(tuple(r) for r in m)
        self.images = tuple(
            A.index([sum(m[i][j] * v[j] for j in range(k)) for i in range(k)])
            for v in A.elements
        )

    @classmethod
    def from_images(cls, A: AbelianGroup, fn) -> EndoMap:
        """Build from a function on element indices (read off on the basis)."""
        cols = [A.vec(fn(b)) for b in A.basis()]
        matrix = [[cols[j][i] for j in range(A.rank)] for i in range(A.rank)]
        return cls(A, matrix)

    @classmethod
    def identity(cls, A: AbelianGroup) -> EndoMap:
        return cls.scalar(A, 1)

    @classmethod
    def zero(cls, A: AbelianGroup) -> EndoMap:
        return cls.scalar(A, 0)

    @classmethod
    def scalar(cls, A: AbelianGroup, s: int) -> EndoMap:
        return cls(A, [[s if i == j else 0 for j in range(A.rank)] for i in range(A.rank)])

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, EndoMap) and self.A == other.A and self.images == other.images

    def __hash__(self):
        return hash((self.A, self.images))

    def __repr__(self):
        return f"EndoMap({self.A}, {[list(r) for r in self.matrix]})"

    @cached_property
    def np_images(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64)

    def is_automorphism(self) -> bool:
        return len(set(self.images)) == self.A.order

    def compose(self, other: EndoMap) -> EndoMap:
        """self after other."""
        return EndoMap.from_images(self.A, lambda i: self(other(i)))

    def __add__(self, other: EndoMap) -> EndoMap:
        k = self.A.rank
        return EndoMap(self.A, [[self.matrix[i][j] + other.matrix[i][j] for j in range(k)] for i in range(k)])

    def __neg__(self) -> EndoMap:
        return EndoMap(self.A, [[-v for v in r] for r in self.matrix])

    def __sub__(self, other: EndoMap) -> EndoMap:
        return self + (-other)

    def inverse(self) -> EndoMap:
        if not self.is_automorphism():
            raise NotAnAutomorphismError(f"{self} is not bijective")
        inv = [0] * self.A.order
        for i, v in enumerate(self.images):
            inv[v] = i
        return EndoMap.from_images(self.A, inv.__getitem__)

    def power(self, k: int) -> EndoMap:
        base = self.inverse() if k < 0 else self
        out = EndoMap.identity(self.A)
        for _ in range(abs(k)):
            out = base.compose(out)
        return out


def all_endomorphisms(A: AbelianGroup) -> list[EndoMap]:
    k, mods = A.rank, A.moduli
    ranges = [range(mods[i]) for i in range(k) for _ in range(k)]
    out = []
    for flat in itertools.product(*ranges):
        m = [flat[i * k:(i + 1) * k] for i in range(k)]
        if all(m[i][j] * mods[j] % mods[i] == 0 for i in range(k) for j in range(k)):
            out.append(EndoMap(A, m))
    return out


def all_automorphisms(A: AbelianGroup) -> list[EndoMap]:
    return [f for f in all_endomorphisms(A) if f.is_automorphism()]


def element(A: AbelianGroup, v) -> int:
    """Index of v, given either as an index or as a coordinate vector.

    For a cyclic group the two readings coincide.
    """
    if isinstance(v, (int, np.integer)):
        return int(v) % A.order
    return A.index(v)


def subgroup_generated(A: AbelianGroup, gens: Iterable) -> frozenset:
    """Subgroup generated by vectors or element indices, as a set of indices."""
    return _closure_indices(A, [element(A, g) for g in gens])


def all_subgroups(A: AbelianGroup) -> list[frozenset]:
    singles = {subgroup_generated(A, [i]) for i in range(A.order)}
    found = set(singles)
    frontier = list(singles)
    while frontier:
        nxt = []
        for S in frontier:
            for T in singles:
                J = subgroup_generated(A, list(S | T))
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


class Cocycle:
    """theta: Q x Q -> A, stored as element indices."""

    def __init__(self, A: AbelianGroup, values: Sequence[Sequence]):
        rows = [list(r) for r in values]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("theta must be a square array over Q x Q")
        self.A = A
        self.values = tuple(tuple(element(A, v) for v in r) for r in rows)

    @classmethod
    def zero(cls, A: AbelianGroup, n: int) -> Cocycle:
        return cls(A, [[A.vec(0)] * n for _ in range(n)])

    @classmethod
    def from_function(cls, A: AbelianGroup, n: int, fn) -> Cocycle:
        return cls(A, [[fn(x, y) for y in range(n)] for x in range(n)])

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, x: int, y: int) -> int:
        return self.values[x][y]

    def __eq__(self, other):
        return isinstance(other, Cocycle) and self.A == other.A and self.values == other.values

    def __hash__(self):
        return hash((self.A, self.values))

    def is_zero_on_diagonal(self) -> bool:
        return all(self.values[x][x] == 0 for x in range(self.n))


@dataclass(frozen=True, eq=False)
class CentralExtension:
    Q: LeftQuasigroup
    A: AbelianGroup
    g: EndoMap
    f: EndoMap
    theta: Cocycle
    E: LeftQuasigroup

    def point(self, x: int, a) -> int:
        return x * self.A.order + element(self.A, a)

    def coords(self, p: int) -> tuple[int, int]:
        return divmod(p, self.A.order)

    @cached_property
    def f_inv(self) -> EndoMap:
        return self.f.inverse()

    @property
    def index_map(self) -> list[tuple[int, tuple]]:
        """Position i holds (x, a) for the i-th point of E."""
        return [(x, self.A.vec(a)) for x, a in map(self.coords, range(self.E.n))]

    def __repr__(self):
        return f"CentralExtension(|Q|={self.Q.n}, A={self.A}, g={self.g.matrix}, f={self.f.matrix})"


def build_extension(Q: LeftQuasigroup, A: AbelianGroup, g: EndoMap, f: EndoMap,
                    theta: Cocycle | None = None) -> CentralExtension:
    if not f.is_automorphism():
        raise NotAnAutomorphismError(f"f = {f} is not an automorphism of {A}")
    if g.A != A or f.A != A:
        raise ValueError("g and f must act on A")
    if theta is None:
        theta = Cocycle.zero(A, Q.n)
    if theta.n != Q.n or theta.A != A:
        raise ValueError("theta must be defined on Q x Q with values in A")
    m = A.order
    add = A.add_table
    table = []
    for x in range(Q.n):
        for a in range(m):
            ga = g(a)
            row = []
            for y in range(Q.n):
                xy = Q.table[x][y]
                shift = add[ga, theta(x, y)]
                row.extend(xy * m + int(add[shift, f(b)]) for b in range(m))
            table.append(row)
    return CentralExtension(Q, A, g, f, theta, LeftQuasigroup(table))


def build_affine(A: AbelianGroup, g: EndoMap, f: EndoMap, c=0) -> LeftQuasigroup:
    """Aff(A, g, f, c): a*b = g(a) + f(b) + c."""
    point = LeftQuasigroup([[0]])
    return build_extension(point, A, g, f, Cocycle(A, [[A.vec(element(A, c))]])).E


def ldiv_formula(ext: CentralExtension, p: int, q: int) -> int:
    """(y,c) \\ (x,a) = (y\\x, f^-1(a - g(c) - theta(y, y\\x)))."""
    A = ext.A
    y, c = ext.coords(p)
    x, a = ext.coords(q)
    yx = ext.Q.ldiv_table[y][x]
    inner = A.sub(A.sub(a, ext.g(c)), ext.theta(y, yx))
    return ext.point(yx, ext.f_inv(inner))


def is_idempotent_extension(Q: LeftQuasigroup, g: EndoMap, f: EndoMap, theta: Cocycle) -> bool:
    """Q idempotent, g = 1 - f and theta vanishing on the diagonal."""
    one = EndoMap.identity(f.A)
    return Q.predicates.idempotent and g == one - f and theta.is_zero_on_diagonal()


# -- canonical congruences ---------------------------------------------------

def _as_subgroup(A: AbelianGroup, N) -> frozenset:
    """A subgroup given as a frozenset of indices, or by generators."""
    if isinstance(N, frozenset):
        if subgroup_generated(A, N) != N:
            raise ValueError("index set is not a subgroup")
        return N
    return subgroup_generated(A, N)


def is_invariant(ext: CentralExtension, N) -> bool:
    """g(N) <= N and f(N) = N."""
    N = _as_subgroup(ext.A, N)
    return {ext.g(i) for i in N} <= N and {ext.f(i) for i in N} == N


def alpha_N_unchecked(ext: CentralExtension, N) -> Partition:
    """(x,a) ~ (y,b) iff x = y and a - b in N, without the invariance check."""
    A = ext.A
    N = _as_subgroup(A, N)
    m = A.order
    coset_min = [min(A.add(a, s) for s in N) for a in range(m)]
    return Partition([x * m + coset_min[a] for x in range(ext.Q.n) for a in range(m)])


def alpha_N(ext: CentralExtension, N) -> Partition:
    if not is_invariant(ext, N):
        raise InvarianceError("alpha_N needs g(N) <= N and f(N) = N")
    return alpha_N_unchecked(ext, N)


def ker_p1(ext: CentralExtension) -> Partition:
    m = ext.A.order
    return Partition([(p // m) * m for p in range(ext.E.n)])


def h_subgroup(ext: CentralExtension) -> frozenset:
    """H = <f^k g(A) : k in Z>, as a set of element indices."""
    A = ext.A
    seeds = {ext.g(a) for a in range(A.order)}
    frontier = list(seeds)
    while frontier:
        nxt = []
        for s in frontier:
            t = ext.f(s)
            if t not in seeds:
                seeds.add(t)
                nxt.append(t)
        frontier = nxt
    return _closure_indices(A, seeds)


def _closure_indices(A: AbelianGroup, idx) -> frozenset:
    S = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for g in idx:
                t = A.add(s, g)
                if t not in S:
                    S.add(t)
                    nxt.append(t)
        frontier = nxt
    return frozenset(S)


# -- displacement action -----------------------------------------------------

def _translations(ext: CentralExtension) -> np.ndarray:
    """Row e is the permutation (y, c) -> (y, c + e) of E."""
    m = ext.A.order
    pts = np.arange(ext.E.n)
    return (pts // m) * m + ext.A.add_table[pts % m].T


def displacement_action_check(ext: CentralExtension) -> bool:
    """Conjugates of L_(x,a) L_(x,b)^-1 act as translations by f^k g(a - b).

    Checked for h = L_(z,d)^k over every (z, d) and every k up to the order of
    L_(z,d); the remaining coset factor w in Dis(E) is covered by checking
    that every generator of Dis(E) commutes with every such translation.
    """
    E, A = ext.E, ext.A
    T = E.np_table
    D = E.np_ldiv
    m = A.order
    shift = _translations(ext)
    fpow = [np.arange(m)]
    for _ in range(1, max(1, _aut_order(ext.f))):
        fpow.append(ext.f.np_images[fpow[-1]])
    taus = {}
    for x in range(ext.Q.n):
        for a in range(m):
            for b in range(m):
                p, q = x * m + a, x * m + b
                tau = T[p][D[q]]
                e = ext.g(A.sub(a, b))
                if not np.array_equal(tau, shift[e]):
                    return False
                taus[(p, q)] = (tau, e)
    for zd in range(E.n):
        L = T[zd]
        Linv = D[zd]
        k_order = perm_order(tuple(int(v) for v in L))
        P, Pinv = np.arange(E.n), np.arange(E.n)
        for k in range(k_order):
            for tau, e in taus.values():
                conj = P[tau[Pinv]]
                ek = int(fpow[k % len(fpow)][e])
                if not np.array_equal(conj, shift[ek]):
                    return False
            P, Pinv = L[P], Pinv[Linv]
    for w in E.dis.generators:
        w = np.array(w)
        for tau, _ in taus.values():
            if not np.array_equal(w[tau], tau[w]):
                return False
    return True


def _aut_order(f: EndoMap) -> int:
    return perm_order(f.images)


def dis_ker_p1_translations(ext: CentralExtension) -> set:
    """The group predicted for Dis_{ker p1}: translations by elements of H."""
    shift = _translations(ext)
    return {tuple(int(v) for v in shift[e]) for e in h_subgroup(ext)}


def block_connectivity_check(ext: CentralExtension) -> bool:
    """Orbits of Dis_{ker p1} are (y, c + H); when they fill the blocks of ker p1
    each block is a connected subalgebra."""
    from .displ import dis_alpha

    if not ext.Q.predicates.idempotent:
        raise ValueError("block connectivity needs an idempotent base")
    E, A = ext.E, ext.A
    m = A.order
    alpha = ker_p1(ext)
    H = h_subgroup(ext)
    predicted = Partition([(p // m) * m + min(A.add(p % m, h) for h in H) for p in range(E.n)])
    if orbits(dis_alpha(E, alpha)) != predicted:
        return False
    if predicted == alpha:
        for block in alpha.blocks():
            sub, _ = subalgebra(E, block)
            if not is_transitive(sub.lmlt):
                return False
    return True


# -- term form ---------------------------------------------------------------

def term_form_violations(ext: CentralExtension, terms: Sequence[Term], arity: int) -> list:
    """Terms whose E-operation is not (t^Q(x), sum_j G_j(a_j) + Theta(x)).

    Tests, over every input tuple, that the Q-coordinate is t^Q of the
    projections and that shifting a_j by d changes the A-coordinate by an
    amount depending only on j and d.
    """
    E, Q, A = ext.E, ext.Q, ext.A
    m = A.order
    grids = np.meshgrid(*[np.arange(E.n)] * arity, indexing="ij")
    args = [gr.ravel() for gr in grids]
    qargs = [a // m for a in args]
    shape = (E.n,) * arity
    bad = []
    for t in terms:
        v = eval_term_array(E.np_table, E.np_ldiv, t, args)
        if not np.array_equal(v // m, eval_term_array(Q.np_table, Q.np_ldiv, t, qargs)):
            bad.append((t, "first coordinate"))
            continue
        va = (v % m).reshape(shape)
        ok = True
        for j in range(arity):
            base = np.arange(E.n)
            for d in range(1, m):
                shifted = (base // m) * m + A.add_table[base % m, d]
                moved = np.take(va, shifted, axis=j)
                diff = A.add_table[moved, A.neg_table[va]]
                if not (diff == diff.flat[0]).all():
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            bad.append((t, "A coordinate"))
    return bad


def random_terms(count: int, arity: int, depth: int, seed: int) -> list[Term]:
    rng = random.Random(seed)
    return [random_term(rng, arity, depth) for _ in range(count)]
