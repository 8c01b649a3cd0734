"""Finite left quasigroups given by Cayley tables.

``table[x][y]`` is ``x*y``.  Every row must be a permutation; the left
division ``x\\y`` is read off the inverse of row x.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Sequence, Union

import numpy as np

from .errors import CapacityError, MalformedTableError, NotACongruenceError
from .partition import Partition
from .perm import PermGroup, close, compose, inverse, normal_closure

MAX_ISO_ORDER = 10


class LeftQuasigroup:
    def __init__(self, table: Sequence[Sequence[int]]):
        rows = _check_table(table)
        self.n = len(rows)
        self.table = rows
        self.ldiv_table = tuple(inverse(r) for r in rows)
        self._memo = {}

    def __eq__(self, other):
        return isinstance(other, LeftQuasigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"LeftQuasigroup({[list(r) for r in self.table]})"

    def memo(self, key, fn):
        """Cache fn() under key for the lifetime of this (immutable) object."""
        try:
            return self._memo[key]
        except KeyError:
            val = self._memo[key] = fn()
            return val

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def ldiv(self, x: int, y: int) -> int:
        return self.ldiv_table[x][y]

    def L(self, x: int):
        return self.table[x]

    def R(self, x: int):
        return tuple(row[x] for row in self.table)

    @cached_property
    def np_table(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64).reshape(self.n, self.n)

    @cached_property
    def np_ldiv(self) -> np.ndarray:
        return np.array(self.ldiv_table, dtype=np.int64).reshape(self.n, self.n)

    @cached_property
    def lmlt(self) -> PermGroup:
        return close(self.table, self.n)

    @cached_property
    def dis(self) -> PermGroup:
        # normal closure, not the plain span: for left quasigroups that are
        # not racks the span of the L_x L_y^-1 need not be normal
        base_inv = self.ldiv_table[0]
        seed = [compose(r, base_inv) for r in self.table]
        return normal_closure(self.lmlt, seed)

    @cached_property
    def predicates(self) -> Predicates:
        return predicates(self)


def _check_table(table) -> tuple:
    try:
        rows = [list(r) for r in table]
    except TypeError:
        raise MalformedTableError("table must be a sequence of rows")
    n = len(rows)
    if n == 0:
        raise MalformedTableError("a left quasigroup needs at least one element")
    out = []
    for x, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTableError(f"row {x} has length {len(row)}, expected {n}")
        for y, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise MalformedTableError(f"entry ({x},{y}) is not an integer: {v!r}")
            if not 0 <= v < n:
                raise MalformedTableError(f"entry ({x},{y}) = {v} out of range 0..{n - 1}")
        if len(set(row)) != n:
            dup = next(v for v in row if row.count(v) > 1)
            raise MalformedTableError(f"row {x} repeats entry {dup}; L_{x} is not a bijection")
        out.append(tuple(int(v) for v in row))
    return tuple(out)


def validate(table) -> LeftQuasigroup:
    return LeftQuasigroup(table)


def op(Q: LeftQuasigroup, x: int, y: int) -> int:
    return Q.table[x][y]


def ldiv(Q: LeftQuasigroup, x: int, y: int) -> int:
    return Q.ldiv_table[x][y]


# -- named structures -------------------------------------------------------

def projection(n: int) -> LeftQuasigroup:
    """x*y = y."""
    return LeftQuasigroup([list(range(n))] * n)


def dihedral(n: int) -> LeftQuasigroup:
    """x*y = 2x - y mod n."""
    return LeftQuasigroup([[(2 * x - y) % n for y in range(n)] for x in range(n)])


def cyclic_affine(n: int, g: int, f: int, c: int = 0) -> LeftQuasigroup:
    """x*y = g x + f y + c over Z_n; f must be a unit."""
    return LeftQuasigroup([[(g * x + f * y + c) % n for y in range(n)] for x in range(n)])


# -- predicates -------------------------------------------------------------

@dataclass(frozen=True)
class Predicates:
    idempotent: bool
    rack: bool
    quandle: bool
    latin: bool
    projection: bool

    def as_dict(self):
        return dict(self.__dict__)


def is_rack(Q: LeftQuasigroup) -> bool:
    T = Q.table
    r = range(Q.n)
    return all(T[x][T[y][z]] == T[T[x][y]][T[x][z]] for x in r for y in r for z in r)


def predicates(Q: LeftQuasigroup) -> Predicates:
    T, n = Q.table, Q.n
    idem = all(T[x][x] == x for x in range(n))
    rack = is_rack(Q)
    latin = all(len({T[x][y] for x in range(n)}) == n for y in range(n))
    ident = tuple(range(n))
    proj = all(row == ident for row in T)
    return Predicates(idem, rack, idem and rack, latin, proj)


def idempotent_elements(Q: LeftQuasigroup) -> set[int]:
    return {x for x in range(Q.n) if Q.table[x][x] == x}


def lmlt(Q: LeftQuasigroup) -> PermGroup:
    return Q.lmlt


def dis(Q: LeftQuasigroup) -> PermGroup:
    return Q.dis


# -- subalgebras --------------------------------------------------------------

def subuniverse_generated(Q: LeftQuasigroup, S) -> frozenset:
    S = set(S)
    if not S:
        raise ValueError("generating set must be nonempty")
    T, D = Q.table, Q.ldiv_table
    frontier = list(S)
    while frontier:
        nxt = []
        current = list(S)
        for a in frontier:
            for b in current:
                for v in (T[a][b], T[b][a], D[a][b], D[b][a]):
                    if v not in S:
                        S.add(v)
                        nxt.append(v)
        frontier = nxt
    return frozenset(S)


def all_subalgebras(Q: LeftQuasigroup) -> list[frozenset]:
    """Every nonempty subuniverse, sorted by (size, elements).

    Each subuniverse is the join of the subuniverses generated by its
    points, so closing the singleton closures under joins is exhaustive.
    """
    def build():
        singles = {subuniverse_generated(Q, [x]) for x in range(Q.n)}
        family = set(singles)
        frontier = list(singles)
        while frontier:
            nxt = []
            for A in frontier:
                for B in singles:
                    if B <= A:
                        continue
                    J = subuniverse_generated(Q, A | B)
                    if J not in family:
                        family.add(J)
                        nxt.append(J)
            frontier = nxt
        return sorted(family, key=lambda s: (len(s), sorted(s)))
    return Q.memo("subalgebras", build)


def subalgebra(Q: LeftQuasigroup, S) -> tuple[LeftQuasigroup, tuple[int, ...]]:
    """The subalgebra on S as a table over 0..|S|-1, plus the sorted points."""
    pts = tuple(sorted(S))
    idx = {p: i for i, p in enumerate(pts)}
    try:
        table = [[idx[Q.table[a][b]] for b in pts] for a in pts]
    except KeyError:
        raise ValueError(f"{set(pts)} is not closed under multiplication")
    return LeftQuasigroup(table), pts


# -- quotients ---------------------------------------------------------------

def compatible(Q: LeftQuasigroup, alpha: Partition) -> bool:
    """True iff alpha respects both * and \\."""
    if alpha.n != Q.n:
        return False
    lab = alpha.labels
    T, D = Q.table, Q.ldiv_table
    n = Q.n
    # comparing against block representatives is enough: alpha is transitive
    for x in range(n):
        rx = lab[x]
        if rx == x:
            continue
        Tx, Trx, Dx, Drx = T[x], T[rx], D[x], D[rx]
        for y in range(n):
            if lab[Tx[y]] != lab[Trx[y]] or lab[Dx[y]] != lab[Drx[y]]:
                return False
    for x in range(n):
        Tx, Dx = T[x], D[x]
        for y in range(n):
            ry = lab[y]
            if ry != y and (lab[Tx[y]] != lab[Tx[ry]] or lab[Dx[y]] != lab[Dx[ry]]):
                return False
    return True


def quotient(Q: LeftQuasigroup, alpha: Partition) -> tuple[LeftQuasigroup, tuple[int, ...]]:
    """Q/alpha with blocks numbered by their minima, plus the point->block map."""
    if not compatible(Q, alpha):
        raise NotACongruenceError(f"{alpha} is not a congruence")

    def build():
        bmap = alpha.block_index()
        reps = [b[0] for b in alpha.blocks()]
        table = [[bmap[Q.table[a][b]] for b in reps] for a in reps]
        return LeftQuasigroup(table), bmap
    return Q.memo(("quotient", alpha), build)


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left}*{self.right})"


@dataclass(frozen=True)
class LDiv:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left}\\{self.right})"


Term = Union[Var, Mul, LDiv]


def term_arity(t: Term) -> int:
    if isinstance(t, Var):
        return t.index + 1
    return max(term_arity(t.left), term_arity(t.right))


def term_size(t: Term) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + term_size(t.left) + term_size(t.right)


def eval_term(Q: LeftQuasigroup, t: Term, args: Sequence[int]) -> int:
    if term_arity(t) > len(args):
        raise ValueError(f"term needs {term_arity(t)} arguments, got {len(args)}")
    return _eval(Q, t, args)


def _eval(Q, t, args):
    if isinstance(t, Var):
        return args[t.index]
    a, b = _eval(Q, t.left, args), _eval(Q, t.right, args)
    if isinstance(t, Mul):
        return Q.table[a][b]
    return Q.ldiv_table[a][b]


def eval_term_array(mul: np.ndarray, div: np.ndarray, t: Term, args):
    """Evaluate t elementwise over integer arrays (one array per variable)."""
    if isinstance(t, Var):
        return args[t.index]
    a = eval_term_array(mul, div, t.left, args)
    b = eval_term_array(mul, div, t.right, args)
    return (mul if isinstance(t, Mul) else div)[a, b]


def random_term(rng: random.Random, nvars: int, depth: int) -> Term:
    """A random term over x0..x{nvars-1} of depth at most ``depth``."""
    if depth == 0 or rng.random() < 0.3:
        return Var(rng.randrange(nvars))
    ctor = Mul if rng.random() < 0.5 else LDiv
    return ctor(random_term(rng, nvars, depth - 1), random_term(rng, nvars, depth - 1))


# -- isomorphism -------------------------------------------------------------

def _point_invariants(Q: LeftQuasigroup):
    T = Q.table
    out = []
    for x in range(Q.n):
        row = T[x]
        fixed = sum(1 for y in range(Q.n) if row[y] == y)
        col = sorted({T[y][x] for y in range(Q.n)})
        out.append((T[x][x] == x, fixed, len(col), _cycle_type(row)))
    return out


def _cycle_type(p) -> tuple:
    seen = [False] * len(p)
    lens = []
    for i in range(len(p)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            lens.append(k)
    return tuple(sorted(lens))


def find_isomorphism(Q: LeftQuasigroup, P: LeftQuasigroup):
    """A bijection phi with phi(x*y) = phi(x)*phi(y), or None."""
    n = Q.n
    if n != P.n:
        return None
    if n > MAX_ISO_ORDER:
        raise CapacityError("isomorphism test order", MAX_ISO_ORDER, stage="are_isomorphic")
    inv_q, inv_p = _point_invariants(Q), _point_invariants(P)
    if sorted(inv_q) != sorted(inv_p):
        return None
    candidates = [[y for y in range(n) if inv_p[y] == inv_q[x]] for x in range(n)]
    TQ, TP = Q.table, P.table
    phi = [-1] * n
    used = [False] * n

    def consistent(x):
        # every product whose three points are now all assigned, with x among them
        for a in range(x + 1):
            Ta = TQ[a]
            for b in range(x + 1):
                c = Ta[b]
                if c <= x and x in (a, b, c) and phi[c] != TP[phi[a]][phi[b]]:
                    return False
        return True

    def rec(x):
        if x == n:
            return True
        for y in candidates[x]:
            if not used[y]:
                phi[x] = y
                used[y] = True
                if consistent(x) and rec(x + 1):
                    return True
                used[y] = False
        phi[x] = -1
        return False

    return tuple(phi) if rec(0) else None


def are_isomorphic(Q: LeftQuasigroup, P: LeftQuasigroup) -> bool:
    return find_isomorphism(Q, P) is not None


def relabel(Q: LeftQuasigroup, phi: Sequence[int]) -> LeftQuasigroup:
    """The isomorphic copy of Q obtained by renaming x to phi[x]."""
    n = Q.n
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            table[phi[x]][phi[y]] = phi[Q.table[x][y]]
    return LeftQuasigroup(table)


def canonical_table(Q: LeftQuasigroup) -> tuple:
    """Lexicographically least relabeled table; brute force over n! maps."""
    if Q.n > 8:
        raise CapacityError("canonical form order", 8, stage="isomorph rejection")
    n, T = Q.n, Q.table
    best = None
    for phi in permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(phi):
            inv[p] = i
        t = tuple(tuple(phi[T[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or t < best:
            best = t
    return best
