"""A small permutation-group engine.

Permutations are plain tuples: ``p[i]`` is the image of ``i``.  Composition
follows the left-action convention ``compose(p, q)(i) == p(q(i))``.

Groups are materialized eagerly by breadth-first closure over their
generators.  That is only sensible for the desk-scale degrees this package
targets, so every materialization is bounded by ``limits.max_group_order``.
"""

from __future__ import annotations

from operator import itemgetter
from typing import Iterable, Sequence

from .config import limits
from .errors import CapacityError
from .partition import Partition, UnionFind

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def conjugate(g: Perm, h: Perm) -> Perm:
    """g h g^-1."""
    ginv = inverse(g)
    return tuple(g[h[ginv[i]]] for i in range(len(g)))


def commutator(a: Perm, b: Perm) -> Perm:
    """a^-1 b^-1 a b."""
    return compose(inverse(a), compose(inverse(b), compose(a, b)))


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    out = identity(len(p))
    base = p
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


def perm_order(p: Perm) -> int:
    ident = identity(len(p))
    q, k = p, 1
    while q != ident:
        q, k = compose(q, p), k + 1
    return k


def _bfs(gens: Sequence[Perm], degree: int, start: Iterable[Perm] = ()) -> frozenset:
    ident = identity(degree)
    elements = set(start)
    elements.add(ident)
    if degree < 2 or not gens:
        return frozenset(elements)
    cap = limits.max_group_order
    # compose(e, g) == itemgetter(*g)(e)
    getters = [itemgetter(*g) for g in gens]
    frontier = list(elements)
    while frontier:
        nxt = []
        for e in frontier:
            for get in getters:
                x = get(e)
                if x not in elements:
                    elements.add(x)
                    nxt.append(x)
        if len(elements) > cap:
            raise CapacityError("permutation group order", cap, stage="closure")
        frontier = nxt
    return frozenset(elements)


class PermGroup:
    """A finitely generated permutation group of a fixed degree.

    Equality and hashing go through the materialized element set, so two
    groups built from different generators compare equal when they coincide.
    """

    __slots__ = ("degree", "generators", "_elements", "_hash")

    def __init__(self, degree: int, generators: Iterable[Perm] = (), elements=None):
        ident = identity(degree)
        gens = []
        seen = set()
        for g in generators:
            g = tuple(g)
            if len(g) != degree:
                raise ValueError(f"generator {g} does not have degree {degree}")
            if g != ident and g not in seen:
                seen.add(g)
                gens.append(g)
        self.degree = degree
        self.generators = tuple(sorted(gens))
        self._elements = elements
        self._hash = None

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = _bfs(self.generators, self.degree)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __eq__(self, other):
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, self.elements))
        return self._hash

    def __le__(self, other: PermGroup) -> bool:
        return is_subgroup(self, other)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def is_trivial(self) -> bool:
        return not self.generators

    def sort_key(self):
        return (self.order, tuple(sorted(self.elements)))

    def identity(self) -> Perm:
        return identity(self.degree)


def close(gens: Iterable[Perm], degree: int | None = None) -> PermGroup:
    gens = [tuple(g) for g in gens]
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generating set")
        degree = len(gens[0])
    G = PermGroup(degree, gens)
    G.elements  # materialize now so capacity errors surface here
    return G


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, (), frozenset([identity(degree)]))


def orbits(G: PermGroup) -> Partition:
    uf = UnionFind(G.degree)
    for g in G.generators:
        for i, gi in enumerate(g):
            uf.union(i, gi)
    return Partition(uf.labels())


def normal_closure(ambient: PermGroup, seed: Iterable[Perm]) -> PermGroup:
    """Smallest subgroup containing seed and normalized by ambient."""
    degree = ambient.degree
    ident = identity(degree)
    gens: list[Perm] = []
    for s in seed:
        s = tuple(s)
        if s != ident and s not in gens:
            gens.append(s)
    if not gens:
        return trivial_group(degree)
    conj = [(g, inverse(g)) for g in ambient.generators]
    elements = _bfs(gens, degree)
    queue = list(gens)
    while queue:
        h = queue.pop()
        for g, ginv in conj:
            c = tuple(g[h[ginv[i]]] for i in range(degree))
            if c not in elements:
                gens.append(c)
                queue.append(c)
                elements = _bfs(gens, degree, start=elements)
    return PermGroup(degree, gens, elements)


def join(N: PermGroup, M: PermGroup) -> PermGroup:
    if M.elements <= N.elements:
        return N
    if N.elements <= M.elements:
        return M
    gens = N.generators + M.generators
    return PermGroup(N.degree, gens, _bfs(gens, N.degree, start=N.elements))


def conjugacy_class(G: PermGroup, x: Perm) -> set:
    conj = [(g, inverse(g)) for g in G.generators]
    n = G.degree
    cls = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for h in frontier:
            for g, ginv in conj:
                c = tuple(g[h[ginv[i]]] for i in range(n))
                if c not in cls:
                    cls.add(c)
                    nxt.append(c)
        frontier = nxt
    return cls


def all_normal_subgroups(G: PermGroup, within: PermGroup | None = None) -> list[PermGroup]:
    """Every normal subgroup of G, or only those contained in ``within``.

    ``within`` must itself be normal in G.  Each normal subgroup is the join
    of the normal closures of its elements, so closing the set of
    single-element normal closures under joins is exhaustive.
    """
    pool = (within if within is not None else G).elements
    cap = limits.max_normal_subgroups
    ident = identity(G.degree)
    seen: set = set()
    minimal: dict[frozenset, PermGroup] = {}
    for x in sorted(pool):
        if x in seen or x == ident:
            continue
        cls = conjugacy_class(G, x)
        seen |= cls
        N = normal_closure(G, [x])
        minimal.setdefault(N.elements, N)
    result: dict[frozenset, PermGroup] = {}
    triv = trivial_group(G.degree)
    result[triv.elements] = triv
    for C in sorted(minimal.values(), key=PermGroup.sort_key):
        for N in list(result.values()):
            J = join(N, C)
            if J.elements not in result:
                result[J.elements] = J
                if len(result) > cap:
                    raise CapacityError("number of normal subgroups", cap, stage="normal subgroups")
    return sorted(result.values(), key=PermGroup.sort_key)


def pointwise_stabilizer(G: PermGroup, x: int) -> PermGroup:
    elems = frozenset(g for g in G.elements if g[x] == x)
    return PermGroup(G.degree, elems, elems)


def center_of(G: PermGroup) -> PermGroup:
    gens = G.generators
    elems = frozenset(
        z for z in G.elements if all(compose(z, g) == compose(g, z) for g in gens)
    )
    return PermGroup(G.degree, elems, elems)


def commutator_subgroup(N: PermGroup, M: PermGroup) -> PermGroup:
    if N.degree != M.degree:
        raise ValueError("degree mismatch")
    comms = {commutator(a, b) for a in N.elements for b in M.elements}
    return close(comms, N.degree)


def is_subgroup(N: PermGroup, G: PermGroup) -> bool:
    if N.degree != G.degree:
        return False
    if G._elements is not None:
        return all(g in G._elements for g in N.generators)
    return N.elements <= G.elements


def is_normal_in(N: PermGroup, G: PermGroup) -> bool:
    if not is_subgroup(N, G):
        return False
    elems = N.elements
    return all(conjugate(g, h) in elems for g in G.generators for h in N.generators)


def is_transitive(G: PermGroup) -> bool:
    return orbits(G).num_blocks <= 1


def image_group(G: PermGroup, point_map: Sequence[int], m: int) -> PermGroup:
    """The group induced by G on the blocks of a G-invariant block system.

    ``point_map[i]`` is the block index of point i.  Only generators are
    mapped, which is enough because the induced action is a homomorphism.
    """
    reps = {}
    for i, b in enumerate(point_map):
        reps.setdefault(b, i)
    images = [tuple(point_map[g[reps[b]]] for b in range(m)) for g in G.generators]
    return close(images, m)
