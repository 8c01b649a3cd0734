"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's group or lattice code: groups are plain
frozensets of tuples, equivalences are label tuples, and every object is
computed straight from its definition.
"""

from __future__ import annotations

from itertools import combinations


def compose(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def generate(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    stack = [ident]
    gens = list(gens)
    while stack:
        g = stack.pop()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return frozenset(seen)


def rows(table):
    return [tuple(r) for r in table]


def lmlt(table):
    return generate(rows(table), len(table))


def dis_by_exponents(table):
    """Words in the L_x with exponent sum zero, via the group LMlt x Z_M."""
    n = len(table)
    L = rows(table)
    M = 1
    p = L[0]
    while True:
        q = p
        for _ in range(M - 1):
            q = compose(p, q)
        if q == tuple(range(n)):
            break
        M += 1
    start = (tuple(range(n)), 0)
    seen = {start}
    stack = [start]
    while stack:
        g, s = stack.pop()
        for x in L:
            h = (compose(x, g), (s + 1) % M)
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return frozenset(g for g, s in seen if s == 0)


def normal_closure(G, seeds, n):
    conj = {compose(compose(h, s), inverse(h)) for h in G for s in seeds}
    return generate(conj, n)


def labels_of(blocks, n):
    lab = [0] * n
    for b in blocks:
        m = min(b)
        for x in b:
            lab[x] = m
    return tuple(lab)


def all_equivalences(n):
    def rec(i, blocks):
        if i == n:
            yield labels_of(blocks, n)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()
    return list(rec(0, []))


def leq(a, b):
    return all(b[x] == b[a[x]] for x in range(len(a)))


def is_congruence(table, lab):
    n = len(table)
    ld = [inverse(r) for r in rows(table)]
    for x in range(n):
        for z in range(n):
            if lab[x] != lab[z]:
                continue
            for y in range(n):
                for t in range(n):
                    if lab[y] == lab[t]:
                        if lab[table[x][y]] != lab[table[z][t]] or lab[ld[x][y]] != lab[ld[z][t]]:
                            return False
    return True


def congruences(table):
    return [a for a in all_equivalences(len(table)) if is_congruence(table, a)]


def orbit_rel(N, n):
    return tuple(min(h[x] for h in N) for x in range(n))


def cayley_rel(table, N):
    n = len(table)
    L = rows(table)
    out = []
    for x in range(n):
        out.append(min(y for y in range(n) if compose(L[x], inverse(L[y])) in N))
    return tuple(out)


def dis_low(table, lab):
    n = len(table)
    L = rows(table)
    seeds = [compose(L[x], inverse(L[y])) for x in range(n) for y in range(n) if lab[x] == lab[y]]
    return normal_closure(lmlt(table), seeds, n)


def dis_high(table, lab):
    n = len(table)
    return frozenset(h for h in dis_by_exponents(table) if all(lab[h[x]] == lab[x] for x in range(n)))


def normal_subgroups(G, n):
    """Unions of conjugacy classes that are closed under composition."""
    G = list(G)
    classes = []
    seen = set()
    for g in sorted(G):
        if g in seen:
            continue
        cl = frozenset(compose(compose(h, g), inverse(h)) for h in G)
        seen |= cl
        classes.append(cl)
    ident = tuple(range(n))
    others = [c for c in classes if ident not in c]
    out = []
    for k in range(len(others) + 1):
        for pick in combinations(others, k):
            S = frozenset({ident}).union(*pick)
            if all(compose(a, b) in S for a in S for b in S):
                out.append(S)
    return out


def norm_prime(table):
    n = len(table)
    D = dis_by_exponents(table)
    return [N for N in normal_subgroups(lmlt(table), n)
            if N <= D and leq(orbit_rel(N, n), cayley_rel(table, N))]


def quotient(table, lab):
    reps = sorted(set(lab))
    idx = {r: i for i, r in enumerate(reps)}
    return [[idx[lab[table[x][y]]] for y in reps] for x in reps]


def quotient_rel(a, b):
    """b/a on the blocks of a (a <= b)."""
    reps = sorted(set(a))
    return tuple(min(j for j, r in enumerate(reps) if b[r] == b[ri]) for ri in reps)


def cayley_kernel(table):
    L = rows(table)
    return tuple(min(y for y in range(len(L)) if L[y] == L[x]) for x in range(len(L)))


def is_sharp(table):
    cons = congruences(table)
    for a in cons:
        lam = cayley_kernel(quotient(table, a))
        for b in cons:
            if a != b and leq(a, b) and leq(quotient_rel(a, b), lam):
                return False
    return True


def is_cdsg(table):
    cons = congruences(table)
    adm = norm_prime(table)
    if len(cons) != len(adm):
        return False
    for a in cons:
        if cayley_rel(table, dis_low(table, a)) != a:
            return False
    for N in adm:
        c = cayley_rel(table, N)
        if not is_congruence(table, c) or dis_low(table, c) != N:
            return False
    return True


def is_cdos(table):
    n = len(table)
    cons = congruences(table)
    adm = norm_prime(table)
    if len(cons) != len(adm):
        return False
    for a in cons:
        if orbit_rel(dis_high(table, a), n) != a:
            return False
    for N in adm:
        o = orbit_rel(N, n)
        if not is_congruence(table, o) or dis_high(table, o) != N:
            return False
    return True


def matrix_closure(table, a, b):
    """All (t(x,z),t(x,u),t(y,z),t(y,u)) for x a y and z b u, by plain set closure."""
    n = len(table)
    ld = [inverse(r) for r in rows(table)]
    gens = {(x, x, y, y) for x in range(n) for y in range(n) if a[x] == a[y]}
    gens |= {(z, u, z, u) for z in range(n) for u in range(n) if b[z] == b[u]}
    S = set(gens)
    frontier = list(S)
    while frontier:
        new = []
        cur = list(S)
        for p in frontier:
            for q in cur:
                for r in (tuple(table[p[i]][q[i]] for i in range(4)),
                          tuple(table[q[i]][p[i]] for i in range(4)),
                          tuple(ld[p[i]][q[i]] for i in range(4)),
                          tuple(ld[q[i]][p[i]] for i in range(4))):
                    if r not in S:
                        S.add(r)
                        new.append(r)
        frontier = new
    return S


def centralizes(table, a, b, d):
    return all(d[m[2]] == d[m[3]] for m in matrix_closure(table, a, b) if d[m[0]] == d[m[1]])


def meet_all(labs, n):
    if not labs:
        return (0,) * n
    groups = {}
    for x in range(n):
        groups.setdefault(tuple(l[x] for l in labs), []).append(x)
    lab = [0] * n
    for g in groups.values():
        for x in g:
            lab[x] = min(g)
    return tuple(lab)


def commutator(table, a, b):
    n = len(table)
    ok = [d for d in congruences(table) if centralizes(table, a, b, d)]
    return meet_all(ok, n)


def center(table):
    n = len(table)
    top = (0,) * n
    zero = tuple(range(n))
    ok = [c for c in congruences(table) if centralizes(table, c, top, zero)]
    best = [c for c in ok if all(leq(o, c) for o in ok)]
    assert len(best) == 1
    return best[0]
