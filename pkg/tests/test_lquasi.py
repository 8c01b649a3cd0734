import random
from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

import oracles
from quasigalois.congr import all_congruences
from quasigalois.errors import MalformedTableError
from quasigalois.lquasi import (
    LDiv, LeftQuasigroup, Mul, Var, all_subalgebras, are_isomorphic, canonical_table,
    cyclic_affine, dihedral, eval_term, eval_term_array, idempotent_elements, is_rack,
    ldiv, op, projection, quotient, random_term, relabel, subalgebra, subuniverse_generated,
    validate,
)
from quasigalois.partition import Partition
from quasigalois.perm import compose, inverse, is_normal_in
from strategies import left_quasigroups

P2 = projection(2)
R3 = dihedral(3)
R4 = dihedral(4)
SHIFT = LeftQuasigroup([[1, 0], [1, 0]])   # x*y = y+1 over Z_2


def test_validate():
    assert validate([[0, 1], [0, 1]]) == P2
    assert validate([[(2 * x - y) % 3 for y in range(3)] for x in range(3)]) == R3
    with pytest.raises(MalformedTableError, match="row 0"):
        validate([[0, 0], [1, 1]])
    for bad in ([], [[0, 1]], [[0, 2], [1, 0]], [[0, 1.0], [1, 0]], 5):
        with pytest.raises(MalformedTableError):
            validate(bad)


def test_op_and_ldiv():
    assert op(P2, 0, 1) == 1
    assert op(R3, 1, 0) == 2
    for x in range(3):
        for y in range(3):
            assert ldiv(R3, x, op(R3, x, y)) == y


def test_predicates():
    p = P2.predicates
    assert (p.idempotent, p.rack, p.quandle, p.latin, p.projection) == (True, True, True, False, True)
    r = R3.predicates
    assert r.quandle and r.latin and not r.projection
    s = SHIFT.predicates
    assert not s.idempotent and s.rack
    # every column of x*y = y+1 is constant, so it is not latin
    assert not s.latin


def test_idempotent_elements():
    assert idempotent_elements(P2) == {0, 1}
    assert idempotent_elements(SHIFT) == set()
    assert idempotent_elements(R3) == {0, 1, 2}


def test_lmlt_and_dis():
    for k in (1, 2, 4):
        assert projection(k).lmlt.is_trivial() and projection(k).dis.is_trivial()
    assert R3.lmlt.order == 6
    assert R3.dis.order == 3 and (1, 2, 0) in R3.dis
    assert SHIFT.lmlt.order == 2 and SHIFT.dis.is_trivial()


def test_subuniverses():
    assert subuniverse_generated(R3, range(3)) == frozenset(range(3))
    assert subuniverse_generated(R3, {0}) == {0}
    assert subuniverse_generated(R4, {0, 2}) == {0, 2}
    S, pts = subalgebra(R4, {0, 2})
    assert pts == (0, 2) and S == P2
    with pytest.raises(ValueError):
        subuniverse_generated(R3, set())


def test_quotients():
    assert quotient(R3, Partition.discrete(3))[0] == R3
    assert quotient(R3, Partition.full(3))[0].n == 1
    Q, bmap = quotient(R4, Partition.from_blocks([[0, 2], [1, 3]], 4))
    assert Q == P2 and bmap == (0, 1, 0, 1)


def test_terms():
    t = LDiv(Var(0), Mul(Var(0), Var(1)))
    for x in range(3):
        for y in range(3):
            assert eval_term(R3, t, (x, y)) == y
    assert eval_term(R3, Var(0), (2, 1)) == 2
    assert eval_term(R3, Mul(Var(0), Var(1)), (1, 0)) == 2


def test_isomorphism():
    assert are_isomorphic(R3, R3)
    assert not are_isomorphic(P2, SHIFT)
    assert are_isomorphic(R3, relabel(R3, (1, 2, 0)))
    assert not are_isomorphic(R3, P2)


def brute_subuniverses(Q):
    n = Q.n
    out = []
    for mask in range(1, 1 << n):
        S = {x for x in range(n) if mask >> x & 1}
        if all(Q.op(a, b) in S and Q.ldiv(a, b) in S for a in S for b in S):
            out.append(frozenset(S))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@given(left_quasigroups(max_n=4))
def test_axioms(Q):
    for x in range(Q.n):
        for y in range(Q.n):
            assert Q.ldiv(x, Q.op(x, y)) == y
            assert Q.op(x, Q.ldiv(x, y)) == y


@given(left_quasigroups(max_n=4))
def test_rack_iff_rows_are_endomorphisms(Q):
    T, r = Q.table, range(Q.n)
    endo = all(T[x][T[y][z]] == T[T[x][y]][T[x][z]] for x in r for y in r for z in r)
    assert is_rack(Q) == endo == Q.predicates.rack


@given(left_quasigroups(max_n=4))
def test_groups_match_oracle(Q):
    assert Q.lmlt.elements == oracles.lmlt(Q.table)
    assert Q.dis.elements == oracles.dis_by_exponents(Q.table)


@given(left_quasigroups(max_n=4))
def test_lmlt_decomposition(Q):
    assert is_normal_in(Q.dis, Q.lmlt)
    from quasigalois.perm import close
    for x in range(Q.n):
        assert close(list(Q.dis.generators) + [Q.L(x)], Q.n) == Q.lmlt


@given(left_quasigroups(max_n=4))
def test_subalgebras_match_brute_force(Q):
    assert all_subalgebras(Q) == brute_subuniverses(Q)


@given(left_quasigroups(max_n=4))
def test_quotient_is_induced_action(Q):
    for alpha in all_congruences(Q):
        P, bmap = quotient(Q, alpha)
        assert P.table == tuple(map(tuple, oracles.quotient(Q.table, alpha.labels)))
        for x in range(Q.n):
            for y in range(Q.n):
                assert P.op(bmap[x], bmap[y]) == bmap[Q.op(x, y)]
        # idempotent blocks are subuniverses
        for b in alpha.blocks():
            if P.op(bmap[b[0]], bmap[b[0]]) == bmap[b[0]]:
                assert subuniverse_generated(Q, b) == frozenset(b)


@given(left_quasigroups(max_n=4), st.randoms(use_true_random=False))
def test_isomorphic_copies(Q, rnd):
    phi = list(range(Q.n))
    rnd.shuffle(phi)
    P = relabel(Q, phi)
    iso = are_isomorphic(Q, P)
    assert iso
    assert canonical_table(Q) == canonical_table(P)


def test_canonical_form_separates_classes():
    # three quandles of order 3 up to isomorphism
    quandles = []
    for rows in product(permutations(range(3)), repeat=3):
        if all(rows[x][x] == x for x in range(3)):
            Q = LeftQuasigroup(rows)
            if Q.predicates.quandle:
                quandles.append(Q)
    assert len({canonical_table(Q) for Q in quandles}) == 3


@given(left_quasigroups(max_n=4), st.integers(0, 2**32))
def test_eval_term_array_agrees(Q, seed):
    import numpy as np
    rng = random.Random(seed)
    t = random_term(rng, 2, 4)
    xs = np.arange(Q.n).repeat(Q.n)
    ys = np.tile(np.arange(Q.n), Q.n)
    vals = eval_term_array(Q.np_table, Q.np_ldiv, t, [xs, ys])
    assert list(vals) == [eval_term(Q, t, (x, y)) for x in range(Q.n) for y in range(Q.n)]


def test_cyclic_affine():
    assert cyclic_affine(3, 2, 2) == R3
    assert cyclic_affine(2, 0, 1, 1) == SHIFT
    assert compose(R3.L(0), inverse(R3.L(1))) in R3.dis
