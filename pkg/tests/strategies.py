"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from quasigalois.lquasi import LeftQuasigroup


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


@st.composite
def tables(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return [list(draw(perms(n))) for _ in range(n)]


@st.composite
def left_quasigroups(draw, min_n=1, max_n=4):
    return LeftQuasigroup(draw(tables(min_n, max_n)))
