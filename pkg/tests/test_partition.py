from hypothesis import given, strategies as st

import oracles
from quasigalois.partition import Partition, UnionFind, all_equivalences


def test_canonical_labels():
    assert Partition([5, 5, 7]).labels == (0, 0, 2)
    assert Partition.from_blocks([[1, 2]], 4).blocks() == [(0,), (1, 2), (3,)]
    assert Partition.from_pairs(4, [(0, 3)]).related(3, 0)


def test_bell_numbers():
    assert [sum(1 for _ in all_equivalences(n)) for n in range(1, 6)] == [1, 2, 5, 15, 52]
    assert sorted(p.labels for p in all_equivalences(4)) == sorted(oracles.all_equivalences(4))


def test_union_find():
    uf = UnionFind(4)
    assert uf.union(0, 2)
    assert not uf.union(2, 0)
    assert uf.find(2) == uf.find(0)


labels = st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
    st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))


@given(labels)
def test_lattice_laws(pair):
    a, b = Partition(pair[0]), Partition(pair[1])
    m, j = a.meet(b), a.join(b)
    assert m.leq(a) and m.leq(b) and a.leq(j) and b.leq(j)
    assert a.meet(j) == a and a.join(m) == a
    assert a.leq(b) == (a.meet(b) == a) == (a.join(b) == b)
    assert a.leq(b) == oracles.leq(a.labels, b.labels)
