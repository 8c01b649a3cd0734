"""Instance families for the law harness."""

from __future__ import annotations

from ..ext import AbelianGroup, Cocycle, all_automorphisms, all_endomorphisms, build_extension
from ..lquasi import LeftQuasigroup, dihedral, projection
from .enumeration import enumerate_structures
from .laws import Instance

EXTENSION_BASES = ("point", "P2", "R3")
EXTENSION_GROUPS = ((2,), (3,), (4,), (2, 2))


def left_quasigroups(max_order: int = 3) -> list[Instance]:
    """Every labeled left quasigroup of order at most max_order."""
    out = []
    for n in range(1, max_order + 1):
        for i, Q in enumerate(enumerate_structures(n)):
            out.append(Instance(f"lq{n}-{i}", Q, "left-quasigroups"))
    return out


def quandles(max_order: int = 5) -> list[Instance]:
    """One quandle from each isomorphism class, orders 1..max_order."""
    out = []
    for n in range(1, max_order + 1):
        for i, Q in enumerate(enumerate_structures(n, ["quandle"], isomorph_reject=True)):
            out.append(Instance(f"quandle{n}-{i}", Q, "quandles"))
    return out


def _base(name: str) -> LeftQuasigroup:
    return {"point": LeftQuasigroup([[0]]), "P2": projection(2), "R3": dihedral(3)}[name]


def _group_name(A: AbelianGroup) -> str:
    return "x".join(f"Z{m}" for m in A.moduli)


def _cocycles(A: AbelianGroup, n: int):
    e0 = A.basis()[0]
    if n == 1:
        yield "c0", Cocycle.zero(A, 1)
        yield "c1", Cocycle(A, [[e0]])
        return
    yield "t0", Cocycle.zero(A, n)
    yield "t01", Cocycle.from_function(A, n, lambda x, y: e0 if (x, y) == (0, 1) else 0)
    yield "toff", Cocycle.from_function(A, n, lambda x, y: e0 if x != y else 0)


def _flat(m) -> str:
    return "".join(str(v) for row in m for v in row)


def extensions() -> list[Instance]:
    """Central extensions Q x_(g,f,theta) A over small Q and A, deduplicated by table."""
    out = []
    seen = set()
    for qname in EXTENSION_BASES:
        Q = _base(qname)
        for mods in EXTENSION_GROUPS:
            A = AbelianGroup(mods)
            autos = all_automorphisms(A)
            for g in all_endomorphisms(A):
                for f in autos:
                    for tname, theta in _cocycles(A, Q.n):
                        ext = build_extension(Q, A, g, f, theta)
                        key = (Q.table, ext.E.table)
                        if key in seen:
                            continue
                        seen.add(key)
                        name = f"ext-{qname}-{_group_name(A)}-g{_flat(g.matrix)}-f{_flat(f.matrix)}-{tname}"
                        out.append(Instance(name, ext.E, "extensions", ext=ext))
    return out


FAMILIES = {
    "left-quasigroups": left_quasigroups,
    "quandles": quandles,
    "extensions": extensions,
}
