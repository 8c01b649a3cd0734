"""One test per acceptance criterion, each at its stated tolerance.

Every test records a PASS/FAIL line (shown in the terminal summary and, with
-s, inline).  Criteria that the exhaustive runs contradict are strict xfails:
the assertion is the criterion itself, and an unexpected pass is an error.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from quasigalois.cli.families import extensions, left_quasigroups, quandles
from quasigalois.cli.harness import run_laws
from quasigalois.cli.laws import LAWS
from quasigalois.cli.search import search_cdos_not_cdsg
from quasigalois.commut import nilpotency_class
from quasigalois.congr import all_congruences, cayley_kernel
from quasigalois.displ import (
    admissibles, connect_flags, is_cdos, is_cdsg, is_sharp, operators_coincide,
)
from quasigalois.ext import is_idempotent_extension
from quasigalois.lquasi import LeftQuasigroup, dihedral, projection, quotient
from quasigalois.partition import Partition


def report(tag, ok, detail):
    line = f"{tag} {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def suite1():
    return left_quasigroups(3)


PLAIN_LAWS = [n for n, law in LAWS.items() if not law.extensions_only]
EXTENSION_LAWS = ["extension-kernel-central", "extension-displacement-action",
                  "extension-alpha-n", "extension-term-form"]


@pytest.mark.xfail(strict=True, reason="the 72 order-3 tables whose Cayley kernel is not a congruence "
                                       "are sharp with CDOs but lack CDSg")
def test_c1_every_law_on_order_at_most_3():
    insts = suite1()
    assert len(insts) == 1 + 4 + 216
    t = time.perf_counter()
    results = run_laws(insts, PLAIN_LAWS)
    secs = time.perf_counter() - t
    bad = {r.law: len(r.failures) for r in results if r.failures}
    report("C1", not bad and secs < 120,
           f"{len(insts)} instances x {len(PLAIN_LAWS)} laws in {secs:.0f}s; failures {bad or 0}")
    for r in results:
        if r.law in ("orbit-galois-connection", "cayley-galois-connection", "operator-chain"):
            assert r.passed and not r.skipped, r.law
    assert not bad
    assert secs < 120


@pytest.mark.xfail(strict=True, reason="quandle4-4 has CDSg without being sharp; the non-Cayley order-3 "
                                       "tables are sharp with CDOs without CDSg")
def test_c2_three_conditions_agree():
    t = time.perf_counter()
    insts = suite1() + quandles(5)
    bad = []
    for inst in insts:
        Q = inst.Q
        i, ii, iii = is_cdsg(Q), is_sharp(Q) and is_cdos(Q), operators_coincide(Q)
        if not i == ii == iii:
            bad.append((inst.name, i, ii, iii))
    secs = time.perf_counter() - t
    examples = ", ".join(f"{n}({int(a)}{int(b)}{int(c)})" for n, a, b, c in bad[:3])
    report("C2", not bad and secs < 600,
           f"{len(bad)} discrepancies over {len(insts)} instances in {secs:.0f}s; e.g. {examples}")
    assert not bad
    assert secs < 600


def test_c3_quotients_keep_cdos_and_cdsg():
    bad = []
    for inst in suite1():
        Q = inst.Q
        cdos, cdsg = is_cdos(Q), is_cdsg(Q)
        if not (cdos or cdsg):
            continue
        for a in all_congruences(Q):
            P, _ = quotient(Q, a)
            if cdos and not is_cdos(P):
                bad.append((inst.name, "cdos", a))
            if cdsg and not is_cdsg(P):
                bad.append((inst.name, "cdsg", a))
    report("C3", not bad, f"{len(bad)} failures over the order <= 3 suite")
    assert not bad


def test_c4_closure_agrees_with_sampled_terms():
    [r] = run_laws(suite1(), ["term-condition-sampling"])
    report("C4", r.passed and not r.skipped,
           f"{r.instances} instances, {len(r.failures)} containment or verdict violations")
    assert r.instances == 221 and not r.skipped
    assert r.passed


def test_c5_central_extension_suite():
    t = time.perf_counter()
    insts = extensions()
    results = run_laws(insts, EXTENSION_LAWS)
    secs = time.perf_counter() - t
    bad = {r.law: len(r.failures) for r in results if r.failures}
    report("C5", len(insts) >= 200 and not bad and secs < 900,
           f"{len(insts)} extensions, failures {bad or 0}, {secs:.0f}s")
    assert len(insts) >= 200
    assert all(r.instances == len(insts) for r in results)
    assert not bad
    assert secs < 900


def _nilpotent_cdsg_rows():
    rows = []
    for inst in quandles(5):
        rows.append((inst.name, inst.Q))
    for inst in extensions():
        e = inst.ext
        if is_idempotent_extension(e.Q, e.g, e.f, e.theta):
            rows.append((inst.name, inst.Q))
    out = []
    for name, Q in rows:
        if not Q.predicates.idempotent or nilpotency_class(Q) is None:
            continue
        f = connect_flags(Q)
        rhs = f.semiregular and f.superconnected and Q.predicates.latin and Q.predicates.quandle
        out.append((name, Q, is_cdsg(Q), rhs))
    return out


@pytest.mark.xfail(strict=True, reason="four idempotent extensions of the two-point projection quandle "
                                       "(by Z3 and Z2xZ2) are nilpotent with CDSg but not connected")
def test_c6_nilpotent_idempotent_cdsg():
    rows = _nilpotent_cdsg_rows()
    bad = [name for name, _, lhs, rhs in rows if lhs != rhs]
    r3 = [r for r in rows if r[1] == dihedral(3)]
    ok = not bad and bool(r3) and r3[0][2]
    report("C6", ok, f"{len(rows)} nilpotent idempotent instances, {len(bad)} discrepancies "
                     f"({', '.join(bad[:4])}); R3 witness {'present' if r3 else 'missing'}")
    assert r3 and r3[0][2] and r3[0][3] and nilpotency_class(dihedral(3)) == 1
    assert not bad


def test_c7_order_8_cdos_without_sharpness():
    t = time.perf_counter()
    res = search_cdos_not_cdsg(8)
    secs = time.perf_counter() - t
    if res.status != "found":
        report("C7", False, f"inconclusive: {res.status} after {res.examined} candidates")
        pytest.fail(f"search ended with status {res.status}")
    Q = res.quandle
    ok = Q.predicates.quandle and is_cdos(Q) and not is_sharp(Q) and secs < 3600
    report("C7", ok, f"found after {res.examined} candidates in {secs:.2f}s: {[list(r) for r in Q.table]}")
    assert Q.n == 8 and Q.predicates.quandle
    assert is_cdos(Q) and not is_sharp(Q)
    assert not is_cdsg(Q)
    assert secs < 3600


def test_c8_named_structures():
    P2 = projection(2)
    aff = LeftQuasigroup([[1, 0], [1, 0]])
    R3 = dihedral(3)
    checks = {
        "P2 Norm'": [N.order for N in admissibles(P2)] == [1],
        "P2 cdos": is_cdos(P2) is False,
        "P2 kernel": cayley_kernel(P2) == Partition.full(2),
        "Aff Con": all_congruences(aff) == [Partition.discrete(2), Partition.full(2)],
        "Aff Dis": aff.dis.is_trivial(),
        "Aff kernel": cayley_kernel(aff) == Partition.full(2),
        "R3 Con": all_congruences(R3) == [Partition.discrete(3), Partition.full(3)],
        "R3 Norm'": [N.order for N in admissibles(R3)] == [1, 3] and admissibles(R3)[1] == R3.dis,
        "R3 cdos": is_cdos(R3) is True,
        "R3 cdsg": is_cdsg(R3) is True,
    }
    failed = [k for k, v in checks.items() if not v]
    report("C8", not failed, f"{len(checks) - len(failed)}/{len(checks)} exact matches")
    assert not failed
