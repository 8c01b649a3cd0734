"""Command-line entry point.

Exit codes: 0 success, 1 a checked law failed, 2 bad input, 3 a capacity cap
was hit (the stage is printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..commut import center, commutator, nilpotency_class, nilpotency_series
from ..config import DEFAULT_SEED, override
from ..congr import all_congruences, is_congruence
from ..displ import (
    admissibles, cayley_eq, check_adjunction_orbits, check_adjunction_subgroups, dis_alpha,
    dis_sup_alpha, is_cdos, is_cdsg, is_sharp, orbit_eq,
)
from ..errors import CapacityError, QuasigaloisError
from ..ext import AbelianGroup, Cocycle, EndoMap, build_extension
from ..lquasi import LeftQuasigroup
from ..partition import Partition
from . import formats, report
from .enumeration import FILTERS, enumerate_structures
from .families import FAMILIES
from .harness import DEFAULT_FAMILIES, build_instances, results_json, run_laws
from .laws import LAWS, Instance, PreconditionError
from .search import DEFAULT_BUDGET, search_cdos_not_cdsg

EXIT_OK, EXIT_LAW, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


class InputError(QuasigaloisError, ValueError):
    pass


def _load(args) -> formats.StructureFile:
    return formats.parse(args.file, transpose=args.transpose)


def _out(args, doc: dict, human: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(human)


def _fmt(p: Partition) -> str:
    return report.fmt_blocks(report.blocks(p))


def _partition_arg(spec: str | None, Q: LeftQuasigroup) -> Partition:
    if spec is None or spec == "1":
        return Partition.full(Q.n)
    if spec == "0":
        return Partition.discrete(Q.n)
    return formats.parse_partition(spec, Q.n)


# -- subcommands ---------------------------------------------------------------

def cmd_validate(args) -> int:
    sf = _load(args)
    Q = sf.Q
    p = Q.predicates
    doc = {"order": Q.n, "valid": True, **{k: getattr(p, k) for k in p.__dataclass_fields__}, **sf.metadata}
    human = f"valid left quasigroup of order {Q.n}\n" + "".join(
        f"  {k}: {str(getattr(p, k)).lower()}\n" for k in p.__dataclass_fields__)
    _out(args, doc, human)
    return EXIT_OK


def cmd_report(args) -> int:
    sf = _load(args)
    doc = report.build_report(sf.Q, args.name or sf.metadata.get("name"))
    sys.stdout.write(report.to_json(doc) if args.format == "json" else report.to_human(doc))
    return EXIT_OK


def cmd_galois(args) -> int:
    Q = _load(args).Q
    cons = all_congruences(Q)
    adm = admissibles(Q)
    doc = {
        "congruences": [
            {"blocks": report.blocks(a), "dis_low": report.group_doc(dis_alpha(Q, a)),
             "dis_high": report.group_doc(dis_sup_alpha(Q, a))} for a in cons
        ],
        "admissibles": [
            {"group": report.group_doc(N), "orbits": report.blocks(orbit_eq(Q, N)),
             "cayley": report.blocks(cayley_eq(Q, N))} for N in adm
        ],
        "cdos": is_cdos(Q),
        "cdsg": is_cdsg(Q),
        "sharp": is_sharp(Q),
        "orbit_adjunction": check_adjunction_orbits(Q),
        "cayley_adjunction": check_adjunction_subgroups(Q),
    }
    lines = [f"Con(Q): {len(cons)}, Norm'(Q): {len(adm)}"]
    for c in doc["congruences"]:
        lines.append(f"  alpha = {report.fmt_blocks(c['blocks'])}: |Dis_alpha| = {c['dis_low']['order']}, "
                     f"|Dis^alpha| = {c['dis_high']['order']}")
    for a in doc["admissibles"]:
        lines.append(f"  |N| = {a['group']['order']}: O_N = {report.fmt_blocks(a['orbits'])}, "
                     f"c_N = {report.fmt_blocks(a['cayley'])}")
    for k in ("cdos", "cdsg", "sharp", "orbit_adjunction", "cayley_adjunction"):
        lines.append(f"{k}: {str(doc[k]).lower()}")
    _out(args, doc, "\n".join(lines) + "\n")
    return EXIT_OK if doc["orbit_adjunction"] and doc["cayley_adjunction"] else EXIT_LAW


def cmd_commutator(args) -> int:
    Q = _load(args).Q
    a = _partition_arg(args.alpha, Q)
    b = _partition_arg(args.beta, Q)
    for name, p in (("alpha", a), ("beta", b)):
        if not is_congruence(Q, p):
            raise InputError(f"{name} = {_fmt(p)} is not a congruence")
    c = commutator(Q, a, b)
    _out(args, {"alpha": report.blocks(a), "beta": report.blocks(b), "commutator": report.blocks(c)},
         f"[{_fmt(a)}, {_fmt(b)}] = {_fmt(c)}\n")
    return EXIT_OK


def cmd_center(args) -> int:
    Q = _load(args).Q
    z = center(Q)
    _out(args, {"center": report.blocks(z)}, f"center = {_fmt(z)}\n")
    return EXIT_OK


def cmd_nilpotency(args) -> int:
    Q = _load(args).Q
    cls = nilpotency_class(Q)
    series = nilpotency_series(Q)
    lines = [f"nilpotency class: {'not nilpotent' if cls is None else cls}"]
    lines += [f"  zeta_{i} = {_fmt(z)}" for i, z in enumerate(series, start=1)]
    _out(args, {"nilpotency_class": cls, "series": [report.blocks(z) for z in series]}, "\n".join(lines) + "\n")
    return EXIT_OK


def _extension_from_spec(path) -> tuple:
    """Extension file (JSON): {"base": table or file path, "A": [moduli], "g": matrix,
    "f": matrix, "theta": optional |Q| x |Q| array of elements}."""
    try:
        spec = json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise formats.ParseError(e.msg, e.lineno, e.colno) from None
    missing = [k for k in ("base", "A", "g", "f") if k not in spec]
    if missing:
        raise InputError(f"extension file lacks {', '.join(missing)}")
    base = spec["base"]
    if isinstance(base, str):
        Q = formats.parse(Path(path).parent / base).Q
    else:
        Q = LeftQuasigroup(base)
    A = AbelianGroup(spec["A"])
    g = EndoMap(A, spec["g"])
    f = EndoMap(A, spec["f"])
    theta = Cocycle(A, spec["theta"]) if spec.get("theta") is not None else None
    return build_extension(Q, A, g, f, theta), spec.get("name")


def cmd_extend(args) -> int:
    ext, name = _extension_from_spec(args.spec)
    meta = {"name": name} if name else {}
    text = formats.emit_json(ext.E, meta) if args.format == "json" else formats.emit_text(ext.E, meta)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    filters = [f for f in (args.filter or "").split(",") if f]
    stream = enumerate_structures(args.order, filters, isomorph_reject=args.iso)
    if args.count:
        n = sum(1 for _ in stream)
        _out(args, {"order": args.order, "filters": filters, "isomorph_reject": args.iso, "count": n}, f"{n}\n")
        return EXIT_OK
    for Q in stream:
        sys.stdout.write(formats.emit_json(Q) if args.format == "json" else formats.emit_text(Q) + "\n")
    return EXIT_OK


def cmd_search(args) -> int:
    res = search_cdos_not_cdsg(args.order, args.budget)
    doc = {"status": res.status, "examined": res.examined, "budget": res.budget,
           "table": [list(r) for r in res.quandle.table] if res.quandle else None}
    human = f"{res.status} after {res.examined} candidates (budget {res.budget})\n"
    if res.quandle:
        human += formats.emit_text(res.quandle)
    _out(args, doc, human)
    return EXIT_OK


def cmd_verify(args) -> int:
    laws = args.laws.split(",") if args.laws else None
    if args.table:
        sf = _load_path(args.table, args.transpose)
        cons = [formats.parse_partition(c, sf.Q.n) for c in args.congruence] if args.congruence else None
        instances = [Instance(sf.metadata.get("name", Path(args.table).name), sf.Q, "file", congruences=cons)]
    else:
        fams = args.families.split(",") if args.families else list(DEFAULT_FAMILIES)
        instances = build_instances(fams, args.max_order, args.quandle_order)
    results = run_laws(instances, laws, args.jobs)
    if args.format == "json":
        sys.stdout.write(results_json(results, timing=args.timing))
    else:
        for r in results:
            status = "n/a " if not r.instances else "PASS" if r.passed else "FAIL"
            extra = f", {len(r.skipped)} skipped" if r.skipped else ""
            timing = f" [{r.elapsed:.1f}s]" if args.timing else ""
            print(f"{status} {r.law}: {r.instances} instances, {len(r.failures)} failures{extra}{timing}")
            for f in r.failures[: args.show]:
                print(f"    {f['instance']}: {f['detail']}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_LAW


def _load_path(path, transpose):
    return formats.parse(path, transpose=transpose)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--seed", type=int, default=None, help=f"sampling seed (default {DEFAULT_SEED:#x})")
    common.add_argument("--max-group-order", type=int, default=None)
    common.add_argument("--max-congruences", type=int, default=None)
    common.add_argument("--transpose", action="store_true", help="read tables with rows and columns swapped")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify-theorems")

    p = argparse.ArgumentParser(prog="quasigalois", description="Displacement groups, Galois connections and "
                                "commutators of finite left quasigroups")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file:
            sp.add_argument("file", help="Cayley table (text or JSON)")
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "check a table and print its basic predicates")
    add("report", cmd_report, "full structural report").add_argument("--name")
    add("galois", cmd_galois, "both Galois connections and the CDOs/CDSg flags")
    sp = add("commutator", cmd_commutator, "term-condition commutator [alpha, beta]")
    sp.add_argument("--alpha", help="partition like '0,1|2,3'; '0' or '1' for the extremes (default 1)")
    sp.add_argument("--beta", help="as --alpha (default 1)")
    add("center", cmd_center, "the center zeta_Q")
    add("nilpotency", cmd_nilpotency, "upper central series and nilpotency class")
    sp = add("extend", cmd_extend, "build a central extension from a JSON description", file=False)
    sp.add_argument("spec")
    sp.add_argument("-o", "--output")
    sp = add("enumerate", cmd_enumerate, "enumerate small left quasigroups", file=False)
    sp.add_argument("order", type=int)
    sp.add_argument("--filter", help=f"comma-separated subset of {','.join(FILTERS)}")
    sp.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    sp.add_argument("--count", action="store_true", help="print only the number of structures")
    sp = add("search", cmd_search, "search for a quandle with CDOs but not CDSg", file=False)
    sp.add_argument("--order", type=int, default=8)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp = add("verify-theorems", cmd_verify, "run the law harness", file=False)
    sp.add_argument("--families", help=f"comma-separated subset of {','.join(FAMILIES)}")
    sp.add_argument("--laws", help="comma-separated law names (default: all)")
    sp.add_argument("--max-order", type=int, default=3, help="order bound for the left-quasigroup family")
    sp.add_argument("--quandle-order", type=int, default=5)
    sp.add_argument("--table", help="run on a single table instead of the families")
    sp.add_argument("--congruence", action="append", help="with --table: a congruence to use (repeatable)")
    sp.add_argument("--timing", action="store_true")
    sp.add_argument("--show", type=int, default=5, help="failures printed per law")
    sp.add_argument("--list", action="store_true", help="list the laws and exit")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "list", False):
        for law in LAWS.values():
            print(f"{law.name}: {law.summary}")
        return EXIT_OK
    changes = {k: getattr(args, k) for k in ("seed", "max_group_order", "max_congruences")
               if getattr(args, k) is not None}
    try:
        with override(**changes):
            return args.fn(args)
    except CapacityError as e:
        print(f"capacity exceeded at stage {e.stage or 'unknown'}: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (PreconditionError, QuasigaloisError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
