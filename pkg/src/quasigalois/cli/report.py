"""Human and JSON reports for a single left quasigroup.

The JSON document follows ``REPORT_SCHEMA`` (JSON Schema, draft 2020-12).
Partitions are written as lists of blocks, each block a sorted list of
points; permutation groups as their order plus a sorted generator list.
Every list is in a fixed order, so the same input always yields the same
bytes.
"""

from __future__ import annotations

import json

from ..commut import center, commutator, nilpotency_class, nilpotency_series
from ..congr import all_congruences, cayley_kernel
from ..displ import admissibles, cayley_eq, dis_alpha, dis_sup_alpha, full_report, orbit_eq
from ..lquasi import LeftQuasigroup
from ..partition import Partition
from ..perm import PermGroup

SCHEMA_ID = "quasigalois-report/1"

_blocks = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}
_group = {
    "type": "object",
    "required": ["order", "generators"],
    "additionalProperties": False,
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "generators": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
}
_flag_names = [
    "cdos", "cdsg", "sharp", "faithful", "cayley", "connected", "connected_by_dis",
    "superconnected", "semiregular", "operators_coincide", "idempotent", "rack", "quandle", "latin", "projection",
]

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA_ID,
    "type": "object",
    "additionalProperties": False,
    "required": [
        "schema", "order", "table", "flags", "simple", "cayley_kernel", "lmlt", "dis",
        "congruences", "admissibles", "center", "nilpotency_class", "nilpotency_series",
        "commutator_top",
    ],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "name": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        "flags": {
            "type": "object",
            "additionalProperties": False,
            "required": _flag_names,
            "properties": {k: {"type": "boolean"} for k in _flag_names},
        },
        "simple": {"type": "boolean"},
        "cayley_kernel": _blocks,
        "lmlt": _group,
        "dis": _group,
        "congruences": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["blocks", "dis_low", "dis_high"],
                "properties": {"blocks": _blocks, "dis_low": _group, "dis_high": _group},
            },
        },
        "admissibles": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["group", "orbits", "cayley"],
                "properties": {"group": _group, "orbits": _blocks, "cayley": _blocks},
            },
        },
        "center": _blocks,
        "commutator_top": _blocks,
        "nilpotency_class": {"type": ["integer", "null"], "minimum": 0},
        "nilpotency_series": {"type": "array", "items": _blocks},
    },
}


def blocks(p: Partition) -> list:
    return [list(b) for b in p.blocks()]


def group_doc(G: PermGroup) -> dict:
    return {"order": G.order, "generators": [list(g) for g in G.generators]}


def build_report(Q: LeftQuasigroup, name: str | None = None) -> dict:
    rep = full_report(Q)
    cons = all_congruences(Q)
    top = Partition.full(Q.n)
    doc = {
        "schema": SCHEMA_ID,
        "order": Q.n,
        "table": [list(r) for r in Q.table],
        "flags": {k: bool(rep.flags[k]) for k in _flag_names},
        "simple": Q.n > 1 and len(cons) == 2,
        "cayley_kernel": blocks(cayley_kernel(Q)),
        "lmlt": group_doc(Q.lmlt),
        "dis": group_doc(Q.dis),
        "congruences": [
            {"blocks": blocks(a), "dis_low": group_doc(dis_alpha(Q, a)), "dis_high": group_doc(dis_sup_alpha(Q, a))}
            for a in cons
        ],
        "admissibles": [
            {"group": group_doc(N), "orbits": blocks(orbit_eq(Q, N)), "cayley": blocks(cayley_eq(Q, N))}
            for N in admissibles(Q)
        ],
        "center": blocks(center(Q)),
        "commutator_top": blocks(commutator(Q, top, top)),
        "nilpotency_class": nilpotency_class(Q),
        "nilpotency_series": [blocks(z) for z in nilpotency_series(Q)],
    }
    if name:
        doc["name"] = name
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def fmt_blocks(b: list) -> str:
    return "{" + ", ".join("{" + ",".join(map(str, blk)) + "}" for blk in b) + "}"


def to_human(doc: dict) -> str:
    n = doc["order"]
    lines = []
    title = doc.get("name") or f"left quasigroup of order {n}"
    lines.append(title)
    lines.append("=" * len(title))
    width = len(str(n - 1))
    lines.extend("  " + " ".join(str(v).rjust(width) for v in row) for row in doc["table"])
    lines.append("")
    flags = doc["flags"]
    on = [k for k in sorted(flags) if flags[k]]
    off = [k for k in sorted(flags) if not flags[k]]
    lines.append("true:  " + (", ".join(on) or "-"))
    lines.append("false: " + (", ".join(off) or "-"))
    lines.append(f"simple: {str(doc['simple']).lower()}")
    lam = doc["cayley_kernel"]
    note = " (= 1_Q)" if len(lam) == 1 and n > 1 else " (= 0_Q)" if len(lam) == n else ""
    lines.append(f"Cayley kernel: {fmt_blocks(lam)}{note}")
    lines.append(f"|LMlt| = {doc['lmlt']['order']}, |Dis| = {doc['dis']['order']}")
    lines.append("")
    lines.append(f"congruences ({len(doc['congruences'])}):")
    for c in doc["congruences"]:
        lines.append(f"  {fmt_blocks(c['blocks'])}  |Dis_a| = {c['dis_low']['order']}, "
                     f"|Dis^a| = {c['dis_high']['order']}")
    lines.append(f"admissible subgroups ({len(doc['admissibles'])}):")
    for a in doc["admissibles"]:
        lines.append(f"  order {a['group']['order']}: orbits {fmt_blocks(a['orbits'])}, "
                     f"cayley {fmt_blocks(a['cayley'])}")
    lines.append("")
    lines.append(f"[1,1] = {fmt_blocks(doc['commutator_top'])}")
    lines.append(f"center = {fmt_blocks(doc['center'])}")
    cls = doc["nilpotency_class"]
    lines.append(f"nilpotency_class = {'not nilpotent' if cls is None else cls}")
    for i, z in enumerate(doc["nilpotency_series"], start=1):
        lines.append(f"  zeta_{i} = {fmt_blocks(z)}")
    return "\n".join(lines) + "\n"


def from_json(text: str) -> dict:
    """Inverse of to_json; tuples are not used, so the round trip is exact."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA_ID:
        raise ValueError(f"not a {SCHEMA_ID} document")
    return doc
