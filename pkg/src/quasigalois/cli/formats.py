"""Reading and writing Cayley tables.

Text format::

    # name: dihedral Z3
    # source: hand
    3
    0 2 1
    2 1 0
    1 0 2

The first non-comment line is the order n, followed by n rows of n
whitespace-separated entries.  ``#`` starts a comment anywhere on a line;
leading ``# key: value`` lines before the order line are kept as metadata.
A file whose first non-blank character is ``{`` is read as JSON with keys
``table`` (required), ``order``, ``name`` and ``source``.

Some external databases store tables with rows and columns swapped; pass
``transpose=True`` to read such a file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import MalformedTableError, ParseError
from ..lquasi import LeftQuasigroup

_META = re.compile(r"#\s*([A-Za-z_][\w-]*)\s*:\s*(.*?)\s*$")
META_KEYS = ("name", "source")


@dataclass
class StructureFile:
    Q: LeftQuasigroup
    metadata: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.Q.n


def parse_text(text: str, transpose: bool = False) -> StructureFile:
    if text.lstrip().startswith("{"):
        return parse_json(text, transpose)
    meta: dict = {}
    tokens: list[tuple[str, int, int]] = []  # (token, line, column)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not tokens:
            m = _META.match(raw.strip())
            if m and m.group(1).lower() in META_KEYS:
                meta[m.group(1).lower()] = m.group(2)
                continue
        line = raw.split("#", 1)[0]
        for m in re.finditer(r"\S+", line):
            tokens.append((m.group(), lineno, m.start() + 1))
    if not tokens:
        raise ParseError("empty input: expected the order on the first line", 1, 1)

    def as_int(tok):
        s, ln, col = tok
        try:
            return int(s)
        except ValueError:
            raise ParseError(f"expected an integer, found {s!r}", ln, col) from None

    n = as_int(tokens[0])
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", tokens[0][1], tokens[0][2])
    body = tokens[1:]
    # rows are located by line so that a short row is reported where it happens
    lines: dict[int, list] = {}
    for tok in body:
        lines.setdefault(tok[1], []).append(tok)
    rows = list(lines.values())
    if len(rows) != n:
        where = rows[n] if len(rows) > n else None
        if where:
            raise ParseError(f"expected {n} rows, found more", where[0][1], where[0][2])
        last = body[-1] if body else tokens[0]
        raise ParseError(f"expected {n} rows, found {len(rows)}", last[1] + 1, 1)
    table = []
    for row in rows:
        if len(row) != n:
            bad = row[n] if len(row) > n else row[-1]
            raise ParseError(f"expected {n} entries in this row, found {len(row)}", bad[1], bad[2])
        vals = [as_int(t) for t in row]
        for v, t in zip(vals, row):
            if not 0 <= v < n:
                raise ParseError(f"entry {v} out of range 0..{n - 1}", t[1], t[2])
        table.append(vals)
    if transpose:
        table = [list(r) for r in zip(*table)]
    else:
        _check_rows(table, rows)
    try:
        Q = LeftQuasigroup(table)
    except MalformedTableError as e:
        raise ParseError(str(e)) from None
    return StructureFile(Q, meta)


def _check_rows(table, rows):
    for vals, toks in zip(table, rows):
        seen: dict[int, int] = {}
        for i, v in enumerate(vals):
            if v in seen:
                t = toks[i]
                raise ParseError(f"entry {v} repeats in this row; the row is not a permutation", t[1], t[2])
            seen[v] = i


def parse_json(text: str, transpose: bool = False) -> StructureFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict) or "table" not in doc:
        raise ParseError("JSON input must be an object with a 'table' key", 1, 1)
    table = doc["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise ParseError("'table' must be a list of rows")
    if "order" in doc and doc["order"] != len(table):
        raise ParseError(f"'order' is {doc['order']} but the table has {len(table)} rows")
    if transpose:
        table = [list(r) for r in zip(*table)]
    try:
        Q = LeftQuasigroup(table)
    except MalformedTableError as e:
        raise ParseError(str(e)) from None
    meta = {k: str(doc[k]) for k in META_KEYS if k in doc}
    return StructureFile(Q, meta)


def parse(path, transpose: bool = False) -> StructureFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_text(text, transpose)


def emit_text(Q: LeftQuasigroup, metadata: dict | None = None) -> str:
    """Normalized text form; parse_text(emit_text(Q)) reproduces Q and metadata."""
    lines = [f"# {k}: {v}" for k, v in (metadata or {}).items() if k in META_KEYS]
    lines.append(str(Q.n))
    lines.extend(" ".join(map(str, row)) for row in Q.table)
    return "\n".join(lines) + "\n"


def emit_json(Q: LeftQuasigroup, metadata: dict | None = None) -> str:
    doc = {k: v for k, v in (metadata or {}).items() if k in META_KEYS}
    doc["order"] = Q.n
    doc["table"] = [list(r) for r in Q.table]
    return json.dumps(doc, sort_keys=True) + "\n"


def emit(Q: LeftQuasigroup, path, metadata: dict | None = None, fmt: str = "text") -> None:
    out = emit_json(Q, metadata) if fmt == "json" else emit_text(Q, metadata)
    Path(path).write_text(out)


def parse_partition(spec: str, n: int):
    """'0,2|1,3' -> Partition; unlisted points are singletons."""
    from ..partition import Partition

    blocks = []
    for part in spec.split("|"):
        part = part.strip()
        if part:
            try:
                blocks.append([int(v) for v in part.split(",")])
            except ValueError:
                raise ParseError(f"bad partition block {part!r}") from None
    seen = [p for b in blocks for p in b]
    if len(seen) != len(set(seen)) or any(not 0 <= p < n for p in seen):
        raise ParseError(f"partition {spec!r} is not a set of disjoint blocks over 0..{n - 1}")
    return Partition.from_blocks(blocks, n)
