import pytest
from hypothesis import given

from quasigalois.cli.formats import (
    emit, emit_json, emit_text, parse, parse_json, parse_partition, parse_text,
)
from quasigalois.errors import ParseError
from quasigalois.lquasi import dihedral, projection
from quasigalois.partition import Partition
from strategies import left_quasigroups


def test_parse_examples():
    assert parse_text("2\n0 1\n0 1\n").Q == projection(2)
    assert parse_text("3\n0 2 1\n2 1 0\n1 0 2\n").Q == dihedral(3)


def test_comments_and_metadata():
    sf = parse_text("# name: R3\n# source: hand\n3  # order\n0 2 1\n\n2 1 0\n1 0 2 # last\n")
    assert sf.Q == dihedral(3)
    assert sf.metadata == {"name": "R3", "source": "hand"}
    assert parse_text(emit_text(sf.Q, sf.metadata)).metadata == sf.metadata


@pytest.mark.parametrize("text, line, column", [
    ("", 1, 1),
    ("x\n", 1, 1),
    ("2\n0 1\n0 z\n", 3, 3),
    ("2\n0 1\n", 3, 1),
    ("2\n0 1\n1 0\n0 1\n", 4, 1),
    ("2\n0 1 1\n1 0\n", 2, 5),
    ("2\n0 2\n1 0\n", 2, 3),
    ("2\n0 0\n1 0\n", 2, 3),
    ("0\n", 1, 1),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_text(text)
    assert (e.value.line, e.value.column) == (line, column)
    assert f"line {line}" in str(e.value)


def test_json_form():
    sf = parse_text('{"name": "P2", "order": 2, "table": [[0, 1], [0, 1]]}')
    assert sf.Q == projection(2) and sf.metadata == {"name": "P2"}
    with pytest.raises(ParseError):
        parse_json('{"order": 3, "table": [[0, 1], [0, 1]]}')
    with pytest.raises(ParseError) as e:
        parse_json('{"table": [[0, 1]')
    assert e.value.line == 1
    with pytest.raises(ParseError):
        parse_json("[1, 2]")


def test_transpose():
    # columns of x*y = y+1 are constant, so only the plain reading is a table
    text = "2\n1 0\n1 0\n"
    assert parse_text(text).Q.table == ((1, 0), (1, 0))
    with pytest.raises(ParseError):
        parse_text(text, transpose=True)
    R = dihedral(3)
    assert parse_text(emit_text(R), transpose=True).Q == R


def test_file_round_trip(tmp_path):
    p = tmp_path / "r3.txt"
    emit(dihedral(3), p, {"name": "R3"})
    first = p.read_text()
    emit(parse(p).Q, p, parse(p).metadata)
    assert p.read_text() == first
    emit(dihedral(3), tmp_path / "r3.json", fmt="json")
    assert parse(tmp_path / "r3.json").Q == dihedral(3)
    with pytest.raises(ParseError):
        parse(tmp_path / "missing.txt")


def test_parse_partition():
    assert parse_partition("0,2|1,3", 4) == Partition.from_blocks([[0, 2], [1, 3]], 4)
    assert parse_partition("1,2", 4) == Partition.from_blocks([[1, 2]], 4)
    for bad in ("0,0", "0,4", "a,b"):
        with pytest.raises(ParseError):
            parse_partition(bad, 4)


@given(left_quasigroups(max_n=5))
def test_emit_parse_emit_is_stable(Q):
    text = emit_text(Q, {"name": "q"})
    assert emit_text(parse_text(text).Q, {"name": "q"}) == text
    js = emit_json(Q)
    assert emit_json(parse_text(js).Q) == js
