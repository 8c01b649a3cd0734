import jsonschema
import pytest

from quasigalois.cli.report import REPORT_SCHEMA, build_report, from_json, to_human, to_json
from quasigalois.lquasi import LeftQuasigroup, dihedral, projection

SHIFT = LeftQuasigroup([[1, 0], [1, 0]])
CASES = [dihedral(3), projection(2), SHIFT, dihedral(4),
         LeftQuasigroup([[0, 1, 2, 3], [0, 1, 3, 2], [0, 3, 2, 1], [0, 2, 1, 3]])]


@pytest.mark.parametrize("Q", CASES, ids=repr)
def test_schema_and_round_trip(Q):
    doc = build_report(Q, name="q")
    jsonschema.validate(doc, REPORT_SCHEMA)
    text = to_json(doc)
    assert from_json(text) == doc
    assert to_json(from_json(text)) == text
    assert to_json(build_report(Q, name="q")) == text
    assert "q" in to_human(doc)


def test_r3_flags():
    doc = build_report(dihedral(3))
    assert doc["flags"]["cdos"] and doc["flags"]["cdsg"]
    assert doc["nilpotency_class"] == 1 and doc["simple"]


def test_projection_flags():
    doc = build_report(projection(2))
    assert not doc["flags"]["cdsg"] and doc["flags"]["cayley"]
    assert doc["center"] == [[0, 1]]


def test_shift_is_simple_with_full_kernel():
    doc = build_report(SHIFT)
    assert doc["simple"] and doc["cayley_kernel"] == [[0, 1]]
    assert "simple" in to_human(doc)


def test_from_json_rejects_bad_documents():
    for bad in ('{"schema": "nope"}', "[1]"):
        with pytest.raises(ValueError):
            from_json(bad)
