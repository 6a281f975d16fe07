import copy
import json

import pytest

from tcox.cox import delpezzo
from tcox.cox.catalog import (
    DELPEZZO, compare, delpezzo_fixture, load_fixtures, show_fixture, verify_catalog, verify_fixture,
)
from tcox.cox.dialects import parse_document, run


def test_load_fixtures():
    fixtures = load_fixtures()
    for name in ("2d4-fan", "2d4-graph", "k3-affine", "p1xa1", "tangent-p2", "cotangent-f1"):
        assert name in fixtures
    rows = [f for f in fixtures.values() if f.kind == DELPEZZO]
    assert len(rows) == len(delpezzo.ROWS)
    assert len(load_fixtures(include_delpezzo=False)) == len(fixtures) - len(rows)


def test_whole_catalog_verifies():
    results = verify_catalog(workers=2)
    failed = {r.name: r.problems for r in results if not r.ok}
    assert failed == {}
    assert [r.name for r in results] == list(load_fixtures())


def test_verify_selected_entries():
    results = verify_catalog(["2d4-fan", "delpezzo-deg1-2D4"], workers=1)
    assert [r.name for r in results] == ["2d4-fan", "delpezzo-deg1-2D4"]
    assert all(r.ok for r in results)
    with pytest.raises(KeyError):
        verify_catalog(["no-such-entry"])


def test_corrupted_isotropy_is_detected(catalog_fixtures):
    fixture = copy.deepcopy(catalog_fixtures["2d4-fan"])
    for divisor in fixture.input["divisors"]:
        divisor["coefficients"]["a1"] = {"vertices": [["1/3"]]}
    del fixture.input["group_basis"]
    result = verify_fixture(fixture)
    assert not result.ok
    assert any(problem.startswith("relations") for problem in result.problems)


def test_library_errors_become_problems(catalog_fixtures):
    fixture = copy.deepcopy(catalog_fixtures["2d4-graph"])
    fixture.input["arms"][1]["point"] = ["-2", "-2"]
    result = verify_fixture(fixture)
    assert not result.ok
    assert result.problems[0].startswith("InvalidGraph")


def test_compare(catalog_fixtures):
    fixture = catalog_fixtures["tangent-p2"]
    report, _ = run(parse_document(fixture.input))
    assert compare(report, fixture.expected) == []
    problems = compare(report, {"num_relations": 3, "relations": ["S1*T1 - S2*T2 + S3*T3"]})
    assert problems[0] == "number of relations: expected 3, got 1"
    assert problems[1].startswith("relations: expected")


def test_show_fixture(catalog_fixtures):
    assert show_fixture(catalog_fixtures["k3-affine"])["kind"] == "fan"
    row = delpezzo.get_row("delpezzo-deg2-D43A1")
    shown = show_fixture(delpezzo_fixture(row))
    assert shown["singularity"] == "D43A1"
    json.dumps(shown)


def test_delpezzo_fixture_input():
    fixture = delpezzo_fixture(delpezzo.get_row("delpezzo-deg1-E8"))
    assert fixture.input["kind"] == "owgraph"
    assert "Sminus" in fixture.input["contract"]
    assert fixture.parameters == {"lam": delpezzo.LAMBDA}
    assert parse_document(fixture.input).payload.contraction is not None


def test_duplicate_fixture_names(tmp_path, catalog_fixtures):
    document = {"name": "twice", "input": catalog_fixtures["k3-affine"].input, "expected": {}}
    for fn in ("a.json", "b.json"):
        (tmp_path / fn).write_text(json.dumps(document))
    (tmp_path / "notes.txt").write_text("not a fixture")
    with pytest.raises(ValueError):
        load_fixtures(str(tmp_path), include_delpezzo=False)
    (tmp_path / "b.json").unlink()
    assert list(load_fixtures(str(tmp_path), include_delpezzo=False)) == ["twice"]
