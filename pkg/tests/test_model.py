from __future__ import annotations

import pytest

from mmm.model import (
    Dependency,
    DependencyKind,
    ProcessModel,
    case_study_fixture,
    validate_model,
)


def dep(num, source, target, kind="io"):
    return Dependency(num, source, target, DependencyKind(kind))


def test_fixture_is_valid():
    assert validate_model(case_study_fixture()) == []


def test_fixture_shape():
    model = case_study_fixture()
    assert model.activities == tuple("ABCDEFGHIJKLMN")
    assert len(model.dependencies) == 18
    assert len(model.internal_io_edges()) == 14


def test_fixture_edge_set():
    want = {
        ("A", "B"), ("B", "C"), ("C", "D"), ("F", "D"), ("D", "E"),
        ("E", "F"), ("F", "H"), ("J", "H"), ("G", "I"), ("K", "I"),
        ("I", "K"), ("J", "L"), ("L", "N"), ("M", "N"),
    }
    assert set(case_study_fixture().internal_io_edges()) == want


def test_labels_normalized_to_uppercase():
    model = ProcessModel("m", ("a", "b"), (dep(1, "a", "B"),))
    assert model.activities == ("A", "B")
    assert model.dependencies[0].source == "A"
    assert model.dependencies[0].target == "B"
    assert validate_model(model) == []


def test_dependencies_stored_sorted_by_id():
    model = ProcessModel("m", ("A", "B"), (dep(9, "A", "B"), dep(2, "B", None)))
    assert [d.id for d in model.dependencies] == [2, 9]


def test_unknown_endpoint_reported():
    model = ProcessModel("m", ("A",), (dep(1, "A", "Z"),))
    report = validate_model(model)
    assert [v.code for v in report] == ["unknown-endpoint"]
    assert "Z" in report[0].message


def test_duplicate_interface_reported_once():
    model = ProcessModel(
        "m", ("A", "B", "C"), (dep(5, "A", "B"), dep(5, "B", "C"))
    )
    assert [v.code for v in validate_model(model)] == ["duplicate-interface"]


def test_duplicate_activity_case_insensitive():
    model = ProcessModel("m", ("A", "a"), ())
    assert [v.code for v in validate_model(model)] == ["duplicate-activity"]


@pytest.mark.parametrize(
    "model, code",
    [
        (ProcessModel("m", ("A", ""), ()), "empty-label"),
        (ProcessModel("m", ("A",), (dep(0, "A", None),)), "bad-interface-id"),
        (ProcessModel("m", ("A",), (dep(1, None, None),)), "missing-endpoints"),
        (ProcessModel("m", ("A",), (dep(1, "A", "A"),)), "self-dependency"),
        (ProcessModel("m", ("A",), (dep(1, "A", None, "control"),)), "control-missing-target"),
    ],
)
def test_single_violation_codes(model, code):
    assert [v.code for v in validate_model(model)] == [code]


def test_multiple_violations_all_reported():
    model = ProcessModel(
        "m", ("A", "A"), (dep(1, "A", "Q"), dep(1, "A", None))
    )
    codes = sorted(v.code for v in validate_model(model))
    assert codes == ["duplicate-activity", "duplicate-interface", "unknown-endpoint"]


def test_fixture_interface_kinds():
    model = case_study_fixture()
    kinds = {d.id: d.kind for d in model.dependencies}
    assert [i for i, k in kinds.items() if k is DependencyKind.CONTROL] == [3, 7, 17]
    boundary = [d.id for d in model.dependencies if d.source is None or d.target is None]
    assert boundary == [3, 7, 12, 17]
