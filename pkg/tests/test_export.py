"""Tests for model and relation files."""

import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.core.errors import ModelFormatError
from modalchar.services.export import (
    model_from_dict,
    model_to_dict,
    model_to_dot,
    read_model,
    read_relation,
    relation_to_dict,
    write_model,
)
from modalchar.services.kripke import PointedModel


@pytest.fixture()
def model():
    return PointedModel.build(("p", "q"), ["b", "a"], [("a", "b"), ("b", "b")], {"a": ["q", "p"]}, "a")


def test_file_layout_puts_the_point_first(model):
    payload = model_to_dict(model)
    assert payload["point"] == "a"
    assert [state["id"] for state in payload["states"]] == ["a", "b"]
    assert payload["states"][0]["props"] == ["p", "q"]
    assert payload["edges"] == [["a", "b"], ["b", "b"]]


def test_write_then_read(model, tmp_path):
    path = write_model(model, tmp_path / "nested" / "model.json")
    assert model_to_dict(read_model(path)) == model_to_dict(model)


def test_bad_files(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(ModelFormatError):
        read_model(broken)
    with pytest.raises(ModelFormatError):
        read_model(tmp_path / "missing.json")
    with pytest.raises(ModelFormatError):
        model_from_dict({"signature": ["p"], "states": [{"id": "a"}], "edges": [["a", "z"]], "point": "a"})
    with pytest.raises(ModelFormatError):
        model_from_dict({"signature": ["p"], "states": [{"id": "a", "props": ["q"]}], "point": "a"})
    with pytest.raises(ModelFormatError):
        model_from_dict({"signature": [], "states": [{"id": "a"}], "point": "a", "colour": "red"})


def test_relations(tmp_path):
    path = tmp_path / "relation.json"
    path.write_text(json.dumps(relation_to_dict([("b", "y"), ("a", "x")])), encoding="utf-8")
    assert read_relation(path) == {("a", "x"), ("b", "y")}
    path.write_text(json.dumps({"pairs": [["a"]]}), encoding="utf-8")
    with pytest.raises(ModelFormatError):
        read_relation(path)


def test_dot_marks_the_point(model):
    dot = model_to_dot(model, "example")
    assert dot.startswith('digraph "example" {')
    assert '"a" [label="a {p,q}", shape=doublecircle];' in dot
    assert '"a" -> "b";' in dot
