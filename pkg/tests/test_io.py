import json

import pytest
from hypothesis import given

from compcalc import DanglingNodeRef, DuplicateNodeId, Module, SchemaError, neutral, parse, serialize, to_dot
from compcalc.io import parse_document
from strategies import modules


def test_neutral_document():
    text = serialize(neutral(), "E")
    assert text == b'{"name":"E","nodes":[],"edges":[],"left":[],"right":[]}\n'
    assert parse(text) == neutral()


def test_shared_gate_document():
    m = Module.build(vertices=["i"], edges=[("s", "i", False)], left=[("s", "x")], right=[("s", "x")])
    doc = json.loads(serialize(m, "M"))
    assert doc["left"] == doc["right"] == [["s", "x"]]
    assert doc["edges"] == [["i", "s", False]]
    assert parse_document(serialize(m, "M")) == (m, "M")


def test_merged_nodes_are_joined_sorted():
    doc = json.loads(serialize(Module.build(vertices=["n+m"])))
    assert doc["nodes"] == ["m+n"]


def base_doc():
    return {"name": "x", "nodes": ["a", "b"], "edges": [["a", "b", True]], "left": [["a", "p"]], "right": []}


@pytest.mark.parametrize(
    "patch, error, path",
    [
        (lambda d: d["edges"].append(["a", "zz", True]), DanglingNodeRef, "$.edges[1][1]"),
        (lambda d: d["left"].append(["q", "p"]), DanglingNodeRef, "$.left[1][0]"),
        (lambda d: d["nodes"].append("b+c"), DuplicateNodeId, "$.nodes[2]"),
        (lambda d: d["edges"].append(["a", "b", "yes"]), SchemaError, "$.edges[1][2]"),
        (lambda d: d["right"].append(["a", ""]), SchemaError, "$.right[0][1]"),
        (lambda d: d.pop("name"), SchemaError, "$"),
        (lambda d: d.update(extra=1), SchemaError, "$"),
        (lambda d: d["left"].append(["a", "q"]), SchemaError, "$.left[1][0]"),
    ],
)
def test_schema_errors_carry_paths(patch, error, path):
    doc = base_doc()
    patch(doc)
    with pytest.raises(error) as info:
        parse(json.dumps(doc))
    assert info.value.path == path


def test_bad_json_reports_position():
    with pytest.raises(SchemaError) as info:
        parse(b'{"name":\n')
    assert "line 2" in info.value.path


@given(modules("m"))
def test_round_trip(m):
    assert parse(serialize(m)) == m
    assert serialize(parse(serialize(m, "n")), "n") == serialize(m, "n")


@given(modules("m"), modules("m"))
def test_bytes_equal_iff_modules_equal(m, n):
    assert (serialize(m) == serialize(n)) == (m == n)


def test_dot_layout():
    m = Module.build(vertices=["i"], edges=[("a", "i"), ("i", "s", False)], left=[("a", "x"), ("s", "y")],
                     right=[("s", "y"), ("b", "z")])
    dot = to_dot(m, "M")
    assert dot == to_dot(m, "M")
    assert dot.count('[shape=box') == len(m.left) + len(m.right)
    assert "rank=min" in dot and "rank=max" in dot
    assert '"L:s" -> "R:s" [dir=none, color="black:invis:black"]' in dot
    assert '"V:i" -> "L:s" [dir=none]' in dot


def test_dot_of_neutral_is_an_empty_box():
    dot = to_dot(neutral(), "E")
    assert "subgraph cluster_module" in dot
    assert "->" not in dot and "shape=box" not in dot


def test_dot_shows_merged_vertices():
    m = Module.build(right=[("a", "x")]) @ Module.build(left=[("b", "x")], right=[("c", "y")])
    assert '"V:a+b"' in to_dot(m)
