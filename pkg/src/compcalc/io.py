"""JSON module documents and DOT rendering.

A document looks like::

    {"name":"M","nodes":["a","b+c"],"edges":[["a","b+c",true]],
     "left":[["a","x"]],"right":[["b+c","y"]]}

Merged vertices are written as their sorted primitive ids joined by ``+``.
"""

from __future__ import annotations

import json
from typing import Union

from .errors import DanglingNodeRef, DuplicateNodeId, InvalidModule, SchemaError
from .graph import Edge, Graph
from .interface import Gate, Interface, NodeId
from .module import Module

FIELDS = ("name", "nodes", "edges", "left", "right")


def to_document(m: Module, name: str = "") -> dict:
    return {
        "name": name,
        "nodes": [v.key for v in m.graph.sorted_vertices()],
        "edges": [[e.src.key, e.dst.key, e.directed] for e in m.graph.sorted_edges()],
        "left": [[g.node.key, g.label] for g in m.left],
        "right": [[g.node.key, g.label] for g in m.right],
    }


def serialize(m: Module, name: str = "") -> bytes:
    """Canonical UTF-8 bytes; equal modules (and names) give equal bytes."""
    text = json.dumps(to_document(m, name), ensure_ascii=False, separators=(",", ":"))
    return (text + "\n").encode("utf-8")


def _expect(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise SchemaError(message, path)


def _node_ref(value, path: str, known: dict) -> NodeId:
    _expect(isinstance(value, str) and value != "", "node reference must be a non-empty string", path)
    try:
        node = NodeId.parse(value)
    except InvalidModule as exc:
        raise SchemaError(str(exc), path) from exc
    if node not in known:
        raise DanglingNodeRef(f"unknown node {value!r}", path)
    return node


def from_document(doc) -> tuple:
    """Return ``(module, name)`` for a decoded JSON document."""
    _expect(isinstance(doc, dict), "document must be a JSON object", "$")
    for f in FIELDS:
        _expect(f in doc, f"missing field {f!r}", "$")
    extra = sorted(set(doc) - set(FIELDS))
    _expect(not extra, f"unexpected fields {extra}", "$")
    name = doc["name"]
    _expect(isinstance(name, str), "name must be a string", "$.name")

    _expect(isinstance(doc["nodes"], list), "nodes must be an array", "$.nodes")
    known: dict = {}
    owner: dict = {}
    for i, text in enumerate(doc["nodes"]):
        path = f"$.nodes[{i}]"
        _expect(isinstance(text, str) and text != "", "node must be a non-empty string", path)
        try:
            node = NodeId.parse(text)
        except InvalidModule as exc:
            raise SchemaError(str(exc), path) from exc
        for p in node.members:
            if p in owner:
                raise DuplicateNodeId(f"primitive id {p!r} already used by node {owner[p]!r}", path)
            owner[p] = text
        known[node] = text

    _expect(isinstance(doc["edges"], list), "edges must be an array", "$.edges")
    edges = set()
    for i, item in enumerate(doc["edges"]):
        path = f"$.edges[{i}]"
        _expect(isinstance(item, list) and len(item) == 3, "edge must be [src, dst, directed]", path)
        _expect(isinstance(item[2], bool), "directed flag must be true or false", path + "[2]")
        src = _node_ref(item[0], path + "[0]", known)
        dst = _node_ref(item[1], path + "[1]", known)
        edges.add(Edge(src, dst, item[2]))

    interfaces = []
    for side in ("left", "right"):
        _expect(isinstance(doc[side], list), f"{side} must be an array", f"$.{side}")
        gates = []
        seen = set()
        for i, item in enumerate(doc[side]):
            path = f"$.{side}[{i}]"
            _expect(isinstance(item, list) and len(item) == 2, "gate must be [nodeRef, label]", path)
            node = _node_ref(item[0], path + "[0]", known)
            _expect(node not in seen, "node occurs twice in one interface", path + "[0]")
            seen.add(node)
            _expect(isinstance(item[1], str) and item[1] != "", "label must be a non-empty string", path + "[1]")
            gates.append(Gate(node, item[1]))
        interfaces.append(Interface(tuple(gates)))

    module = Module(Graph(frozenset(known), frozenset(edges)), interfaces[0], interfaces[1])
    return module, name


def parse_document(data: Union[bytes, str]) -> tuple:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"input is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from exc
    return from_document(doc)


def parse(data: Union[bytes, str]) -> Module:
    return parse_document(data)[0]


def _q(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)


def to_dot(m: Module, name: str = "module") -> str:
    """Deterministic Graphviz rendering in the box-with-margins style.

    Left gates sit in a ``rank=min`` subgraph, right gates in a ``rank=max``
    one, interior vertices between them.  A shared gate is drawn once per
    side and the two drawings are joined by a double line.
    """
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    lines.append("  subgraph cluster_module {")
    lines.append(f"    label={_q(name)};")

    def left_id(v: NodeId) -> str:
        return _q("L:" + v.key)

    def right_id(v: NodeId) -> str:
        return _q("R:" + v.key)

    for side, iface, ident, rank in (("left", m.left, left_id, "min"), ("right", m.right, right_id, "max")):
        if not len(iface):
            continue
        lines.append(f"    subgraph {side} {{")
        lines.append(f"      rank={rank};")
        for g in iface:
            lines.append(f"      {ident(g.node)} [shape=box, label={_q(f'{g.node.key} : {g.label}')}];")
        lines.append("    }")

    for v in sorted(m.interior, key=lambda v: v.key):
        lines.append(f"    {_q('V:' + v.key)} [label={_q(v.key)}];")

    left_nodes = set(m.left.nodes)

    def drawn(v: NodeId) -> str:
        if v in left_nodes:
            return left_id(v)
        if v in m.right.nodes:
            return right_id(v)
        return _q("V:" + v.key)

    for v in sorted(m.shared, key=lambda v: v.key):
        lines.append(f'    {left_id(v)} -> {right_id(v)} [dir=none, color="black:invis:black"];')
    for e in m.graph.sorted_edges():
        attrs = "" if e.directed else " [dir=none]"
        lines.append(f"    {drawn(e.src)} -> {drawn(e.dst)}{attrs};")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
