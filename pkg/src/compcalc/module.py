"""Modules: a graph with a left and a right interface, and their composition."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InvalidModule, NodeIdCollision
from .graph import Edge, Graph, as_edge, compose_graphs
from .interface import (
    Gate,
    Interface,
    NodeId,
    as_node,
    equivalent,
    label_set,
    matches,
)


@dataclass(frozen=True)
class Module:
    graph: Graph = Graph()
    left: Interface = Interface()
    right: Interface = Interface()

    def __post_init__(self):
        for side, iface in (("left", self.left), ("right", self.right)):
            for n in iface.nodes:
                if n not in self.graph.vertices:
                    raise InvalidModule(f"{side} gate {n} is not a vertex of the module")

    @classmethod
    def build(cls, vertices: Iterable = (), edges: Iterable = (), left=(), right=()) -> "Module":
        """Convenience constructor from plain strings.

        Gate vertices need not be listed in ``vertices``.  Edges are
        ``(src, dst)`` (directed) or ``(src, dst, directed)``.
        """
        left_i = left if isinstance(left, Interface) else Interface.of(*left)
        right_i = right if isinstance(right, Interface) else Interface.of(*right)
        vs = set(map(as_node, vertices)) | set(left_i.nodes) | set(right_i.nodes)
        return cls(Graph(frozenset(vs), frozenset(map(as_edge, edges))), left_i, right_i)

    @property
    def vertices(self) -> frozenset:
        return self.graph.vertices

    @property
    def edges(self) -> frozenset:
        return self.graph.edges

    @property
    def gate_nodes(self) -> frozenset:
        return frozenset(self.left.nodes) | frozenset(self.right.nodes)

    @property
    def interior(self) -> frozenset:
        return self.graph.vertices - self.gate_nodes

    @property
    def shared(self) -> frozenset:
        return frozenset(self.left.nodes) & frozenset(self.right.nodes)

    def prim_ids(self) -> set:
        return self.graph.prim_ids()

    def labels(self) -> set:
        return label_set(self.left, self.right)

    def __matmul__(self, other: "Module") -> "Module":
        return compose(self, other).module

    def __repr__(self) -> str:
        verts = ", ".join(v.key for v in self.graph.sorted_vertices())
        edges = ", ".join(map(repr, self.graph.sorted_edges()))
        return f"Module({self.left!r} | {{{verts}}} {{{edges}}} | {self.right!r})"


class CompositionTrace(NamedTuple):
    merged: tuple  # Match pairs (gate of M*, gate of *N)
    left_free: tuple  # gates of M* without partner
    right_free: tuple  # gates of *N without partner


class Composition(NamedTuple):
    module: Module
    trace: CompositionTrace


def compose(m: Module, n: Module) -> Composition:
    """Compose ``m`` with ``n`` along ``m.right`` and ``n.left``.

    Free gates of ``n.left`` extend the left interface after ``m.left``;
    free gates of ``m.right`` extend the right interface after ``n.right``.
    A matched shared gate stays in place in the composed interface, now as
    the merged vertex.
    """
    common = m.prim_ids() & n.prim_ids()
    if common:
        raise NodeIdCollision(f"operands share primitive ids {sorted(common)}")
    graph, merged, free_m, free_n = compose_graphs(m.graph, m.right, n.graph, n.left)

    joint = {}
    for match in merged:
        v = NodeId(match.left.node.members | match.right.node.members)
        joint[match.left.node] = v
        joint[match.right.node] = v

    def keep(g: Gate) -> Gate:
        v = joint.get(g.node)
        return g if v is None else Gate(v, g.label)

    # a matched node of m.left is necessarily shared in m; likewise for n.right
    left = Interface(tuple(keep(g) for g in m.left) + free_n)
    right = Interface(tuple(keep(g) for g in n.right) + free_m)
    return Composition(Module(graph, left, right), CompositionTrace(merged, free_m, free_n))


def compose_all(modules: Iterable[Module]) -> Module:
    out = neutral()
    for m in modules:
        out = compose(out, m).module
    return out


def neutral() -> Module:
    return Module()


def is_perfect_match(m: Module, n: Module) -> bool:
    return equivalent(m.right, n.left) is not None


def is_entangled(m: Module, n: Module) -> bool:
    return bool(m.labels() & n.labels())


def precedes(m: Module, n: Module) -> bool:
    return bool(label_set(m.right) & label_set(n.left))


def interface_equivalent(m: Module, n: Module) -> bool:
    return equivalent(m.left, n.left) is not None and equivalent(m.right, n.right) is not None


def freshen(m: Module, tag: str) -> Module:
    """Append ``tag`` to every primitive id of ``m``."""
    if not tag:
        raise ValueError("freshening tag must be non-empty")
    return rename(m, lambda p: p + tag)


def rename(m: Module, f) -> Module:
    """Apply ``f`` to every primitive id; ``f`` must be injective on ``m``."""
    cache = {}

    def node(v: NodeId) -> NodeId:
        if v not in cache:
            cache[v] = NodeId(frozenset(f(p) for p in v.members))
        return cache[v]

    def iface(i: Interface) -> Interface:
        return Interface(tuple(Gate(node(g.node), g.label) for g in i))

    graph = Graph(
        frozenset(node(v) for v in m.graph.vertices),
        frozenset(e.map(node) for e in m.graph.edges),
    )
    return Module(graph, iface(m.left), iface(m.right))


def _content_digest(m: Module) -> str:
    h = hashlib.sha256()
    for v in m.graph.sorted_vertices():
        h.update(b"v" + v.key.encode() + b"\0")
    for e in m.graph.sorted_edges():
        h.update(f"e{e.src.key}\0{e.dst.key}\0{int(e.directed)}\0".encode())
    for side, iface in ((b"L", m.left), (b"R", m.right)):
        for g in iface:
            h.update(side + g.node.key.encode() + b"\0" + g.label.encode() + b"\0")
    return h.hexdigest()


def atom_name(m: Module) -> NodeId:
    return NodeId.of("atom-" + _content_digest(m)[:12])


def atom_of(m: Module) -> Module:
    """The atom of ``m``: same interfaces, one named interior vertex linked to every gate."""
    p = atom_name(m)
    gates = m.gate_nodes
    if any(p.members & g.members for g in gates):
        raise NodeIdCollision(f"atom name {p} clashes with a gate of the module")
    edges = frozenset(Edge(p, g, False) for g in gates)
    return Module(Graph(gates | {p}, edges), m.left, m.right)


def abstraction_of(m: Module) -> Module:
    return Module(Graph(m.gate_nodes, frozenset()), m.left, m.right)


def is_abstract(m: Module) -> bool:
    return not m.interior and not m.graph.edges


def is_atomic(m: Module) -> bool:
    if len(m.interior) != 1:
        return False
    (p,) = m.interior
    spokes = {Edge(p, g, False) for g in m.gate_nodes}
    return m.graph.edges == spokes


def has_match(m: Module, n: Module) -> bool:
    return bool(matches(m.right, n.left))
