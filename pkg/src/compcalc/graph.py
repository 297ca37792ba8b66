"""Mixed directed/undirected graphs and their composition along interfaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InterfaceNotInGraph, InvalidModule, NodeIdCollision
from .interface import Interface, NodeId, NodeLike, as_node, matches, matchfree, merge_nodes


@dataclass(frozen=True)
class Edge:
    """An edge; undirected edges keep their endpoints in key order."""

    src: NodeId
    dst: NodeId
    directed: bool = True

    def __post_init__(self):
        if not self.directed and self.dst.key < self.src.key:
            s, d = self.dst, self.src
            object.__setattr__(self, "src", s)
            object.__setattr__(self, "dst", d)

    @property
    def sort_key(self) -> tuple:
        return (self.src.key, self.dst.key, self.directed)

    def map(self, f) -> "Edge":
        return Edge(f(self.src), f(self.dst), self.directed)

    def __repr__(self) -> str:
        arrow = "->" if self.directed else "--"
        return f"{self.src.key}{arrow}{self.dst.key}"


def as_edge(e) -> Edge:
    if isinstance(e, Edge):
        return e
    if len(e) == 2:
        return Edge(as_node(e[0]), as_node(e[1]), True)
    return Edge(as_node(e[0]), as_node(e[1]), bool(e[2]))


@dataclass(frozen=True)
class Graph:
    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.vertices, frozenset):
            object.__setattr__(self, "vertices", frozenset(self.vertices))
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        total = sum(len(v.members) for v in self.vertices)
        if total != len(self.prim_ids()):
            raise InvalidModule("vertices of one graph must have disjoint member sets")
        for e in self.edges:
            if e.src not in self.vertices or e.dst not in self.vertices:
                raise InvalidModule(f"edge {e!r} has an endpoint outside the graph")

    @classmethod
    def build(cls, vertices: Iterable[NodeLike] = (), edges: Iterable = ()) -> "Graph":
        return cls(frozenset(map(as_node, vertices)), frozenset(map(as_edge, edges)))

    def prim_ids(self) -> set:
        out = set()
        for v in self.vertices:
            out |= v.members
        return out

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=lambda v: v.key)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: e.sort_key)


class GraphComposition(NamedTuple):
    graph: Graph
    merged: tuple  # of Match, in order of the left interface
    free_left: tuple  # gates of the first interface without partner
    free_right: tuple


def compose_graphs(g: Graph, a: Interface, h: Graph, b: Interface) -> GraphComposition:
    """Compose ``g`` and ``h`` by merging every match of ``a`` and ``b`` into one vertex.

    Every other vertex is kept.  Edge endpoints that took part in a match are
    redirected to the merged vertex; direction is kept and edges that become
    equal collapse.
    """
    for iface, graph, side in ((a, g, "first"), (b, h, "second")):
        missing = [n for n in iface.nodes if n not in graph.vertices]
        if missing:
            raise InterfaceNotInGraph(f"{side} interface names vertices {missing} outside its graph")
    common = g.prim_ids() & h.prim_ids()
    if common:
        raise NodeIdCollision(f"graphs share primitive ids {sorted(common)}")

    merged = matches(a, b)
    replace = {}
    for m in merged:
        joint = merge_nodes(m.left.node, m.right.node)
        replace[m.left.node] = joint
        replace[m.right.node] = joint

    def sub(v: NodeId) -> NodeId:
        return replace.get(v, v)

    vertices = frozenset(sub(v) for v in g.vertices | h.vertices)
    edges = frozenset(e.map(sub) for e in g.edges | h.edges)
    return GraphComposition(Graph(vertices, edges), merged, matchfree(a, b), matchfree(b, a))


def naive_compose(g: Graph, a: Interface, h: Graph, b: Interface) -> tuple:
    """Single-interface composition: the leftover free gates form the new interface.

    This is the operator that fails to be associative; it exists to reproduce
    that failure.
    """
    k, _, free_a, free_b = compose_graphs(g, a, h, b)
    return k, Interface(free_a + free_b)
