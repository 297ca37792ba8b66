"""Brute-force transcriptions used as independent oracles.

Nothing here calls the rank-based matching or the composition code; matches
are found by trying every pair of gates and counting smaller gates.
"""

from __future__ import annotations

from itertools import product

from .graph import Edge, Graph
from .interface import Interface, NodeId


def _smaller_with_label(iface: Interface, index: int) -> int:
    label = iface.gates[index].label
    return sum(1 for g in iface.gates[:index] if g.label == label)


def brute_force_matches(a: Interface, b: Interface) -> set:
    """Pairs ``(gate_a, gate_b)`` with equal labels and equally many smaller equally labelled gates."""
    out = set()
    for i, j in product(range(len(a.gates)), range(len(b.gates))):
        ga, gb = a.gates[i], b.gates[j]
        if ga.label == gb.label and _smaller_with_label(a, i) == _smaller_with_label(b, j):
            out.add((ga, gb))
    return out


def brute_force_compose_graphs(g: Graph, a: Interface, h: Graph, b: Interface) -> Graph:
    pairs = brute_force_matches(a, b)
    match_of = {}
    for ga, gb in pairs:
        merged = NodeId(ga.node.members | gb.node.members)
        match_of[ga.node] = merged
        match_of[gb.node] = merged
    free_a = {x.node for x in a.gates if x.node not in match_of}
    free_b = {y.node for y in b.gates if y.node not in match_of}

    nodes = (
        (g.vertices - set(a.nodes))
        | (h.vertices - set(b.nodes))
        | set(match_of.values())
        | free_a
        | free_b
    )
    edges = set()
    for e in g.edges | h.edges:
        x, y = e.src, e.dst
        if x not in match_of and y not in match_of:
            edges.add(Edge(x, y, e.directed))
        elif x not in match_of:
            edges.add(Edge(x, match_of[y], e.directed))
        elif y not in match_of:
            edges.add(Edge(match_of[x], y, e.directed))
        else:
            edges.add(Edge(match_of[x], match_of[y], e.directed))
    return Graph(frozenset(nodes), frozenset(edges))
