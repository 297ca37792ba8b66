"""Comparison modulo renaming, tag normalization and bounded generated sets."""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Iterable

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .module import Module, compose, freshen, rename

#: separator between the authored part of a primitive id and freshening tags
TAG = "#"


def base_name(prim: str) -> str:
    return prim.split(TAG, 1)[0]


def _gate_roles(m: Module, exact_order: bool) -> dict:
    roles = defaultdict(lambda: [None, None])
    for side, iface in enumerate((m.left, m.right)):
        for pos, (g, k) in enumerate(zip(iface, iface.ranks())):
            roles[g.node][side] = (pos, g.label) if exact_order else (g.label, k)
    return roles


def _as_digraph(m: Module, names: bool, exact_order: bool) -> nx.DiGraph:
    roles = _gate_roles(m, exact_order)
    g = nx.DiGraph()
    for v in m.vertices:
        tag = tuple(sorted(map(base_name, v.members))) if names else None
        role = roles.get(v, (None, None))
        g.add_node(v, tag=(tag, role[0], role[1]))
    for e in m.edges:
        kinds = [((e.src, e.dst), "d")] if e.directed else [((e.src, e.dst), "u"), ((e.dst, e.src), "u")]
        for (u, v), kind in kinds:
            if g.has_edge(u, v):
                g[u][v]["kinds"] = g[u][v]["kinds"] | {kind}
            else:
                g.add_edge(u, v, kinds=frozenset({kind}))
    return g


def _invariant(m: Module, names: bool, exact_order: bool) -> tuple:
    if exact_order:
        ifaces = (m.left.labels, m.right.labels)
    else:
        ifaces = (tuple(sorted(Counter(m.left.labels).items())), tuple(sorted(Counter(m.right.labels).items())))
    directed = sum(e.directed for e in m.edges)
    tags = ()
    if names:
        tags = tuple(sorted(tuple(sorted(map(base_name, v.members))) for v in m.vertices))
    return (len(m.vertices), len(m.edges), directed, ifaces, tags)


def isomorphic(m: Module, n: Module, names: bool = True, exact_order: bool = True) -> bool:
    """Equality up to renaming of vertices.

    With ``names`` the renaming may only change freshening tags: each vertex
    keeps the authored base names of its members.  Without it vertices are
    opaque.  ``exact_order`` pins each gate to its interface position;
    otherwise gates only keep their label and rank (interface equivalence).
    """
    if _invariant(m, names, exact_order) != _invariant(n, names, exact_order):
        return False
    gm = DiGraphMatcher(
        _as_digraph(m, names, exact_order),
        _as_digraph(n, names, exact_order),
        node_match=lambda a, b: a["tag"] == b["tag"],
        edge_match=lambda a, b: a["kinds"] == b["kinds"],
    )
    return gm.is_isomorphic()


def normalize_tags(m: Module) -> Module:
    """Rename primitive ids to ``base`` or ``base#i``, deterministically."""
    groups = defaultdict(list)
    for p in m.prim_ids():
        groups[base_name(p)].append(p)
    mapping = {}
    for base, prims in groups.items():
        if len(prims) == 1:
            mapping[prims[0]] = base
        else:
            for i, p in enumerate(sorted(prims)):
                mapping[p] = f"{base}{TAG}{i}"
    return rename(m, mapping.__getitem__)


def strip_tags(m: Module) -> Module:
    """Drop freshening tags when that keeps every primitive id distinct."""
    prims = m.prim_ids()
    stripped = {base_name(p) for p in prims}
    if len(stripped) != len(prims):
        return m
    return rename(m, base_name)


def generate(generators: Iterable[Module], max_size: int) -> list:
    """Members of the closure of ``generators`` under composition with at most ``max_size`` vertices.

    Results are deduplicated up to interface equivalence and renaming that
    keeps base names.  The generators themselves are always members.
    """
    if max_size < 1:
        raise ValueError("max_size must be positive")
    pool: list = []
    buckets = defaultdict(list)

    def add(m: Module, force: bool = False) -> bool:
        if not force and len(m.vertices) > max_size:
            return False
        key = _invariant(m, True, False)
        if any(isomorphic(m, other, names=True, exact_order=False) for other in buckets[key]):
            return False
        m = normalize_tags(m)
        buckets[key].append(m)
        pool.append(m)
        return True

    for t in generators:
        add(t, force=True)
    done = set()
    grew = True
    while grew:
        grew = False
        size = len(pool)
        for i in range(size):
            for j in range(size):
                if (i, j) in done:
                    continue
                done.add((i, j))
                z = compose(freshen(pool[i], TAG + "l"), freshen(pool[j], TAG + "r")).module
                grew |= add(z)
    return pool
