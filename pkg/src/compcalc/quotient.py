"""Division of modules: left/right quotients and the overlap of two factorizations.

Composition forgets two things about the divided-out factor ``P``:

* the relative order, across different labels, of the ``P`` gates that got
  matched (only their order within a label survives), and
* an edge of ``P`` between two matched gates whose partners are joined by the
  same edge in the other factor.

The quotients therefore return a canonical representative: matched gates come
first, ordered like their partners, and edges that the other factor already
explains are dropped.  Every result is checked by recomposition.
"""

from __future__ import annotations

from typing import Optional

from .errors import CalculusError, PreconditionViolated
from .graph import Edge, Graph
from .interface import Gate, Interface, NodeId
from .module import Module, compose, precedes


class _Split:
    """Splits vertices of a composite into the part owned by a known factor and the rest."""

    def __init__(self, q: Module, known: Module):
        self.q = q
        self.known = known
        self.known_ids = frozenset(known.prim_ids())
        self.by_prim = {p: v for v in q.vertices for p in v.members}

    def rest(self, v: NodeId) -> Optional[NodeId]:
        r = v.members - self.known_ids
        return NodeId(r) if r else None

    def own(self, v: NodeId) -> Optional[NodeId]:
        r = v.members & self.known_ids
        return NodeId(r) if r else None

    def vertices(self) -> frozenset:
        return frozenset(r for r in map(self.rest, self.q.vertices) if r is not None)

    def edges(self) -> frozenset:
        out = set()
        for e in self.q.edges:
            src, dst = self.rest(e.src), self.rest(e.dst)
            if src is None or dst is None:
                continue
            ks, kd = self.own(e.src), self.own(e.dst)
            if ks is not None and kd is not None and Edge(ks, kd, e.directed) in self.known.edges:
                continue  # explained by the known factor
            out.add(Edge(src, dst, e.directed))
        return frozenset(out)

    def prefix(self, iface: Interface) -> list:
        """Leading gates of ``iface`` that carry unknown ids, reduced to those ids."""
        out = []
        for g in iface:
            r = self.rest(g.node)
            if r is None:
                break
            out.append(Gate(r, g.label))
        return out

    def suffix(self, iface: Interface, start: int) -> Optional[list]:
        out = []
        for g in iface.gates[start:]:
            if self.own(g.node) is not None:
                return None
            out.append(g)
        return out

    def partners(self, gates: Interface) -> list:
        """For each gate of the known factor merged into a larger vertex, the other part."""
        out = []
        for g in gates:
            v = self.by_prim.get(next(iter(g.node.members)))
            if v is None:
                continue
            r = self.rest(v)
            if r is not None:
                out.append(Gate(r, g.label))
        return out


def _build(vertices, edges, left, right) -> Optional[Module]:
    try:
        return Module(Graph(vertices, edges), Interface(tuple(left)), Interface(tuple(right)))
    except CalculusError:
        return None


def _verified(candidate: Optional[Module], first: Module, second: Module, target: Module) -> bool:
    if candidate is None:
        return False
    try:
        return compose(first, second).module == target
    except CalculusError:
        return False


def left_quotient(q: Module, k: Module) -> Optional[Module]:
    """A module ``P`` with ``k ∘ P == q``, or ``None`` if ``k`` is not a left factor."""
    if len(q.left) < len(k.left):
        return None
    s = _Split(q, k)
    free = s.suffix(q.left, len(k.left))
    if free is None:
        return None
    left = s.partners(k.right) + free
    p = _build(s.vertices(), s.edges(), left, s.prefix(q.right))
    return p if _verified(p, k, p, q) else None


def right_quotient(q: Module, n: Module) -> Optional[Module]:
    """A module ``P`` with ``P ∘ n == q``, or ``None`` if ``n`` is not a right factor."""
    if len(q.right) < len(n.right):
        return None
    s = _Split(q, n)
    free = s.suffix(q.right, len(n.right))
    if free is None:
        return None
    right = s.partners(n.left) + free
    p = _build(s.vertices(), s.edges(), s.prefix(q.left), right)
    return p if _verified(p, p, n, q) else None


def _overlap(k: Module, m: Module, l: Module, n: Module) -> Optional[Module]:
    """``P`` with ``k ∘ P == m`` and ``P ∘ n == l``.

    ``m`` determines the right interface of ``P`` and ``l`` its left one, so
    the two one-sided quotients are combined.
    """
    from_m = left_quotient(m, k)
    from_l = right_quotient(l, n)
    if from_m is None or from_l is None or from_m.vertices != from_l.vertices:
        return None
    p = _build(from_m.vertices, from_m.edges | from_l.edges, from_l.left, from_m.right)
    if _verified(p, k, p, m) and _verified(p, p, n, l):
        return p
    return None


def levi_overlap(k: Module, l: Module, m: Module, n: Module) -> Optional[Module]:
    """Overlap ``P`` of two factorizations ``k ∘ l == m ∘ n``.

    Returns ``P`` with ``k ∘ P == m`` and ``P ∘ n == l``, or else with
    ``m ∘ P == k`` and ``P ∘ l == n``.
    """
    try:
        same = compose(k, l).module == compose(m, n).module
    except CalculusError as exc:
        raise PreconditionViolated(f"factorizations cannot be composed: {exc}") from exc
    if not same:
        raise PreconditionViolated("the two factorizations compose to different modules")
    if not precedes(k, l) or not precedes(m, n):
        raise PreconditionViolated("each first factor must precede its second factor")
    p = _overlap(k, m, l, n)
    if p is None:
        p = _overlap(m, k, n, l)
    return p
