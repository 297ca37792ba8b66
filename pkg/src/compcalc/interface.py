"""Labels, gates and totally ordered interfaces; matches between interfaces.

An interface is a sequence of gates.  The position of a gate in the sequence
is its place in the total order, so the first gate is the smallest one.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import GateNotInInterface, InvalidModule, NodeIdCollision

Label = str
PrimId = str

#: separator used when a merged vertex is written as a single string
JOIN = "+"


def _check_prim(p: str) -> None:
    if not isinstance(p, str) or not p:
        raise InvalidModule(f"primitive id must be a non-empty string, got {p!r}")
    if JOIN in p:
        raise InvalidModule(f"primitive id {p!r} may not contain {JOIN!r}")


@dataclass(frozen=True)
class NodeId:
    """Vertex identity: a flat, non-empty set of primitive ids.

    Vertices of a freshly authored module are singletons.  Composition merges
    a matched pair of vertices into the union of their member sets.
    """

    members: frozenset

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        if not self.members:
            raise InvalidModule("NodeId needs at least one primitive id")
        for p in self.members:
            _check_prim(p)

    @classmethod
    def of(cls, *prims: str) -> "NodeId":
        return cls(frozenset(prims))

    @classmethod
    def parse(cls, text: str) -> "NodeId":
        return cls(frozenset(text.split(JOIN)))

    @property
    def key(self) -> str:
        return JOIN.join(sorted(self.members))

    def __lt__(self, other: "NodeId") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return self.key

    def __repr__(self) -> str:
        return f"NodeId({self.key!r})"


NodeLike = Union[NodeId, str]


def as_node(x: NodeLike) -> NodeId:
    if isinstance(x, NodeId):
        return x
    return NodeId.parse(x)


def merge_nodes(x: NodeId, y: NodeId) -> NodeId:
    """Flat union of two member-disjoint vertices."""
    if x.members & y.members:
        raise NodeIdCollision(f"cannot merge overlapping vertices {x} and {y}")
    return NodeId(x.members | y.members)


@dataclass(frozen=True)
class Gate:
    node: NodeId
    label: Label

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise InvalidModule(f"label must be a non-empty string, got {self.label!r}")

    def __repr__(self) -> str:
        return f"{self.node.key}:{self.label}"


@dataclass(frozen=True)
class Interface:
    """Finite totally ordered sequence of gates, no vertex twice."""

    gates: tuple = ()

    def __post_init__(self):
        if not isinstance(self.gates, tuple):
            object.__setattr__(self, "gates", tuple(self.gates))
        seen = set()
        for g in self.gates:
            if g.node in seen:
                raise InvalidModule(f"vertex {g.node} occurs twice in one interface")
            seen.add(g.node)

    @classmethod
    def of(cls, *entries) -> "Interface":
        """``Interface.of(("a", "x"), ("b", "y"))`` or gates directly."""
        gates = []
        for e in entries:
            if isinstance(e, Gate):
                gates.append(e)
            else:
                node, label = e
                gates.append(Gate(as_node(node), label))
        return cls(tuple(gates))

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __getitem__(self, i):
        return self.gates[i]

    def __repr__(self) -> str:
        return "[" + ", ".join(map(repr, self.gates)) + "]"

    @property
    def nodes(self) -> tuple:
        return tuple(g.node for g in self.gates)

    @property
    def labels(self) -> tuple:
        return tuple(g.label for g in self.gates)

    def label_counts(self) -> Counter:
        return Counter(self.labels)

    def prim_ids(self) -> set:
        out = set()
        for g in self.gates:
            out |= g.node.members
        return out

    def ranks(self) -> list:
        """Rank of every gate, position by position."""
        seen: Counter = Counter()
        out = []
        for g in self.gates:
            out.append(seen[g.label])
            seen[g.label] += 1
        return out

    def by_label(self) -> dict:
        groups = defaultdict(list)
        for g in self.gates:
            groups[g.label].append(g)
        return groups


def rank(a: Interface, g: Gate) -> int:
    """Number of gates before ``g`` in ``a`` that carry ``g.label``."""
    count = 0
    for h in a.gates:
        if h == g:
            return count
        if h.label == g.label:
            count += 1
    raise GateNotInInterface(g)


class Match(NamedTuple):
    left: Gate
    right: Gate

    @property
    def pair(self) -> frozenset:
        return frozenset((self.left, self.right))

    def flipped(self) -> "Match":
        return Match(self.right, self.left)


def _require_disjoint(a: Interface, b: Interface) -> None:
    common = a.prim_ids() & b.prim_ids()
    if common:
        raise NodeIdCollision(f"interfaces share primitive ids {sorted(common)}")


def matches(a: Interface, b: Interface) -> tuple:
    """All matches of ``a`` and ``b``, in the order of their ``a`` gates.

    A gate of ``a`` with label l and rank k matches the k-th l-labelled gate
    of ``b``, if ``b`` has that many.
    """
    _require_disjoint(a, b)
    partners = b.by_label()
    out = []
    for g, k in zip(a.gates, a.ranks()):
        candidates = partners.get(g.label, ())
        if k < len(candidates):
            out.append(Match(g, candidates[k]))
    return tuple(out)


def matchfree(a: Interface, b: Interface) -> tuple:
    """Gates of ``a`` in no match with ``b``, in ``a`` order."""
    _require_disjoint(a, b)
    available = b.label_counts()
    return tuple(g for g, k in zip(a.gates, a.ranks()) if k >= available[g.label])


@dataclass(frozen=True)
class InterfaceBijection:
    pairs: tuple

    def __call__(self, g: Gate) -> Gate:
        for a, b in self.pairs:
            if a == g:
                return b
        raise GateNotInInterface(g)

    def inverse(self) -> "InterfaceBijection":
        return InterfaceBijection(tuple((b, a) for a, b in self.pairs))

    def then(self, other: "InterfaceBijection") -> "InterfaceBijection":
        return InterfaceBijection(tuple((a, other(b)) for a, b in self.pairs))

    def as_dict(self) -> dict:
        return dict(self.pairs)


def equivalent(a: Interface, b: Interface) -> Optional[InterfaceBijection]:
    """Canonical label- and order-preserving bijection, or ``None``.

    Such a bijection exists exactly when both interfaces carry every label
    equally often; it then sends the k-th l-gate of ``a`` to the k-th l-gate
    of ``b``.
    """
    if a.label_counts() != b.label_counts():
        return None
    targets = b.by_label()
    pairs = [(g, targets[g.label][k]) for g, k in zip(a.gates, a.ranks())]
    return InterfaceBijection(tuple(pairs))


def label_set(*interfaces: Iterable[Gate]) -> set:
    return {g.label for i in interfaces for g in i}
