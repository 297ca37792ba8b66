"""Word modules: one atomic module per symbol, chained by a control gate.

Composing the modules of ``u`` and ``v`` yields the module of ``uv``.  The
module of a word ``s1 ... sn`` is the undirected path

    left gate - s1 - c1 - s2 - ... - sn - right gate

whose odd positions are symbol vertices and whose inner even positions are
merged control gates.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .closure import TAG, base_name
from .errors import InvalidModule, NotAWordModule, SymbolNotInAlphabet
from .graph import Edge, Graph
from .interface import JOIN, Gate, Interface, NodeId
from .module import Module, compose, freshen

CONTROL = "__ctl"
EMPTY_GATE = "ctl"


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise InvalidModule("alphabet must not be empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidModule("alphabet has duplicate symbols")
        for s in self.symbols:
            if len(s) != 1 or s in (TAG, JOIN) or s.isspace():
                raise InvalidModule(f"unusable symbol {s!r}")

    def __contains__(self, s) -> bool:
        return s in self.symbols

    def check(self, word: str) -> None:
        for s in word:
            if s not in self:
                raise SymbolNotInAlphabet(f"{s!r} is not in the alphabet")


LATIN = Alphabet(tuple(string.ascii_lowercase))


def symbol_module(s: str, alphabet: Alphabet = LATIN) -> Module:
    """``[s.l] - s - [s.r]``, both gates labelled with the control label."""
    if len(s) != 1:
        raise SymbolNotInAlphabet(f"{s!r} is not a single symbol")
    alphabet.check(s)
    name, gl, gr = NodeId.of(s), NodeId.of(f"{s}.l"), NodeId.of(f"{s}.r")
    graph = Graph(frozenset({name, gl, gr}), frozenset({Edge(name, gl, False), Edge(name, gr, False)}))
    return Module(graph, Interface((Gate(gl, CONTROL),)), Interface((Gate(gr, CONTROL),)))


def empty_word_module() -> Module:
    g = Gate(NodeId.of(EMPTY_GATE), CONTROL)
    return Module(Graph(frozenset({g.node})), Interface((g,)), Interface((g,)))


def word_to_module(word: str, alphabet: Alphabet = LATIN) -> Module:
    alphabet.check(word)
    if not word:
        return empty_word_module()
    out = freshen(symbol_module(word[0], alphabet), f"{TAG}0")
    for i, s in enumerate(word[1:], start=1):
        out = compose(out, freshen(symbol_module(s, alphabet), f"{TAG}{i}")).module
    return out


def module_to_word(m: Module) -> str:
    """Read the word off a chain-shaped module."""
    if len(m.left) != 1 or len(m.right) != 1:
        raise NotAWordModule("a word module has exactly one gate on each side")
    start, end = m.left[0], m.right[0]
    if start.label != CONTROL or end.label != CONTROL:
        raise NotAWordModule("word module gates carry the control label")
    if start.node == end.node:
        if len(m.vertices) != 1 or m.edges:
            raise NotAWordModule("a shared control gate only occurs in the empty word")
        return ""
    if any(e.directed for e in m.edges):
        raise NotAWordModule("word modules have undirected edges only")
    adjacent = {v: set() for v in m.vertices}
    for e in m.edges:
        if e.src == e.dst:
            raise NotAWordModule("self loop")
        adjacent[e.src].add(e.dst)
        adjacent[e.dst].add(e.src)

    path = [start.node]
    previous = None
    while path[-1] != end.node:
        onward = adjacent[path[-1]] - {previous}
        if len(onward) != 1 or len(path) > len(m.vertices):
            raise NotAWordModule("not a simple chain between the control gates")
        previous = path[-1]
        path.append(onward.pop())
    if len(path) != len(m.vertices) or len(m.edges) != len(path) - 1 or len(adjacent[end.node]) != 1:
        raise NotAWordModule("vertices off the chain")

    word = []
    for v in path[1::2]:
        if len(v.members) != 1:
            raise NotAWordModule(f"symbol vertex {v} is a merged vertex")
        s = base_name(next(iter(v.members)))
        if len(s) != 1:
            raise NotAWordModule(f"vertex {v} does not name a symbol")
        word.append(s)
    if len(path) % 2 == 0:
        raise NotAWordModule("chain of even length")
    return "".join(word)
