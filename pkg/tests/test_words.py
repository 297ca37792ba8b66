from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compcalc import (
    Alphabet,
    Module,
    NotAWordModule,
    SymbolNotInAlphabet,
    atom_of,
    compose,
    freshen,
    generate,
    interface_equivalent,
    is_atomic,
    isomorphic,
    module_to_word,
    neutral,
    symbol_module,
    word_to_module,
)
from compcalc.words import CONTROL, empty_word_module

ABC = Alphabet(tuple("abc"))


def words(max_len, alphabet="abc"):
    for n in range(max_len + 1):
        for w in product(alphabet, repeat=n):
            yield "".join(w)


def test_symbol_module_shape():
    a = symbol_module("a")
    assert len(a.vertices) == 3 and len(a.edges) == 2
    assert all(not e.directed for e in a.edges)
    assert a.left.labels == (CONTROL,) and a.right.labels == (CONTROL,)
    assert is_atomic(a)
    assert interface_equivalent(a, symbol_module("b"))
    assert isomorphic(a, symbol_module("b"), names=False)
    assert not isomorphic(a, symbol_module("b"))


def test_alphabet_checks():
    with pytest.raises(SymbolNotInAlphabet):
        word_to_module("ad", ABC)
    with pytest.raises(SymbolNotInAlphabet):
        symbol_module("ab")
    with pytest.raises(Exception):
        Alphabet(("a", "a"))


def test_chain_layout():
    m = word_to_module("abc")
    assert len(m.vertices) == 7 and len(m.edges) == 6
    assert module_to_word(m) == "abc"


def test_round_trip_exhaustive():
    for w in words(8, "ab"):
        assert module_to_word(word_to_module(w, ABC)) == w
    for w in words(5):
        assert module_to_word(word_to_module(w, ABC)) == w


def test_order_is_visible():
    assert not isomorphic(word_to_module("ab"), word_to_module("ba"))
    assert isomorphic(word_to_module("ab"), word_to_module("ab"))


def test_empty_word_is_identity_up_to_renaming():
    e = empty_word_module()
    assert module_to_word(e) == ""
    a = symbol_module("a")
    for m in (compose(freshen(e, "#e"), a).module, compose(a, freshen(e, "#e")).module):
        assert module_to_word(m) == "a"
        assert isomorphic(m, a, names=False)


def test_non_word_modules_are_rejected():
    with pytest.raises(NotAWordModule):
        module_to_word(neutral())
    with pytest.raises(NotAWordModule):
        module_to_word(atom_of(Module.build(left=[("a", CONTROL)], right=[("b", CONTROL)], vertices=["x"])))
    branched = Module.build(
        vertices=["s", "t"], edges=[("l", "s", False), ("s", "r", False), ("s", "t", False)],
        left=[("l", CONTROL)], right=[("r", CONTROL)],
    )
    with pytest.raises(NotAWordModule):
        module_to_word(branched)


@given(st.text("abc", max_size=5), st.text("abc", max_size=5))
def test_composition_concatenates(u, v):
    mu, mv = word_to_module(u, ABC), freshen(word_to_module(v, ABC), "#r")
    assert module_to_word(compose(mu, mv).module) == u + v


def test_generate_reproduces_short_words():
    gens = [symbol_module(s, ABC) for s in "abc"]
    found = generate(gens, 7)
    assert sorted(module_to_word(m) for m in found) == sorted(w for w in words(3) if w)
