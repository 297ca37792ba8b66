"""Composition of modules: graphs with a left and a right labelled interface."""

from .closure import generate, isomorphic, normalize_tags, strip_tags
from .errors import (
    CalculusError,
    DanglingNodeRef,
    DuplicateNodeId,
    GateNotInInterface,
    InterfaceNotInGraph,
    InvalidModule,
    NodeIdCollision,
    NotAWordModule,
    PreconditionViolated,
    SchemaError,
    SymbolNotInAlphabet,
    UnknownSuite,
)
from .graph import Edge, Graph, compose_graphs, naive_compose
from .interface import Gate, Interface, InterfaceBijection, Match, NodeId, equivalent, matches, matchfree, merge_nodes, rank
from .io import parse, serialize, to_dot
from .module import (
    Composition,
    CompositionTrace,
    Module,
    abstraction_of,
    atom_of,
    compose,
    compose_all,
    freshen,
    interface_equivalent,
    is_abstract,
    is_atomic,
    is_entangled,
    is_perfect_match,
    neutral,
    precedes,
)
from .quotient import left_quotient, levi_overlap, right_quotient
from .words import Alphabet, module_to_word, symbol_module, word_to_module

__version__ = "0.1.0"
