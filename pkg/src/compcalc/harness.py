"""Seeded random modules and executable property suites.

Every suite draws a tuple of operands per trial and checks one law on it.
A law returns ``True`` when it holds and also when the drawn operands miss
its precondition, so shrinking can never wander into vacuous territory and
report it as a failure.
"""

from __future__ import annotations

import dataclasses
import hashlib
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .closure import isomorphic
from .errors import CalculusError, UnknownSuite
from .graph import Edge, Graph, compose_graphs
from .interface import Gate, Interface, NodeId, equivalent, matches, matchfree
from .module import (
    Module,
    abstraction_of,
    atom_of,
    compose,
    freshen,
    has_match,
    interface_equivalent,
    is_abstract,
    is_atomic,
    is_entangled,
    is_perfect_match,
    neutral,
    precedes,
)
from .oracle import brute_force_compose_graphs
from .quotient import levi_overlap
from .words import Alphabet, module_to_word, word_to_module


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_interior: int = 6
    max_gates_per_side: int = 4
    label_alphabet_size: int = 3
    shared_gate_probability: float = 0.25
    edge_density: float = 0.3

    def __post_init__(self):
        for name in ("max_interior", "max_gates_per_side", "label_alphabet_size"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        for name in ("shared_gate_probability", "edge_density"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")

    def replace(self, **changes) -> "GenConfig":
        return dataclasses.replace(self, **changes)


DEFAULT = GenConfig()
#: operands of at most five vertices
SMALL = GenConfig(max_interior=1, max_gates_per_side=2, edge_density=0.4)
SHARED_FREE = DEFAULT.replace(shared_gate_probability=0.0)


class ModuleGen:
    """Draws modules from one random stream; each draw gets its own id namespace."""

    def __init__(self, cfg: GenConfig = DEFAULT):
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)
        self.draws = 0

    def labels(self, prefix: str = "l") -> list:
        return [f"{prefix}{i}" for i in range(max(1, self.cfg.label_alphabet_size))]

    def label_sequence(self, pool: Sequence[str], min_len: int = 0) -> list:
        n = self.rng.randint(min(min_len, self.cfg.max_gates_per_side), self.cfg.max_gates_per_side)
        n = max(n, min_len)
        return [self.rng.choice(pool) for _ in range(n)]

    def module(
        self,
        left_labels: Optional[Sequence[str]] = None,
        right_labels: Optional[Sequence[str]] = None,
        pool: Optional[Sequence[str]] = None,
        min_gates: int = 0,
        namespace: Optional[int] = None,
        shared_probability: Optional[float] = None,
    ) -> Module:
        cfg, rng = self.cfg, self.rng
        if namespace is None:
            namespace = self.draws
            self.draws += 1
        prefix = f"d{namespace}"
        pool = list(pool) if pool is not None else self.labels()
        p_shared = cfg.shared_gate_probability if shared_probability is None else shared_probability
        if left_labels is None:
            left_labels = self.label_sequence(pool, min_gates)
        if right_labels is None:
            right_labels = self.label_sequence(pool, min_gates)

        left = [Gate(NodeId.of(f"{prefix}L{i}"), lab) for i, lab in enumerate(left_labels)]
        unused = [g.node for g in left]
        right = []
        for i, lab in enumerate(right_labels):
            if unused and rng.random() < p_shared:
                node = unused.pop(rng.randrange(len(unused)))
            else:
                node = NodeId.of(f"{prefix}R{i}")
            right.append(Gate(node, lab))
        interior = [NodeId.of(f"{prefix}V{i}") for i in range(rng.randint(0, cfg.max_interior))]

        vertices = sorted({g.node for g in left} | {g.node for g in right} | set(interior), key=lambda v: v.key)
        edges = set()
        for i, u in enumerate(vertices):
            for v in vertices[i + 1:]:
                if rng.random() < cfg.edge_density:
                    kind = rng.randrange(3)
                    edges.add(Edge(u, v, True) if kind == 0 else Edge(v, u, True) if kind == 1 else Edge(u, v, False))
        return Module(Graph(frozenset(vertices), frozenset(edges)), Interface(tuple(left)), Interface(tuple(right)))

    def shuffled(self, labels: Sequence[str]) -> list:
        out = list(labels)
        self.rng.shuffle(out)
        return out

    def word(self, alphabet: str = "abc", max_len: int = 4) -> str:
        return "".join(self.rng.choice(alphabet) for _ in range(self.rng.randint(0, max_len)))


def gen_module(cfg: GenConfig = DEFAULT) -> Module:
    """First draw of a fresh generator seeded by ``cfg.seed``."""
    return ModuleGen(cfg).module()


# --- laws ------------------------------------------------------------------


def _composes(*mods: Module) -> bool:
    ids: set = set()
    for m in mods:
        p = m.prim_ids()
        if ids & p:
            return False
        ids |= p
    return True


def assoc_holds(l: Module, m: Module, n: Module) -> bool:
    if not _composes(l, m, n):
        return True
    return compose(compose(l, m).module, n).module == compose(l, compose(m, n).module).module


def cancel_holds(l: Module, m: Module, n: Module) -> bool:
    if m == n or not _composes(l, m) or not _composes(l, n):
        return True
    return compose(l, m).module != compose(l, n).module and compose(m, l).module != compose(n, l).module


def commute_holds(m: Module, n: Module) -> bool:
    if m.shared or n.shared or not _composes(m, n):
        return True
    return interface_equivalent(compose(m, n).module, compose(n, m).module) == (not is_entangled(m, n))


def congruence_holds(m: Module, n: Module, l: Module) -> bool:
    if not interface_equivalent(m, n) or not _composes(m, l) or not _composes(n, l):
        return True
    return interface_equivalent(compose(m, l).module, compose(n, l).module) and interface_equivalent(
        compose(l, m).module, compose(l, n).module
    )


def perfect_holds(m: Module, n: Module) -> bool:
    if not is_perfect_match(m, n) or not _composes(m, n):
        return True
    mn = compose(m, n).module
    matched = {g for pair in matches(m.right, n.left) for g in pair}
    clause1 = matched == set(m.right) | set(n.left)
    clause2 = not matchfree(m.right, n.left) and not matchfree(n.left, m.right)
    clause3 = equivalent(mn.left, m.left) is not None and equivalent(mn.right, n.right) is not None
    clause4 = bool(m.shared or n.shared) or (mn.left == m.left and mn.right == n.right)
    return clause1 and clause2 and clause3 and clause4


def neutral_holds(m: Module) -> bool:
    e = neutral()
    return compose(m, e).module == m and compose(e, m).module == m


def levi_holds(k: Module, p: Module, n: Module) -> bool:
    if not _composes(k, p, n):
        return True
    l, m = compose(p, n).module, compose(k, p).module
    if not precedes(k, l) or not precedes(m, n):
        return True
    q = levi_overlap(k, l, m, n)
    if q is None:
        return False
    first = _composes(k, q) and compose(k, q).module == m and compose(q, n).module == l
    second = _composes(m, q) and compose(m, q).module == k and compose(q, l).module == n
    return first or second


def atoms_holds(m: Module, n: Module) -> bool:
    am, an = atom_of(m), atom_of(n)
    if not is_atomic(am) or am.left != m.left or am.right != m.right:
        return False
    aam = atom_of(am)
    if not (aam.left == am.left and aam.right == am.right and isomorphic(aam, am, names=False)):
        return False
    if not _composes(m, n) or not _composes(am, an):
        return True
    mn = compose(m, n).module
    whole = atom_of(mn)
    of_atoms = atom_of(compose(am, an).module)
    if not (of_atoms.left == whole.left and of_atoms.right == whole.right and isomorphic(of_atoms, whole, names=False)):
        return False
    if not (_composes(am, n) and _composes(m, an)):
        return True
    variants = [compose(am, n).module, compose(m, an).module, compose(am, an).module]
    return all(v.left == whole.left and v.right == whole.right for v in variants)


def abstractions_holds(m: Module, n: Module) -> bool:
    am, an = abstraction_of(m), abstraction_of(n)
    if abstraction_of(am) != am or not is_abstract(am):
        return False
    if not _composes(m, n):
        return True
    whole = abstraction_of(compose(m, n).module)
    variants = [compose(am, n).module, compose(m, an).module, compose(am, an).module]
    if not all(v.left == whole.left and v.right == whole.right for v in variants):
        return False
    return is_abstract(compose(am, an).module) == (not has_match(am, an))


def words_holds(u: str, v: str) -> bool:
    alphabet = Alphabet(tuple("abc"))
    mu, mv = word_to_module(u, alphabet), freshen(word_to_module(v, alphabet), "#r")
    if module_to_word(compose(mu, mv).module) != u + v:
        return False
    return u == v or not isomorphic(word_to_module(u, alphabet), word_to_module(v, alphabet))


def sparsity_holds(*mods: Module) -> bool:
    if not mods or not _composes(*mods):
        return True
    total = mods[0]
    for m in mods[1:]:
        total = compose(total, m).module
    k = len(mods)
    return len(total.vertices) <= k * max(len(m.vertices) for m in mods) and len(total.edges) <= k * max(
        len(m.edges) for m in mods
    )


def transfer_holds(ma: Module, mb: Module, mc: Module) -> bool:
    a, b, c = ma.left, mb.left, mc.right
    phi = equivalent(a, b)
    if phi is None or not _composes(ma, mc) or not _composes(mb, mc):
        return True
    partner_a = {x.left: x.right for x in matches(a, c)}
    partner_b = {x.left: x.right for x in matches(b, c)}
    free_a, free_b = set(matchfree(a, c)), set(matchfree(b, c))
    return all(partner_a.get(g) == partner_b.get(phi(g)) and (g in free_a) == (phi(g) in free_b) for g in a)


def graph_oracle_holds(g: Module, h: Module) -> bool:
    if not _composes(g, h):
        return True
    fast = compose_graphs(g.graph, g.right, h.graph, h.left).graph
    return fast == brute_force_compose_graphs(g.graph, g.right, h.graph, h.left)


# --- draws -----------------------------------------------------------------


def _draw_cancel(gen: ModuleGen) -> tuple:
    l = gen.module()
    ns = gen.draws
    gen.draws += 1
    return l, gen.module(namespace=ns), gen.module(namespace=ns)


def _draw_commute(gen: ModuleGen) -> tuple:
    m = gen.module(min_gates=1, shared_probability=0.0)
    n = gen.module(pool=gen.labels("k"), shared_probability=0.0, min_gates=1)
    if gen.rng.random() < 0.5:
        label = gen.rng.choice(sorted(m.labels()))
        sides = [(side, i) for side in ("left", "right") for i in range(len(getattr(n, side)))]
        side, i = gen.rng.choice(sides)
        iface = getattr(n, side)
        gates = list(iface.gates)
        gates[i] = Gate(gates[i].node, label)
        n = dataclasses.replace(n, **{side: Interface(tuple(gates))})
    return m, n


def _draw_congruence(gen: ModuleGen) -> tuple:
    m = gen.module()
    n = gen.module(left_labels=gen.shuffled(m.left.labels), right_labels=gen.shuffled(m.right.labels))
    return m, n, gen.module()


def _draw_perfect(gen: ModuleGen) -> tuple:
    m = gen.module()
    return m, gen.module(left_labels=gen.shuffled(m.right.labels))


def _draw_levi(gen: ModuleGen) -> tuple:
    p = gen.module(min_gates=1)
    k = gen.module(right_labels=gen.shuffled(gen.label_sequence(gen.labels()) + [p.left[0].label]))
    n = gen.module(left_labels=gen.shuffled(gen.label_sequence(gen.labels()) + [p.right[0].label]))
    return k, p, n


def _draw_words(gen: ModuleGen) -> tuple:
    return gen.word(), gen.word()


def _draw_transfer(gen: ModuleGen) -> tuple:
    a = gen.module()
    return a, gen.module(left_labels=gen.shuffled(a.left.labels)), gen.module()


def _sparsity_draw(base_seed: int):
    pool = ModuleGen(GenConfig(seed=base_seed))
    generators = [pool.module() for _ in range(4)]

    def draw(gen: ModuleGen) -> tuple:
        k = gen.rng.randint(1, 10)
        return tuple(freshen(gen.rng.choice(generators), f"#{i}") for i in range(k))

    return draw


@dataclass(frozen=True)
class Suite:
    name: str
    draw: Callable
    holds: Callable
    adjust: Callable = lambda cfg: cfg


def _draw_n(k: int) -> Callable:
    return lambda gen: tuple(gen.module() for _ in range(k))


SUITES = {
    "assoc": Suite("assoc", _draw_n(3), assoc_holds),
    "cancel": Suite("cancel", _draw_cancel, cancel_holds),
    "commute": Suite("commute", _draw_commute, commute_holds, lambda c: c.replace(shared_gate_probability=0.0)),
    "congruence": Suite("congruence", _draw_congruence, congruence_holds),
    "perfect": Suite("perfect", _draw_perfect, perfect_holds),
    "neutral": Suite("neutral", _draw_n(1), neutral_holds),
    "levi": Suite("levi", _draw_levi, levi_holds),
    "atoms": Suite("atoms", _draw_n(2), atoms_holds),
    "abstractions": Suite("abstractions", _draw_n(2), abstractions_holds),
    "words": Suite("words", _draw_words, words_holds),
    "sparsity": Suite("sparsity", None, sparsity_holds),
    "transfer": Suite("transfer", _draw_transfer, transfer_holds),
    "graph-oracle": Suite("graph-oracle", _draw_n(2), graph_oracle_holds),
}


# --- shrinking and running -------------------------------------------------


def _without_vertex(m: Module, v: NodeId) -> Module:
    graph = Graph(m.vertices - {v}, frozenset(e for e in m.edges if v not in (e.src, e.dst)))
    return Module(graph, m.left, m.right)


def smaller_modules(m: Module):
    """Candidates one step smaller: drop an edge, an interior vertex, or a gate."""
    for e in m.graph.sorted_edges():
        yield Module(Graph(m.vertices, m.edges - {e}), m.left, m.right)
    for v in sorted(m.interior, key=lambda v: v.key):
        yield _without_vertex(m, v)
    for side in ("right", "left"):
        iface = getattr(m, side)
        for i in reversed(range(len(iface))):
            gates = iface.gates[:i] + iface.gates[i + 1:]
            cut = dataclasses.replace(m, **{side: Interface(gates)})
            node = iface.gates[i].node
            if node not in cut.gate_nodes:
                cut = _without_vertex(cut, node)
            yield cut


def _fails(holds: Callable, args: tuple) -> bool:
    try:
        return not holds(*args)
    except CalculusError:
        return False


def shrink(args: tuple, holds: Callable) -> tuple:
    """Greedy shrink of a failing operand tuple; the result still fails."""
    improved = True
    while improved:
        improved = False
        for i, m in enumerate(args):
            if not isinstance(m, Module):
                continue
            for candidate in smaller_modules(m):
                trial = args[:i] + (candidate,) + args[i + 1:]
                if _fails(holds, trial):
                    args, improved = trial, True
                    break
            if improved:
                break
    return args


@dataclass
class Counterexample:
    trial: int
    seed: int
    message: str
    operands: tuple
    shrunk: tuple


@dataclass
class SuiteReport:
    suite: str
    trials: int
    passed: int = 0
    failed: int = 0
    seconds: float = 0.0
    first_failure: Optional[Counterexample] = None
    failing_seeds: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        head = f"{self.suite}: {'PASS' if self.ok else 'FAIL'} {self.passed}/{self.trials} ({self.seconds:.2f}s)"
        if self.first_failure is None:
            return head
        cx = self.first_failure
        shown = "\n".join(f"    {x!r}" for x in cx.shrunk)
        return f"{head}\n  first failure: trial {cx.trial}, seed {cx.seed}: {cx.message}\n  shrunk operands:\n{shown}"


def trial_seed(seed: int, suite: str, trial: int) -> int:
    digest = hashlib.sha256(f"{seed}:{suite}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def run_suite(name: str, trials: int, cfg: GenConfig = DEFAULT) -> SuiteReport:
    """Run ``trials`` seeded checks of one law; deterministic in ``(name, trials, cfg)``."""
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    cfg = suite.adjust(cfg)
    draw = suite.draw or _sparsity_draw(cfg.seed)
    report = SuiteReport(name, trials)
    start = time.perf_counter()
    for t in range(trials):
        seed = trial_seed(cfg.seed, name, t)
        args = draw(ModuleGen(cfg.replace(seed=seed)))
        try:
            ok, message = suite.holds(*args), "law violated"
        except CalculusError as exc:
            ok, message = False, f"{type(exc).__name__}: {exc}"
        if ok:
            report.passed += 1
            continue
        report.failed += 1
        report.failing_seeds.append(seed)
        if report.first_failure is None:
            shrunk = shrink(args, suite.holds) if message == "law violated" else args
            report.first_failure = Counterexample(t, seed, message, args, shrunk)
    report.seconds = time.perf_counter() - start
    return report
