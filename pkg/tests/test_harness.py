import pytest

from compcalc import Module, UnknownSuite, neutral
from compcalc.harness import (
    DEFAULT,
    SUITES,
    GenConfig,
    ModuleGen,
    gen_module,
    run_suite,
    shrink,
    smaller_modules,
    trial_seed,
)


def test_generation_is_seed_deterministic():
    assert gen_module(GenConfig(seed=3)) == gen_module(GenConfig(seed=3))
    assert len({gen_module(GenConfig(seed=s)) for s in range(20)}) > 1


def test_empty_config_gives_neutral():
    cfg = GenConfig(max_interior=0, max_gates_per_side=0)
    assert all(gen_module(cfg.replace(seed=s)) == neutral() for s in range(10))


def test_generated_modules_respect_bounds():
    gen = ModuleGen(DEFAULT)
    for _ in range(100):
        m = gen.module()
        assert len(m.interior) <= DEFAULT.max_interior
        assert len(m.left) <= 4 and len(m.right) <= 4
        assert set(m.labels()) <= {"l0", "l1", "l2"}


def test_shared_probability_one_shares_whenever_possible():
    gen = ModuleGen(GenConfig(seed=1, shared_gate_probability=1.0))
    for _ in range(100):
        m = gen.module()
        assert len(m.shared) == min(len(m.left), len(m.right))


def test_config_validation():
    with pytest.raises(ValueError):
        GenConfig(edge_density=1.5)
    with pytest.raises(ValueError):
        GenConfig(max_interior=-1)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope", 1)


def test_reports_are_reproducible():
    a, b = run_suite("assoc", 20), run_suite("assoc", 20)
    assert (a.passed, a.failed) == (b.passed, b.failed) == (20, 0)
    assert trial_seed(0, "assoc", 1) != trial_seed(0, "assoc", 2)


def test_smaller_modules_are_smaller():
    m = gen_module(GenConfig(seed=5, max_interior=3))
    size = len(m.vertices) + len(m.edges) + len(m.left) + len(m.right)
    for c in smaller_modules(m):
        assert len(c.vertices) + len(c.edges) + len(c.left) + len(c.right) < size


def test_shrinker_keeps_failure_and_minimises():
    def holds(m):
        return len(m.edges) < 2

    m = Module.build(
        vertices=["i", "j", "k"],
        edges=[("a", "i"), ("i", "j"), ("j", "k", False), ("k", "b")],
        left=[("a", "x")],
        right=[("b", "y")],
    )
    assert not holds(m)
    (small,) = shrink((m,), holds)
    assert not holds(small)
    assert len(small.edges) == 2
    assert all(holds(c) for c in smaller_modules(small))


def test_failing_suite_reports_a_shrunk_counterexample():
    report = run_suite("abstractions", 200)
    assert not report.ok
    cx = report.first_failure
    assert cx.shrunk and all(isinstance(x, Module) for x in cx.shrunk)
    assert sum(len(x.vertices) for x in cx.shrunk) <= sum(len(x.vertices) for x in cx.operands)
    assert "FAIL" in report.summary()


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"commute", "abstractions"}))
def test_suites_pass_briefly(name):
    assert run_suite(name, 40).ok
