"""Regenerate the CLI golden corpus under tests/golden/.

Writes ten module files to tests/golden/modules/, runs every case of the
CLI contract against them and stores stdout, stderr and the exit code as
expected results.  Re-run only after an intentional output change:

    python scripts/make_golden.py
"""

import json
import shutil
import subprocess
import sys
from pathlib import Path

from compcalc import Module, compose, neutral, serialize, symbol_module
from compcalc.harness import GenConfig, gen_module

ROOT = Path(__file__).resolve().parents[1] / "tests" / "golden"
MODULES = ROOT / "modules"
EXPECTED = ROOT / "expected"


def corpus() -> dict:
    k = Module.build(
        vertices=["k3"],
        edges=[("k0", "k3"), ("k3", "k1"), ("k3", "k2", False)],
        left=[("k0", "x")],
        right=[("k1", "y"), ("k2", "z")],
    )
    p = Module.build(
        vertices=["p3"],
        edges=[("p0", "p3"), ("p1", "p3"), ("p3", "p2")],
        left=[("p0", "y"), ("p1", "z")],
        right=[("p2", "w")],
    )
    n = Module.build(edges=[("n0", "n2"), ("n1", "n2", False)], left=[("n0", "w"), ("n1", "y")], right=[("n2", "v")])
    shared = Module.build(
        vertices=["s2"],
        edges=[("s0", "s2"), ("s2", "s1")],
        left=[("s0", "w"), ("s1", "v")],
        right=[("s1", "v")],
    )
    abstract = Module.build(left=[("q0", "y")], right=[("q1", "y"), ("q2", "x")])
    return {
        "E": neutral(),
        "a": symbol_module("a"),
        "b": symbol_module("b"),
        "K": k,
        "P": p,
        "N": n,
        "KP": compose(k, p).module,
        "S": shared,
        "abs": abstract,
        "rnd": gen_module(GenConfig(seed=7)),
    }


CASES = [
    ("compose-E-K", ["compose", "E.json", "K.json"]),
    ("compose-K-P-N", ["compose", "K.json", "P.json", "N.json"]),
    ("compose-KP-N", ["compose", "KP.json", "N.json"]),
    ("compose-K-P-trace", ["compose", "--trace", "K.json", "P.json"]),
    ("compose-S-S", ["compose", "S.json", "S.json"]),
    ("compose-N-S", ["compose", "N.json", "S.json"]),
    ("compose-rnd-K", ["compose", "rnd.json", "K.json"]),
    ("compose-none", ["compose"]),
    ("compose-missing", ["compose", "nope.json"]),
    ("check-perfect-K-P", ["check", "perfect", "K.json", "P.json"]),
    ("check-perfect-P-N", ["check", "perfect", "P.json", "N.json"]),
    ("check-entangled-a-N", ["check", "entangled", "a.json", "N.json"]),
    ("check-entangled-K-N", ["check", "entangled", "K.json", "N.json"]),
    ("check-equiv-a-b", ["check", "equiv", "a.json", "b.json"]),
    ("check-abstract-E", ["check", "abstract", "E.json"]),
    ("check-abstract-abs", ["check", "abstract", "abs.json"]),
    ("check-abstract-K", ["check", "abstract", "K.json"]),
    ("check-atomic-a", ["check", "atomic", "a.json"]),
    ("check-arity", ["check", "perfect", "K.json"]),
    ("quotient-left-KP-K", ["quotient", "left", "KP.json", "K.json"]),
    ("quotient-right-KP-P", ["quotient", "right", "KP.json", "P.json"]),
    ("quotient-left-K-E", ["quotient", "left", "K.json", "E.json"]),
    ("quotient-left-E-K", ["quotient", "left", "E.json", "K.json"]),
    ("word-build-abc", ["word", "build", "abc"]),
    ("word-build-empty", ["word", "build", ""]),
    ("word-build-bad", ["word", "build", "aZ"]),
    ("word-read-a", ["word", "read", "a.json"]),
    ("word-read-E", ["word", "read", "E.json"]),
    ("dot-E", ["dot", "E.json"]),
    ("dot-S", ["dot", "S.json"]),
    ("dot-KP", ["dot", "KP.json"]),
    ("generate-E", ["generate", "E.json", "--max-size", "1"]),
    ("generate-a-b", ["generate", "a.json", "b.json", "--max-size", "7", "-o", "{out}/generate-a-b"]),
    ("generate-zero", ["generate", "E.json", "--max-size", "0"]),
]


def run(args: list, out_dir: Path) -> subprocess.CompletedProcess:
    args = [a.replace("{out}", str(out_dir)) for a in args]
    return subprocess.run([sys.executable, "-m", "compcalc.cli", *args], cwd=MODULES, capture_output=True)


def main() -> None:
    shutil.rmtree(ROOT, ignore_errors=True)
    MODULES.mkdir(parents=True)
    EXPECTED.mkdir(parents=True)
    for name, m in corpus().items():
        (MODULES / f"{name}.json").write_bytes(serialize(m, name))

    manifest = []
    for name, args in CASES:
        result = run(args, EXPECTED)
        (EXPECTED / f"{name}.out").write_bytes(result.stdout)
        (EXPECTED / f"{name}.err").write_bytes(result.stderr)
        manifest.append({"name": name, "args": args, "exit": result.returncode})
        print(f"{name:24s} exit {result.returncode}")
    (ROOT / "cases.json").write_text(json.dumps(manifest, indent=1) + "\n")


if __name__ == "__main__":
    main()
