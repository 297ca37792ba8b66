"""Command line front end over JSON module files.

Exit codes: 0 success (or "true"), 1 negative answer, 2 usage or input
error, 3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .closure import generate
from .errors import CalculusError, SchemaError, SymbolNotInAlphabet, UnknownSuite
from .harness import DEFAULT, SMALL, SUITES, run_suite
from .module import (
    Module,
    compose,
    freshen,
    interface_equivalent,
    is_abstract,
    is_atomic,
    is_entangled,
    is_perfect_match,
    neutral,
    rename,
)
from .quotient import left_quotient, right_quotient
from .words import LATIN, Alphabet, module_to_word, word_to_module

COMPOSE_MARK = "∘"


class UsageError(Exception):
    pass


def _read(path: str, stdin_used: list) -> tuple:
    if path == "-":
        if stdin_used:
            raise UsageError("stdin ('-') can only be read once")
        stdin_used.append(True)
        data = sys.stdin.buffer.read()
        stem = "stdin"
    else:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
        stem = Path(path).stem
    try:
        module, name = io.parse_document(data)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    return module, name or stem


def _load(paths) -> list:
    used: list = []
    return [_read(p, used) for p in paths]


def _write(data: bytes, out) -> None:
    if out in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(out).write_bytes(data)


def _untag(m: Module, tags: int) -> Module:
    """Remove the per-file freshening tags again if no two ids collide afterwards."""
    prims = m.prim_ids()
    cut = {p: p[: p.rindex("#")] for p in prims}
    if tags == 0 or len(set(cut.values())) != len(prims):
        return m
    return rename(m, cut.__getitem__)


def _trace_line(step: int, trace) -> str:
    def gates(gs):
        return [[g.node.key, g.label] for g in gs]

    return json.dumps(
        {
            "step": step,
            "merged": [[m.left.node.key, m.right.node.key, m.left.label] for m in trace.merged],
            "left_free": gates(trace.left_free),
            "right_free": gates(trace.right_free),
        },
        ensure_ascii=False,
    )


def cmd_compose(args) -> int:
    loaded = _load(args.files)
    modules = [freshen(m, f"#{i}") for i, (m, _) in enumerate(loaded)]
    total = modules[0]
    for step, m in enumerate(modules[1:], start=1):
        total, trace = compose(total, m)
        if args.trace:
            print(_trace_line(step, trace), file=sys.stderr)
    total = _untag(total, len(modules))
    name = args.name
    if name is None:
        name = COMPOSE_MARK.join(n for m, n in loaded if m != neutral()) or loaded[0][1]
    _write(io.serialize(total, name), args.out)
    return 0


CHECK_ARITY = {"perfect": 2, "entangled": 2, "equiv": 2, "abstract": 1, "atomic": 1}


def cmd_check(args) -> int:
    arity = CHECK_ARITY[args.kind]
    if len(args.files) != arity:
        raise UsageError(f"check {args.kind} takes {arity} file(s), got {len(args.files)}")
    mods = [m for m, _ in _load(args.files)]
    result = {
        "perfect": lambda: is_perfect_match(*mods),
        "entangled": lambda: is_entangled(*mods),
        "equiv": lambda: interface_equivalent(*mods),
        "abstract": lambda: is_abstract(*mods),
        "atomic": lambda: is_atomic(*mods),
    }[args.kind]()
    print("true" if result else "false")
    return 0 if result else 1


def _quotient_name(q_name: str, d_name: str, d: Module, side: str) -> str:
    if d == neutral():
        return q_name
    parts = q_name.split(COMPOSE_MARK)
    if len(parts) > 1 and side == "left" and parts[0] == d_name:
        return COMPOSE_MARK.join(parts[1:])
    if len(parts) > 1 and side == "right" and parts[-1] == d_name:
        return COMPOSE_MARK.join(parts[:-1])
    return f"{q_name}/{d_name}"


def cmd_quotient(args) -> int:
    (q, q_name), (d, d_name) = _load([args.composite, args.divisor])
    p = left_quotient(q, d) if args.side == "left" else right_quotient(q, d)
    if p is None:
        print("not a factor", file=sys.stderr)
        return 1
    name = args.name if args.name is not None else _quotient_name(q_name, d_name, d, args.side)
    _write(io.serialize(p, name), args.out)
    return 0


def cmd_word(args) -> int:
    if args.action == "build":
        alphabet = Alphabet(tuple(args.alphabet)) if args.alphabet else LATIN
        m = word_to_module(args.target, alphabet)
        _write(io.serialize(m, args.target), args.out)
        return 0
    (m, _), = _load([args.target])
    try:
        word = module_to_word(m)
    except CalculusError:
        print("not a word module")
        return 1
    print(word)
    return 0


def cmd_dot(args) -> int:
    (m, name), = _load([args.file])
    _write(io.to_dot(m, name).encode("utf-8"), args.out)
    return 0


def cmd_generate(args) -> int:
    if args.max_size < 1:
        raise UsageError("--max-size must be at least 1")
    mods = [m for m, _ in _load(args.files)]
    members = sorted(generate(mods, args.max_size), key=io.serialize)
    if args.out not in (None, "-"):
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, m in enumerate(members):
            name = f"gen-{i:03d}"
            (out / f"{name}.json").write_bytes(io.serialize(m, name))
    print(len(members))
    return 0


def cmd_selftest(args) -> int:
    cfg = (SMALL if args.suite == "graph-oracle" else DEFAULT).replace(seed=args.seed)
    report = run_suite(args.suite, args.trials, cfg)
    print(report.summary())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="compcalc", description="Compose and inspect modules with two interfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="left-to-right composition of module files")
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--out")
    p.add_argument("--trace", action="store_true", help="print each composition step to stderr as JSON")
    p.add_argument("--name", help="name of the output document")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check", help="decide a predicate; prints true/false")
    p.add_argument("kind", choices=sorted(CHECK_ARITY))
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("quotient", help="divide a composite by a known factor")
    p.add_argument("side", choices=["left", "right"])
    p.add_argument("composite")
    p.add_argument("divisor")
    p.add_argument("-o", "--out")
    p.add_argument("--name")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("word", help="build or read word modules")
    p.add_argument("action", choices=["build", "read"])
    p.add_argument("target", help="the word (build) or a module file (read)")
    p.add_argument("--alphabet", help="symbols allowed in the word (default a-z)")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("dot", help="render a module as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("generate", help="bounded closure under composition")
    p.add_argument("files", nargs="+")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("-o", "--out", help="directory for the generated modules")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selftest", help="run a randomized property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SchemaError, SymbolNotInAlphabet, UnknownSuite) as exc:
        print(f"compcalc: error: {exc}", file=sys.stderr)
        return 2
    except CalculusError as exc:
        print(f"compcalc: contract violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
