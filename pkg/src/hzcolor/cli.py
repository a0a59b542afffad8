"""Command-line interface: ``hzcolor <command> [options] [FILE]``."""

from __future__ import annotations

import argparse
import gzip
import io
import sys
from contextlib import contextmanager
from typing import Iterator, TextIO

from .graph import Graph, GraphError, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .harness import (
    OutOfScopeError,
    RunConfig,
    Verdict,
    classify,
    default_jobs,
    dumps,
    sweep,
)
from .oracle import BudgetExhausted, OracleBudget, chromatic_index

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _open_input(path: str | None) -> TextIO:
    if path is None or path == "-":
        if sys.stdin.isatty():
            raise UsageError("no input: pass a file or pipe graphs on standard input")
        return sys.stdin
    try:
        if path.endswith(".gz"):
            return io.TextIOWrapper(gzip.open(path, "rb"), encoding="ascii")
        return open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(str(exc)) from exc


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as fh:
        yield fh


def _lines(args: argparse.Namespace) -> list[str]:
    with _open_input(args.input) as fh:
        text = fh.read()
    if args.format == "graph6":
        return [ln for ln in text.splitlines() if ln.strip()]
    return [blk for blk in text.split("\n\n") if blk.strip()]


def _parse(text: str, fmt: str) -> Graph:
    return parse_graph6(text.strip()) if fmt == "graph6" else parse_edgelist(text)


def _emit(g: Graph, fmt: str) -> str:
    return emit_graph6(g) + "\n" if fmt == "graph6" else emit_edgelist(g) + "\n"


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        seed=args.seed,
        budget=OracleBudget(args.budget_nodes, args.budget_secs),
        fmt=args.format,
        out=args.out,
        trace=getattr(args, "trace", False),
        timings=getattr(args, "timings", False),
        components=getattr(args, "components", False),
        oracle_cutoff=getattr(args, "oracle_cutoff", 12),
        jobs=getattr(args, "jobs", 1),
    )


# -- commands ----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace, *, color_only: bool = False) -> int:
    cfg = _config(args)
    status = EXIT_OK
    with _output(args.out) as out:
        for text in _lines(args):
            try:
                g = _parse(text, args.format)
                res = classify(g, cfg)
            except (GraphError, OutOfScopeError, BudgetExhausted) as exc:
                out.write(dumps({"input": text.strip(), "error": str(exc)}) + "\n")
                status = EXIT_FAIL
                continue
            rec: dict = {"graph6": emit_graph6(g), "verdict": res.verdict.value, "route": res.route}
            if res.coloring is not None:
                rec["coloring"] = {e.key(): c for e, c in res.coloring.items()}
            if res.certificate is not None:
                rec["certificate"] = res.certificate.value
            if res.match is not None and not color_only:
                rec["config"] = res.match.to_json()
            if cfg.trace and res.trace is not None:
                rec["trace"] = res.trace.to_json()["steps"]
            if color_only and res.verdict is Verdict.CLASS2:
                status = EXIT_FAIL
            out.write(dumps(rec) + "\n")
    return status


def cmd_color(args: argparse.Namespace) -> int:
    return cmd_classify(args, color_only=True)


def cmd_oracle(args: argparse.Namespace) -> int:
    budget = OracleBudget(args.budget_nodes, args.budget_secs)
    status = EXIT_OK
    with _output(args.out) as out:
        for text in _lines(args):
            try:
                g = _parse(text, args.format)
                res = chromatic_index(g, budget)
            except (GraphError, BudgetExhausted) as exc:
                out.write(dumps({"input": text.strip(), "error": str(exc)}) + "\n")
                status = EXIT_FAIL
                continue
            delta = g.max_degree()
            rec = {
                "graph6": emit_graph6(g),
                "delta": delta,
                "chromatic_index": res.value,
                "class": 1 if res.value == delta else 2,
            }
            out.write(dumps(rec) + "\n")
    return status


def cmd_gen(args: argparse.Namespace) -> int:
    from .generate import GenerationError, random_h4

    if args.count < 0:
        raise UsageError("--count must be non-negative")
    with _output(args.out) as out:
        for i in range(args.count):
            try:
                g = random_h4(args.n, args.seed + i)
            except GenerationError as exc:
                print(f"hzcolor gen: {exc}", file=sys.stderr)
                return EXIT_FAIL
            out.write(_emit(g, args.format))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.format != "graph6":
        raise UsageError("sweep reads graph6 only")
    cfg = _config(args)
    status = EXIT_OK
    with _output(args.out) as out:
        for rec in sweep(_lines(args), cfg):
            summary = rec.get("summary")
            if summary and (summary.get("disagreements") or summary.get("error")):
                status = EXIT_FAIL
            out.write(dumps(rec) + "\n")
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    from . import suites

    cfg = _config(args)
    if args.suite == "kempe":
        rep = suites.verify_kempe(args.trials, args.seed)
    elif args.suite == "lemmas":
        rep = suites.verify_lemmas(args.per_kind, args.seed, (args.min_n, args.max_n))
    elif args.suite == "theorem":
        rep = suites.verify_theorem(_lines(args), cfg)
    else:
        rep = suites.CORPUS_SUITES[args.suite](_lines(args), cfg.budget)
    with _output(args.out) as out:
        out.write(dumps(rep.to_json()) + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    common.add_argument("--budget-nodes", type=int, default=10_000_000, metavar="N")
    common.add_argument("--budget-secs", type=float, default=30.0, metavar="S")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", metavar="PATH", help="write results here instead of stdout")

    reader = argparse.ArgumentParser(add_help=False)
    reader.add_argument("input", nargs="?", help="graph file (.gz accepted); default stdin")

    p = argparse.ArgumentParser(
        prog="hzcolor",
        description="4-edge-coloring of graphs with maximum degree 4 and core maximum degree at most 2.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("classify", "decide class 1 or class 2, with a coloring or certificate"),
        ("color", "print a verified 4-edge-coloring (fails on class 2)"),
    ):
        sp = sub.add_parser(name, parents=[common, reader], help=helptext)
        sp.add_argument("--trace", action="store_true", help="include the extension steps")
        sp.set_defaults(func=cmd_classify if name == "classify" else cmd_color)

    sp = sub.add_parser("oracle", parents=[common, reader], help="exact chromatic index")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", parents=[common], help="generate random graphs")
    sp.add_argument("--family", choices=("h4",), default="h4")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("sweep", parents=[common, reader], help="classify a graph6 stream to JSONL")
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--timings", action="store_true", help="add wall-clock millis (not reproducible)")
    sp.add_argument("--components", action="store_true", help="classify disconnected graphs per component")
    sp.add_argument("--oracle-cutoff", type=int, default=12, metavar="N")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", parents=[common, reader], help="run a verification suite")
    sp.add_argument("--suite", required=True, choices=("lemmas", "theorem", "val", "hz", "kempe"))
    sp.add_argument("--trials", type=int, default=10_000, help="kempe: number of trials")
    sp.add_argument("--per-kind", type=int, default=1000, help="lemmas: instances per kind")
    sp.add_argument("--min-n", type=int, default=8)
    sp.add_argument("--max-n", type=int, default=14)
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.add_argument("--oracle-cutoff", type=int, default=12, metavar="N")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"hzcolor: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
