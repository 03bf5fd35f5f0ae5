"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable or invalid
input), 3 when benchmarked algorithms disagree.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import TextIO

from . import bitset, render
from .bench import AlgorithmMismatch, rows_to_csv, run_bench
from .context import (
    ContextError,
    FormalContext,
    FormalDecisionContext,
    check_canonical,
    complement_decision,
    parse_context,
    split_decision,
)
from .lattice import ConceptKind, build_lattice
from .reduction import ReductionTooLarge, UnsatisfiableError, discernibility_matrix, reductions
from .rules import RuleSetOptions, RuleType, all_rules, necessary_rules

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _labels(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _grid(text: str) -> tuple[int, int, int]:
    try:
        u, m, n = (int(p) for p in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid entry must look like 20x10x4, got {text!r}") from None
    return u, m, n


def _seeds(text: str) -> list[int]:
    seeds: list[int] = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            seeds.extend(range(int(lo), int(hi) + 1))
        elif part:
            seeds.append(int(part))
    return seeds


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fdcrules", description="Decision rules and attribute reductions of formal decision contexts.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def with_input(p: argparse.ArgumentParser, decision_required: bool) -> None:
        p.add_argument("path", type=Path, help="context file (.csv or .cxt)")
        p.add_argument("--decision", type=_labels, required=decision_required,
                       help="comma-separated decision attribute labels")
        p.add_argument("--input-format", choices=("auto", "csv", "cxt"), default="auto")

    p = sub.add_parser("lattice", help="enumerate a concept lattice")
    with_input(p, decision_required=False)
    p.add_argument("--part", choices=("conditional", "decision", "complement-decision"), default="conditional")
    p.add_argument("--kind", choices=("formal", "object", "property"), default="formal")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("rules", help="acquire decision rules")
    with_input(p, decision_required=True)
    p.add_argument("--type", choices=("I", "II"), default="I", dest="rule_type")
    p.add_argument("--necessary", action="store_true", help="only necessary rules (default: all rules)")
    p.add_argument("--include-trivial", action="store_true", help="admit rules with empty premise or full conclusion")
    p.add_argument("--algorithm", default="auto",
                   choices=("auto", "alg1", "alg2", "s1", "s2", "complement", "bruteforce"))
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("reduce", help="compute all rule-preserving attribute reductions")
    with_input(p, decision_required=True)
    p.add_argument("--type", choices=("I", "II"), default="I", dest="rule_type")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="report canonicity violations")
    with_input(p, decision_required=False)

    p = sub.add_parser("bench", help="time necessary I-rule acquisition on random contexts")
    p.add_argument("--grid", type=_grid, action="append", required=True, help="UxMxN, repeatable")
    p.add_argument("--density", type=float, action="append", help="repeatable; default 0.3")
    p.add_argument("--seeds", type=_seeds, default=[1], help="e.g. 1-5 or 1,3,7")
    p.add_argument("--algorithms", type=_labels, default=["alg1", "alg2"])
    p.add_argument("--include-trivial", action="store_true")
    return parser


def _read(args: argparse.Namespace) -> FormalContext:
    fmt = args.input_format
    if fmt == "auto":
        fmt = "cxt" if args.path.suffix.lower() == ".cxt" else "csv"
    return parse_context(args.path.read_text(encoding="utf-8"), fmt)


def _read_fdc(args: argparse.Namespace) -> FormalDecisionContext:
    return split_decision(_read(args), args.decision)


def _cmd_lattice(args: argparse.Namespace, out: TextIO) -> int:
    if args.decision:
        fdc = _read_fdc(args)
        ctx = {
            "conditional": fdc.conditional,
            "decision": fdc.decision,
            "complement-decision": complement_decision(fdc).decision,
        }[args.part]
    elif args.part != "conditional":
        raise UsageError(f"--part {args.part} needs --decision")
    else:
        ctx = _read(args)
    lattice = build_lattice(ctx, ConceptKind.parse(args.kind))
    if args.format == "json":
        out.write(json.dumps(render.lattice_dict(lattice), ensure_ascii=False, indent=2) + "\n")
    elif args.format == "dot":
        out.write(render.lattice_dot(lattice))
    else:
        out.write(render.lattice_text(lattice))
    return EXIT_OK


def _cmd_rules(args: argparse.Namespace, out: TextIO) -> int:
    fdc = _read_fdc(args)
    rule_type = RuleType.parse(args.rule_type)
    opts = RuleSetOptions(include_trivial=args.include_trivial)
    if args.necessary:
        try:
            rules = necessary_rules(fdc, rule_type, opts, args.algorithm)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.algorithm != "auto":
            raise UsageError("--algorithm only applies with --necessary")
        rules = all_rules(fdc, rule_type, opts)
    if args.format == "json":
        out.write(render.rules_json(rules, fdc, necessary=args.necessary) + "\n")
    else:
        for rule in rules:
            out.write(render.rule_text(rule, fdc) + "\n")
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace, out: TextIO) -> int:
    fdc = _read_fdc(args)
    rule_type = RuleType.parse(args.rule_type)
    result = reductions(fdc, rule_type)
    attrs = fdc.conditional.attributes
    if args.format == "json":
        out.write(json.dumps(render.reduction_dict(result, attrs), ensure_ascii=False) + "\n")
        return EXIT_OK
    target = fdc if rule_type is RuleType.I else complement_decision(fdc)
    out.write(render.matrix_text(discernibility_matrix(target)))
    out.write(f"\nf = {render.cnf_text(result.clauses, attrs)}\n")
    if result.unconstrained:
        out.write("no conditional attribute is needed: the discernibility function is empty\n")
    for r in result.reductions:
        out.write("reduction: {" + ",".join(bitset.to_labels(r, attrs)) + "}\n")
    out.write("core: {" + ",".join(bitset.to_labels(result.core, attrs)) + "}\n")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    if args.decision:
        fdc = _read_fdc(args)
        parts = [("conditional", fdc.conditional), ("decision", fdc.decision)]
    else:
        parts = [("context", _read(args))]
    for name, ctx in parts:
        report = check_canonical(ctx)
        if report.canonical:
            out.write(f"{name}: canonical\n")
        for kind, label in report.violations:
            out.write(f"{name}: {kind} {label}\n")
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    try:
        rows = run_bench(
            args.grid, args.density or [0.3], args.seeds, args.algorithms,
            RuleSetOptions(include_trivial=args.include_trivial),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(rows_to_csv(rows))
    return EXIT_OK


COMMANDS = {
    "lattice": _cmd_lattice,
    "rules": _cmd_rules,
    "reduce": _cmd_reduce,
    "check": _cmd_check,
    "bench": _cmd_bench,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except AlgorithmMismatch as exc:
        err.write(f"fdcrules: algorithm mismatch: {exc}\n")
        return EXIT_MISMATCH
    except (ContextError, UnsatisfiableError, ReductionTooLarge, OSError, UnicodeDecodeError) as exc:
        err.write(f"fdcrules: {exc}\n")
        return EXIT_DATA


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
