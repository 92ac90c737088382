"""Command line driver: ``leibniz-lm check | construct | report``.

Exit codes: 0 every check passed, 1 an axiom check or a recipe precondition
failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from ..report import PreconditionError, StructureError
from .document import parse_document
from .engine import CHECKS, DEFAULT_CHECK, RECIPES, UsageError, emit_report, emit_reports, run_check, run_construct
from .jsonpos import DocumentError

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _recipe_help() -> str:
    width = max(len(r) for r in RECIPES)
    lines = ["recipes:"]
    for name, (kinds, _, text) in sorted(RECIPES.items()):
        args = ", ".join("|".join(k) for k in kinds)
        lines.append(f"  {name:<{width}}  {text} [inputs: {args}]")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibniz-lm",
        description="Check and construct Leibniz algebras, Lie-Rinehart data and Leibniz algebroids from definition documents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("document", help="definition document (JSON); '-' reads standard input")
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.add_argument("--out", help="write the output here instead of standard output")

    check = sub.add_parser("check", help="run one checker on one entity")
    common(check)
    check.add_argument("--entity", required=True)
    check.add_argument("--kind", choices=sorted(CHECKS), help="check to run (default: the natural one for the entity)")

    construct = sub.add_parser(
        "construct",
        help="apply a recipe and emit the extended document",
        epilog=_recipe_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common(construct)
    construct.add_argument("--recipe", required=True, choices=sorted(RECIPES))
    construct.add_argument("--entity", action="append", required=True, help="input entity (repeat for two-input recipes)")
    construct.add_argument("--name", help="name of the constructed entity")

    report = sub.add_parser("report", help="run the natural check of every entity (or the given ones)")
    common(report)
    report.add_argument("--entity", action="append", help="restrict to these entities")
    return parser


def _read(path: str):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = parse_document(_read(args.document))
    except OSError as exc:
        print(f"error: cannot read {args.document}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as exc:
        for d in exc.diagnostics:
            print(f"{args.document}:{d}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "check":
            rep = run_check(doc, args.entity, args.kind)
            _write(emit_report(rep, args.format), args.out)
            return EXIT_PASS if rep.passed else EXIT_FAIL
        if args.command == "report":
            names = args.entity or [n for n in doc.names() if doc.entity(n).kind in DEFAULT_CHECK]
            reps = [run_check(doc, n) for n in names]
            _write(emit_reports(reps, args.format), args.out)
            return EXIT_PASS if all(r.passed for r in reps) else EXIT_FAIL
        try:
            text, main_name = run_construct(doc, args.recipe, args.entity, args.name)
        except PreconditionError as exc:
            print(f"error: recipe {args.recipe!r} precondition failed: {exc}", file=sys.stderr)
            _write(emit_report(exc.report.with_meta(entity=",".join(args.entity)), args.format), None)
            return EXIT_FAIL
        except StructureError as exc:
            print(f"error: recipe {args.recipe!r}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        _write(text, args.out)
        if args.out:
            print(f"wrote {main_name!r} to {args.out}", file=sys.stderr)
        return EXIT_PASS
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
