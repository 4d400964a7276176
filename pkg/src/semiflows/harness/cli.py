"""Command line: ``semiflows check|catalog|suite|explain``.

Exit status is 0 when every asserted check passes, 1 on an assertion failure
and 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import sys

from .. import catalog
from ..properties import PROPERTIES, evaluate
from .cases import CASES, format_suite, run_suite
from .instance_file import InstanceParseError, canonical, load
from .report import ReportParseError, explain, format_report

DEFAULT_PROPERTIES = ("tt", "pt", "st", "minimal", "tran")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semiflows", description="Transitivity and stability checks for finite semiflows.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="run named checkers on an instance file")
    c.add_argument("file")
    c.add_argument("--property", "-p", action="append", dest="properties", metavar="P",
                   help=f"one of: {', '.join(sorted(PROPERTIES))}")
    c.add_argument("--format", choices=("report", "canonical"), default="report",
                   help="'canonical' prints the normalized instance instead of a report")

    g = sub.add_parser("catalog", help="build a catalog model and compare with its expectations")
    g.add_argument("id", choices=catalog.CATALOG_IDS)
    for name in ("N", "n", "alphabet", "window", "depth"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--format", choices=("report", "canonical"), default="report")

    s = sub.add_parser("suite", help="run implication cases over seeded random instances")
    s.add_argument("--case", action="append", dest="cases", metavar="ID",
                   help=f"one of: {', '.join(CASES)}")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)

    e = sub.add_parser("explain", help="pretty-print one claim of a saved report")
    e.add_argument("report")
    e.add_argument("claim")
    return p


def _check(args) -> int:
    inst = load(args.file)
    if args.format == "canonical":
        sys.stdout.write(canonical(inst))
        return 0
    names = args.properties or list(DEFAULT_PROPERTIES)
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise _UsageError(f"unknown property {unknown[0]!r}; known: {', '.join(sorted(PROPERTIES))}")
    claims = [evaluate(inst, n) for n in names]
    sys.stdout.write(format_report(inst.name, claims))
    return 0


def _catalog(args) -> int:
    params = {k: getattr(args, k) for k in ("N", "n", "alphabet", "window", "depth")
              if getattr(args, k) is not None}
    try:
        entry = catalog.build(args.id, **params)
    except TypeError as exc:
        raise _UsageError(f"catalog {args.id}: {exc}") from None
    if args.format == "canonical":
        sys.stdout.write(canonical(entry.instance))
        return 0
    findings = catalog.verify(entry)
    notes = [f"{f.status} {f.property} expected={f.expected} computed={f.computed.value} ({f.source})"
             for f in findings]
    notes += list(entry.notes)
    sys.stdout.write(format_report(entry.instance.name, [f.computed for f in findings], notes))
    return 0 if catalog.all_match(findings) else 1


def _suite(args) -> int:
    if args.count < 0:
        raise _UsageError("--count must be nonnegative")
    unknown = [c for c in args.cases or () if c not in CASES]
    if unknown:
        raise _UsageError(f"unknown case {unknown[0]!r}; known: {', '.join(CASES)}")
    results = run_suite(args.cases, args.count, args.seed)
    sys.stdout.write(format_suite(results, args.seed, args.count))
    return 1 if any(r.failed for r in results) else 0


def _explain(args) -> int:
    with open(args.report) as fh:
        text = fh.read()
    try:
        sys.stdout.write(explain(text, args.claim))
    except KeyError as exc:
        raise _UsageError(exc.args[0]) from None
    return 0


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
        return {"check": _check, "catalog": _catalog, "suite": _suite, "explain": _explain}[args.command](args)
    except (_UsageError, InstanceParseError, ReportParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
