"""Command-line entry point.

Exit codes: 0 success, 1 a counterexample was found and
``--fail-on-counterexample`` was given, 2 usage, input or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .enumeration import EnumerationQuery, enumerate_tables, gen_coset, gen_union, hunt_converse
from .errors import HyperlawError
from .formats import FIXTURES, fixture_text, read_table, serialize_compact, serialize_document, to_document
from .ideals import IdealKind, enumerate_ideals, inclusion_minimal
from .laws import Law
from .report import camel, dumps, render_text, structure_report
from .theorems import (
    Options,
    Outcome,
    certificate_to_json,
    check_converse,
    describe_certificate,
    load_certificate,
    parse_theorem_ids,
    persist_counterexamples,
    replay,
    run_all,
    sweep,
    verdict_to_json,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_jobs() -> int:
    raw = os.environ.get("HYPERLAW_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _options(args) -> Options:
    return Options(t9_per_element=getattr(args, "strict_t9", False),
                   t14_membership=getattr(args, "membership_t14", False))


# --- subcommands -----------------------------------------------------------------


def cmd_check(args) -> int:
    t = read_table(args.file)
    report = structure_report(t, theorems=args.theorems, options=_options(args))
    _emit(dumps(report) if args.json else render_text(report))
    failed = any(v["outcome"] == Outcome.COUNTEREXAMPLE.value for v in report.get("theorems") or [])
    return EXIT_COUNTEREXAMPLE if failed and args.fail_on_counterexample else EXIT_OK


def cmd_ideals(args) -> int:
    t = read_table(args.file)
    kinds = list(IdealKind) if args.all_kinds else [IdealKind(args.kind)]
    doc = {}
    for kind in kinds:
        found = enumerate_ideals(t, kind)
        doc[camel(kind.value)] = {
            "ideals": [t.names(a) for a in found],
            "minimal": [t.names(a) for a in inclusion_minimal(found)],
        }
    if args.json:
        _emit(dumps(doc))
        return EXIT_OK
    lines = []
    for kind, entry in doc.items():
        sets = " ".join("{" + ",".join(s) + "}" for s in entry["ideals"]) or "none"
        mins = " ".join("{" + ",".join(s) + "}" for s in entry["minimal"]) or "none"
        lines.append(f"{kind}: {sets}")
        lines.append(f"  minimal: {mins}")
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    t = read_table(args.file)
    ids = parse_theorem_ids(args.theorem)
    options = _options(args)
    if args.converse:
        verdicts = [check_converse(t, tid, options) for tid in ids]
    else:
        verdicts = run_all(t, options, ids)
    if args.save_certificates:
        persist_counterexamples([v for v in verdicts if v.certificate], args.save_certificates)
    if args.json:
        _emit(dumps([verdict_to_json(v) for v in verdicts]))
    else:
        lines = []
        for v in verdicts:
            label = v.theorem.value + (" converse" if args.converse else "")
            extra = f" ({v.reason})" if v.reason else ""
            lines.append(f"{label}: {v.outcome.value}{extra}")
            lines += [f"  {d}: {o.value}" for d, o in v.directions]
            lines += [f"  note: {note}" for note in v.notes]
            if v.certificate:
                lines += ["  " + line for line in describe_certificate(v.certificate).splitlines()]
        _emit("\n".join(lines) + "\n")
    failed = any(v.outcome is Outcome.COUNTEREXAMPLE for v in verdicts)
    return EXIT_COUNTEREXAMPLE if failed and args.fail_on_counterexample else EXIT_OK


def _query(args) -> EnumerationQuery:
    laws = frozenset({Law.LEFT_INVERTIVE} | {Law(x) for x in args.law})
    if args.no_left_invertive:
        laws -= {Law.LEFT_INVERTIVE}
    return EnumerationQuery(
        order=args.order,
        laws=laws,
        flags=tuple(args.filter),
        mode="sample" if args.sample is not None else "exhaustive",
        count=args.sample or 0,
        seed=args.seed,
        canonical_only=args.canonical,
        jobs=args.jobs,
    )


def cmd_enumerate(args) -> int:
    q = _query(args)
    run = enumerate_tables(q)
    tables = None if args.count_only else []
    for t in run:
        if tables is not None:
            tables.append(t)
    s = run.summary
    if args.json:
        doc = {
            "order": q.order,
            "laws": [law.value for law in Law if law in q.laws],
            "flags": list(q.flags),
            "mode": q.mode,
            "canonicalOnly": q.canonical_only,
            "count": s.emitted,
            "candidates": s.candidates,
            "nodes": s.nodes,
        }
        if q.mode == "sample":
            doc["seed"] = q.seed
            doc["samples"] = q.count
        if tables is not None:
            doc["tables"] = [to_document(t) for t in tables]
        _emit(dumps(doc), args.output)
    elif tables is None:
        _emit(f"{s.emitted}\n", args.output)
    else:
        body = "\n".join(serialize_compact(t) for t in tables)
        _emit(body + f"# {s.emitted} tables\n", args.output)
    return EXIT_OK


def cmd_hunt(args) -> int:
    theorem = args.theorem.split("-")[0]
    result = hunt_converse(theorem, args.order, args.budget, args.seed)
    if args.save and result.found:
        persist_counterexamples([result.verdict], args.save)
    if args.json:
        doc = {
            "theorem": args.theorem,
            "order": result.order,
            "seed": result.seed,
            "budget": result.budget,
            "found": result.found,
            "nodes": result.nodes,
            "tables": result.tables,
            "classes": result.classes,
            "certificate": certificate_to_json(result.verdict.certificate) if result.found else None,
        }
        _emit(dumps(doc))
    elif result.found:
        cert = result.verdict.certificate
        _emit(f"counterexample after {result.classes} classes ({result.nodes} nodes)\n"
              + serialize_compact(cert.table) + describe_certificate(cert) + "\n")
    else:
        _emit(f"budget exhausted: {result.classes} classes examined ({result.nodes} nodes), "
              "no counterexample\n")
    return EXIT_COUNTEREXAMPLE if result.found and args.fail_on_counterexample else EXIT_OK


def cmd_gen(args) -> int:
    t = gen_coset(args.n, args.k) if args.family == "coset" else gen_union(args.n, args.k)
    as_json = args.json or (args.output or "").endswith(".json")
    _emit(serialize_document(t) if as_json else serialize_compact(t), args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    ids = parse_theorem_ids(args.theorem)
    q = EnumerationQuery(order=args.order, canonical_only=args.canonical, jobs=args.jobs)
    tables = list(enumerate_tables(q))
    for path in args.extra:
        tables.append(read_table(path))
    report = sweep(tables, ids, _options(args), jobs=args.jobs)
    if args.persist and report.counterexamples:
        persist_counterexamples(report.counterexamples, args.persist)
    if args.json:
        _emit(dumps(report.to_json()))
    else:
        lines = [f"{report.tables} tables"]
        for tid, x in report.tallies.items():
            lines.append(f"{tid}: holds={x.holds} vacuous={x.vacuous} "
                         f"counterexample={x.counterexample}")
        if report.flagged:
            lines.append("never non-vacuous: " + " ".join(report.flagged))
        _emit("\n".join(lines) + "\n")
    failed = bool(report.counterexamples)
    return EXIT_COUNTEREXAMPLE if failed and args.fail_on_counterexample else EXIT_OK


def cmd_replay(args) -> int:
    ok = replay(load_certificate(args.certificate))
    print("replays" if ok else "does not replay")
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def cmd_fixture(args) -> int:
    _emit(fixture_text(args.name), args.output)
    return EXIT_OK


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--fail-on-counterexample", action="store_true",
                        help="exit 1 when a counterexample is found")

    readings = argparse.ArgumentParser(add_help=False)
    readings.add_argument("--strict-t9", action="store_true",
                          help="read T9's hypothesis per element: H∘a=H or a∘H=H for each a")
    readings.add_argument("--membership-t14", action="store_true",
                          help="read T14's inverses as e ∈ a′∘a instead of a′∘a = {e}")

    p = _Parser(prog="hyperlaw", description="Verify and enumerate finite LA-semihypergroups.")
    p.add_argument("--version", action="version", version=f"hyperlaw {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", parents=[common, readings], help="classify one table")
    s.add_argument("file")
    s.add_argument("--theorems", action="store_true", help="append all theorem verdicts")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("ideals", parents=[common], help="list hyperideals of a table")
    s.add_argument("file")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--kind", choices=[k.value for k in IdealKind])
    group.add_argument("--all-kinds", action="store_true")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("verify", parents=[common, readings], help="run theorem checks")
    s.add_argument("file")
    s.add_argument("--theorem", default="all", help="all, T1..T24, T25 or T25a/b/c, comma separated")
    s.add_argument("--converse", action="store_true", help="check the converse (T10, T11)")
    s.add_argument("--save-certificates", metavar="DIR")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", parents=[common], help="generate LA-semihypergroups")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--filter", action="append", default=[], metavar="FLAG",
                   help="intra_regular or an identity flag such as pure_left_identity; prefix not_ to negate")
    s.add_argument("--law", action="append", default=[], choices=[x.value for x in Law],
                   help="additional law every table must satisfy")
    s.add_argument("--no-left-invertive", action="store_true",
                   help="enumerate all hypergroupoids instead of LA-semihypergroups")
    s.add_argument("--canonical", action="store_true", help="one table per isomorphism class")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--sample", type=int, metavar="COUNT", help="draw COUNT random tables instead")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=_default_jobs())
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("hunt", parents=[common], help="search for converse counterexamples")
    s.add_argument("--theorem", required=True, choices=["T10-converse", "T11-converse"])
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--budget", type=int, default=100_000, help="search nodes to spend")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--save", metavar="DIR", help="write the certificate found as JSON")
    s.set_defaults(func=cmd_hunt)

    s = sub.add_parser("gen", parents=[common], help="modular family tables")
    s.add_argument("family", choices=["coset", "union"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("sweep", parents=[common, readings], help="run theorems over an enumeration")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--theorem", default="all")
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--extra", action="append", default=[], metavar="FILE",
                   help="also sweep this table file")
    s.add_argument("--persist", metavar="DIR", help="write counterexample certificates here")
    s.add_argument("--jobs", type=int, default=_default_jobs())
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("replay", help="re-verify a saved certificate")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("fixture", help="print a bundled fixture table")
    s.add_argument("name", choices=FIXTURES)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_fixture)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HyperlawError, OSError, ValueError) as exc:
        print(f"hyperlaw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run_cli(argv: list[str] | None = None) -> int:
    """Run without exiting; argparse usage errors become exit code 2."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
