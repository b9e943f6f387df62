"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 internal error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .cycpres import HParams
from .records import OutputRecord, to_csv
from .search import (
    SUITES,
    SearchBoundsError,
    SearchReport,
    search_perfect,
    verify_det_cross,
)

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_VERIFY = 0, 1, 2, 3

SUITE_DEFAULTS = {"r_max": 10, "n_max": 20, "s_max": 10}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hrns", description="Abelianizations and connected-LOG classification of H(r,n,s).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple_args(p):
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    triple_args(sub.add_parser("ab", help="abelianization of H(r,n,s)"))
    triple_args(sub.add_parser("classify", help="connected-LOG classification of H(r,n,s)"))

    p = sub.add_parser("search", help="search for perfect H(r,n,s)")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="report path; without it only the summary is printed")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--r-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--s-max", type=int)
    p.add_argument("--random", type=int, default=500, help="random vectors for detxcheck")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    return parser


def _params(args) -> HParams:
    try:
        return HParams(args.r, args.n, args.s)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(records: List[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        if len(records) == 1:
            return records[0].to_json() + "\n"
        return json.dumps([r.to_dict() for r in records], sort_keys=True) + "\n"
    if fmt == "csv":
        return to_csv(records)
    return "\n".join(r.plain() for r in records) + "\n"


def cmd_ab(args) -> int:
    rec = OutputRecord.build(_params(args))
    sys.stdout.write(_emit([rec], args.format))
    return EXIT_OK


def cmd_classify(args) -> int:
    rec = OutputRecord.build(_params(args), classify=True)
    sys.stdout.write(_emit([rec], args.format))
    return EXIT_OK


def render_report(report: SearchReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    flagged = sorted(
        {(t.r, t.n, t.s) for t in report.perfect} | {(c.r, c.n, c.s) for c in report.candidates}
    )
    records = [OutputRecord.build(HParams(*t), classify=True) for t in flagged]
    if fmt == "csv":
        return to_csv(records)
    lines = [f"ranges: r<={report.r_max} n<={report.n_max} s<={report.s_max}; {report.examined} examined"]
    for t in report.perfect:
        tag = "conjecture-relevant" if t.conjecture_relevant else "excluded (r or s = 0 mod n)"
        lines.append(f"perfect H({t.r},{t.n},{t.s}) {tag}")
    for c in report.candidates:
        lines.append(f"CandidateCaseC H({c.r},{c.n},{c.s}) half={c.half}")
    bad = [p for p in report.prechecks if p.applicable and not p.finitely_many_n]
    lines.append(f"prechecks: {len(report.prechecks)} pairs, {len(bad)} failing")
    return "\n".join(lines) + "\n"


def cmd_search(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    try:
        report = search_perfect(args.r_max, args.n_max, args.s_max, jobs=args.jobs)
    except SearchBoundsError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        text = render_report(report, args.format)
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"hrns: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
    print(report.summary())
    if not report.sound:
        print("hrns: a reported triple failed re-verification", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = {k: getattr(args, k) for k in SUITE_DEFAULTS}
    try:
        if args.suite == "detxcheck":
            n_max = bounds["n_max"] or 16
            if bounds["r_max"] and bounds["s_max"]:
                rep = verify_det_cross(bounds["r_max"], n_max, bounds["s_max"], args.random, n_max, args.seed)
            else:
                rep = verify_det_cross(0, n_max, 0, args.random, n_max, args.seed)
        else:
            filled = {k: v if v is not None else SUITE_DEFAULTS[k] for k, v in bounds.items()}
            rep = SUITES[args.suite](filled["r_max"], filled["n_max"], filled["s_max"])
    except SearchBoundsError as exc:
        raise UsageError(str(exc)) from exc

    records, raw = [], []
    for ce in rep.counterexamples:
        if "r" in ce:
            records.append(OutputRecord.build(HParams(ce["r"], ce["n"], ce["s"]), classify=True))
        raw.append(ce)
    if args.format == "json":
        print(json.dumps({"suite": rep.suite, "passed": rep.passed, "checked": rep.checked,
                          "counterexamples": raw, "records": [r.to_dict() for r in records]}, sort_keys=True))
    else:
        if records:
            sys.stdout.write(_emit(records, args.format))
        for ce in raw:
            if "r" not in ce:
                print(json.dumps(ce, sort_keys=True))
        print(rep.summary())
    return EXIT_OK if rep.passed else EXIT_VERIFY


COMMANDS = {"ab": cmd_ab, "classify": cmd_classify, "search": cmd_search, "verify": cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hrns: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"hrns: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
