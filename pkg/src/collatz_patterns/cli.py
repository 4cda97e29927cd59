"""Command-line interface.

Exit codes: 0 success, 1 verification or property failure, 2 usage error.
Big integers are written as exact decimal strings, including inside JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import core, oracle, realizer, selftest
from .core import PatternError


class UsageError(Exception):
    pass


def parse_pattern(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        entries = [int(p, 10) for p in parts]
    except ValueError:
        raise UsageError(f"cannot parse pattern {text!r}") from None
    try:
        return core.validate_prefix(entries)
    except PatternError as exc:
        raise UsageError(str(exc)) from None


def format_pattern(entries: Sequence[int]) -> str:
    return ",".join(str(e) for e in entries)


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}") from None


def _odd(text: str) -> int:
    n = _parse_int(text, "n")
    if n < 1 or not n & 1:
        raise UsageError(f"n must be an odd positive integer, got {n}")
    return n


def family_record(family: realizer.RealizationFamily) -> dict:
    return {
        "pattern": format_pattern(family.pattern),
        "n_base": str(family.n_base),
        "n_stride": str(family.n_stride),
        "m1_base": str(family.m1_base),
        "m1_stride": str(family.m1_stride),
        "m_last_base": str(family.m_last_base),
        "m_last_stride": str(family.m_last_stride),
        "s1": family.s1,
        "Q_r": family.q_exp,
        "S_r": family.s_exp,
    }


def cmd_extract(args) -> int:
    n = _odd(args.n)
    if args.count < 1:
        raise UsageError("count must be at least 1")
    if args.stepwise:
        entries = oracle.stepwise_extract(n, args.count)
    else:
        entries = core.extract_pattern(n, args.count)
    if args.json:
        print(json.dumps({
            "n": str(n),
            "count": args.count,
            "method": "stepwise" if args.stepwise else "fast",
            "pattern": format_pattern(entries),
        }))
    else:
        print(format_pattern(entries))
    return 0


def cmd_realize(args) -> int:
    pattern = parse_pattern(args.pattern)
    try:
        core.validate_pattern(pattern)
    except PatternError as exc:
        raise UsageError(str(exc)) from None
    if args.witnesses < 0:
        raise UsageError("witnesses must be nonnegative")
    family = realizer.realize(pattern)
    witnesses = [realizer.nth_realizer(family, t) for t in range(args.witnesses)]
    if args.verify:
        for n in witnesses:
            report = oracle.verify(n, pattern)
            if not report:
                print(f"witness {n} failed verification: {report.describe()}", file=sys.stderr)
                return 1
    record = family_record(family)
    if args.json:
        record["witnesses"] = [str(n) for n in witnesses]
        print(json.dumps(record))
    else:
        for key, value in record.items():
            print(f"{key}={value}")
        if witnesses:
            print("witnesses=" + ",".join(str(n) for n in witnesses))
    return 0


def cmd_verify(args) -> int:
    n = _odd(args.n)
    report = oracle.verify(n, parse_pattern(args.pattern))
    print(report.describe())
    return 0 if report else 1


def cmd_search(args) -> int:
    pattern = parse_pattern(args.pattern)
    limit = _parse_int(args.limit, "limit")
    if limit < 1:
        raise UsageError("limit must be positive")
    if args.jobs < 1:
        raise UsageError("jobs must be positive")
    found = oracle.brute_force_search(pattern, limit, jobs=args.jobs)
    if args.json:
        print(json.dumps([str(n) for n in found]))
    else:
        for n in found:
            print(n)
    return 0


def cmd_selftest(args) -> int:
    if args.max_entry < 1 or args.max_r < 0 or args.trials < 0:
        raise UsageError("max-entry must be positive, max-r and trials nonnegative")
    results = selftest.run_selftest(args.max_entry, args.max_r, args.trials, args.seed)
    for result in results:
        print(result.line())
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatz-patterns",
        description="Extract and realize Collatz evolution patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="evolution pattern prefix of an odd number")
    p.add_argument("--n", required=True)
    p.add_argument("--count", type=int, default=9)
    p.add_argument("--stepwise", action="store_true", help="use the step-by-step oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("realize", help="progression of seeds realizing a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--witnesses", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="check a number against a pattern prefix")
    p.add_argument("--n", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for realizers up to a limit")
    p.add_argument("--pattern", required=True)
    p.add_argument("--limit", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser(
        "selftest",
        help="run the property suites",
        description="Run the property suites. The completeness search is capped at "
        f"entries <= {selftest.COMPLETENESS_MAX_ENTRY} and r <= {selftest.COMPLETENESS_MAX_R}.",
    )
    p.add_argument("--max-entry", type=int, default=4)
    p.add_argument("--max-r", type=int, default=4)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
