"""Command-line front end.

Exit codes: 0 on success, 1 when ``verify`` finds a failing check, 2 on usage
or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import counting
from .enumeration import DEFAULT_CAP, enumerate_pm_classes, verify
from .errors import IsotemporalError
from .forms import validate_pm
from .symmetry import detect_symmetries
from .tempnet import load_network, temporal_reachable_set

USAGE_ERROR = 2

# "formula" is the three-branch closed formula; "burnside" is the orbit count
# that brute-force enumeration agrees with
_COUNTERS = {
    "formula": counting.isotemporal_class_count,
    "burnside": counting.burnside_class_count,
}


class _Usage(Exception):
    pass


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return USAGE_ERROR


def _cmd_count(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise _Usage(f"--n must be >= 3, got {args.n}")
    print(_COUNTERS[args.method](args.n))
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    lo, hi = args.start, args.stop
    if not 3 <= lo <= hi:
        raise _Usage(f"need 3 <= --from <= --to, got {lo}..{hi}")
    count = _COUNTERS[args.method]
    print("n,count,ratio" if args.ratios else "n,count")
    prev = count(lo - 1) if lo > 3 else None
    for n in range(lo, hi + 1):
        value = count(n)
        if args.ratios:
            ratio = "" if prev is None else f"{float(Fraction(value, prev)):.6f}"
            print(f"{n},{value},{ratio}")
        else:
            print(f"{n},{value}")
        prev = value
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise _Usage(f"--n must be >= 3, got {args.n}")
    census = enumerate_pm_classes(args.n, cap=args.cap, workers=args.workers)
    if args.format == "json":
        rows = [
            {"form": str(c.form), "orbit": c.orbit_size, **c.profile.to_json()}
            for c in census.classes
        ]
        print(json.dumps(rows, indent=2))
    else:
        for c in census.classes:
            print(f"{c.form} orbit={c.orbit_size} sym={c.profile.flags}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.start < 3:
        raise _Usage(f"--from must be >= 3, got {args.start}")
    if args.stop > args.cap:
        raise _Usage(f"--to {args.stop} exceeds the enumeration cap {args.cap}")
    report = verify(range(args.start, args.stop + 1), cap=args.cap, workers=args.workers)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in report], indent=2))
    else:
        print(f"{'n':>3}  {'check':<30} {'formula':>12} {'oracle':>12}  result")
        for r in report:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.n:>3}  {r.check:<30} {r.formula:>12} {r.oracle:>12}  {status}")
        failed = sum(not r.passed for r in report)
        print(f"{len(report) - failed}/{len(report)} checks passed")
    return 0 if all(r.passed for r in report) else 1


def _cmd_symmetry(args: argparse.Namespace) -> int:
    form = validate_pm(args.form)
    print(json.dumps(detect_symmetries(form).to_json()))
    return 0


def _cmd_reach(args: argparse.Namespace) -> int:
    try:
        net = load_network(args.network)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Usage(f"cannot read network: {exc}") from exc
    for v in sorted(temporal_reachable_set(net, args.source)):
        print(v)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotemporal",
        description="Count and enumerate isotemporal classes of temporal n-gons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of isotemporal classes of the n-gon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=tuple(_COUNTERS), default="formula")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("sequence", help="CSV of class counts over a range of n")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--ratios", action="store_true", help="add N(n)/N(n-1) column")
    p.add_argument("--method", choices=tuple(_COUNTERS), default="formula")
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("enumerate", help="one canonical form per class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="check closed formulas against enumeration")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "symmetry",
        help="symmetry report for a form such as '+0-0' (use '--' before forms starting with '-')",
    )
    p.add_argument("form")
    p.set_defaults(func=_cmd_symmetry)

    p = sub.add_parser("reach", help="vertices a temporal path from SOURCE can reach")
    p.add_argument("network", help="network JSON file")
    p.add_argument("--source", required=True)
    p.set_defaults(func=_cmd_reach)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        return _fail(str(exc))
    except IsotemporalError as exc:
        return _fail(f"{type(exc).__name__}: {exc}")
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
