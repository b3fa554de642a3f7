"""Command-line front end.

Exit codes: 0 all checks pass, 1 an identity check failed, 2 bad invocation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .checks import IDENTITIES, THEOREMS, check_identity, run_fuzz, summarize
from .errors import InvalidRange, ParamParseError, UnknownPreset
from .genfunc import gf_expand, gf_numerator
from .horadam_quaternion import qw_terms
from .presets import PRESET_NAMES, preset_lookup, resolve_params


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _add_source(parser, required=True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--preset", help=f"one of: {', '.join(PRESET_NAMES)}")
    group.add_argument("--params", help="a,b,p,q as integers or n/d rationals")


def _table(rows, fmt, header):
    """rows: (index, quaternion) pairs."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writerow(header)
        for k, q in rows:
            writer.writerow([k, *q.to_json()])
        return buf.getvalue()
    return "".join(f"{k}: {q}\n" for k, q in rows)


def cmd_gen(args) -> int:
    params = resolve_params(args.preset, args.params)
    lo, hi = args.start, args.to
    if lo < 0 or hi < lo:
        raise InvalidRange(f"need 0 <= from <= to, got from={lo} to={hi}")
    rows = list(enumerate(qw_terms(params, hi + 1)))[lo:]
    if args.format == "json":
        out = _dump(
            {
                "params": params.to_json(),
                "range": [lo, hi],
                "rows": [{"n": n, "q": q.to_json()} for n, q in rows],
            }
        )
    else:
        out = _table(rows, args.format, ["n", "w", "x", "y", "z"])
    sys.stdout.write(out)
    return 0


def cmd_gf(args) -> int:
    params = resolve_params(args.preset, args.params)
    series = gf_expand(params, args.order)
    n0, n1 = gf_numerator(params)
    if args.format == "json":
        out = _dump({"params": params.to_json(), "numerator": [n0.to_json(), n1.to_json()], **series.to_json()})
    elif args.format == "csv":
        out = _table(enumerate(series.coefficients), "csv", ["k", "w", "x", "y", "z"])
    else:
        out = f"numerator: {n0} + {n1} t\ndenominator: 1 - ({params.p}) t - ({params.q}) t^2\n"
        out += _table(enumerate(series.coefficients), "plain", None)
    sys.stdout.write(out)
    return 0


def _emit(payload: dict, out_path) -> int:
    text = _dump(payload)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if payload["status"] == "pass" else 1


def cmd_check(args) -> int:
    if args.to < 0:
        raise InvalidRange(f"--to must be >= 0, got {args.to}")
    identities = list(IDENTITIES) if args.identity == "all" else [args.identity]
    if args.preset is None and args.params is None:
        sources = [(name, preset_lookup(name).params) for name in PRESET_NAMES]
    else:
        sources = [(args.preset, resolve_params(args.preset, args.params))]
    reports = [
        check_identity(params, identity, args.to, preset=name)
        for name, params in sources
        for identity in identities
    ]
    return _emit(summarize(reports), args.out)


def cmd_fuzz(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be >= 1")
    if args.count < 0 or args.to < 0:
        raise InvalidRange("--count and --to must be >= 0")
    reports = run_fuzz(args.seed, args.count, args.bound, args.to)
    payload = {"seed": args.seed, "count": args.count, "bound": args.bound, "to": args.to}
    payload.update(summarize(reports))
    return _emit(payload, args.out)


def cmd_presets(args) -> int:
    sys.stdout.write(_dump([preset_lookup(name).to_json() for name in PRESET_NAMES]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="horadam", description="Horadam quaternion sequences and identity checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print quaternion sequence terms")
    _add_source(p)
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify closed forms against the recurrence")
    _add_source(p, required=False)
    p.add_argument("--identity", choices=[*IDENTITIES, "all"], required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gf", help="expand the generating function")
    _add_source(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("fuzz", help=f"check {', '.join(THEOREMS)} on random integer parameters")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("presets", help="list the named parameter families")
    p.set_defaults(func=cmd_presets)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidRange, UnknownPreset, ParamParseError, UsageError) as exc:
        print(f"horadam {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
