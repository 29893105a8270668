"""Command-line front end.

JSON goes to stdout, human-readable notes to stderr.  Exit codes: 0 success,
1 verification false, 2 usage, 3 domain error, 4 unsupported input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import decompose as dec
from .errors import MLImageError, NotSupported, ParseError
from .freepoly import load_poly
from .matrix import Matrix
from .selftest import format_report, run_selftest
from .witness import synthesize, verify

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_DOMAIN, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _read_arg(value: str) -> str:
    if value.startswith("@"):
        try:
            with open(value[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {value[1:]}: {exc}") from None
    return value


def _load_matrix(value: str) -> Matrix:
    text = _read_arg(value)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"matrix is not valid JSON: {exc.msg}", exc.pos) from None
    return Matrix.from_json(data)


def _load_witnesses(value: str) -> list[Matrix]:
    data = json.loads(_read_arg(value))
    if isinstance(data, dict):
        data = data["witnesses"]
    return [Matrix.from_json(w) for w in data]


def cmd_synthesize(args) -> int:
    f = load_poly(_read_arg(args.poly))
    d = _load_matrix(args.target)
    if args.n is not None and args.n != d.n:
        raise UsageError(f"--n {args.n} does not match target dimension {d.n}")
    report = synthesize(f, d, seed=args.seed)
    print(report.dumps())
    print(f"branch: {' -> '.join(report.branch)}", file=sys.stderr)
    return EXIT_OK if report.verified else EXIT_FALSE


def cmd_verify(args) -> int:
    f = load_poly(_read_arg(args.poly))
    ws = _load_witnesses(args.witnesses)
    d = _load_matrix(args.target)
    ok = verify(f, ws, d)
    print(json.dumps({"verified": ok}))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_decompose(args) -> int:
    f = load_poly(_read_arg(args.poly))
    print(json.dumps(dec.plan_to_json(dec.classify(f)), indent=2))
    return EXIT_OK


def cmd_selftest(args) -> int:
    if args.trials < 0 or args.nmin < 3 or args.nmax < args.nmin:
        raise UsageError("need trials >= 0 and 3 <= nmin <= nmax")
    report = run_selftest(args.seed, args.trials, args.nmin, args.nmax)
    print(format_report(report))
    for name, c in report["suites"].items():
        print(f"{name:22s} passed={c['passed']} failed={c['failed']} skipped={c['skipped']}", file=sys.stderr)
    return EXIT_OK if report["all_passed"] else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlimage",
        description="Exact witnesses for trace-zero matrices in the image of multilinear polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synthesize", help="construct and verify witnesses")
    p.add_argument("--poly", required=True, help="polynomial text, JSON word map, or @file")
    p.add_argument("--target", required=True, help="target matrix JSON or @file")
    p.add_argument("--n", type=int, help="expected dimension")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("verify", help="check f(witnesses) == target exactly")
    p.add_argument("--poly", required=True)
    p.add_argument("--witnesses", required=True, help="JSON list of matrices (or a report) or @file")
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="classify a polynomial and print its coordinates")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("selftest", help="run the seeded property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=6)
    p.set_defaults(func=cmd_selftest)
    return parser


def _error(code: str, message: str, status: int) -> int:
    print(json.dumps({"error": code, "message": message}))
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        return _error("USAGE", str(exc), EXIT_USAGE)
    except NotSupported as exc:
        return _error(exc.code, str(exc), EXIT_UNSUPPORTED)
    except MLImageError as exc:
        return _error(exc.code, str(exc), EXIT_DOMAIN)
    except (KeyError, json.JSONDecodeError) as exc:
        return _error("PARSE_ERROR", str(exc), EXIT_DOMAIN)


if __name__ == "__main__":
    sys.exit(main())
