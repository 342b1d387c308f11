"""Command-line driver: compute, complement, rc, verify.

Exit codes are a stable contract: 0 success (for verify, a report with no
failures), 1 a verify report with failures, 2 usage or parse errors
(including unknown claims and refused long runs), 3 internal method
disagreement, 4 domain errors such as a complement with negative
exponents.

The Schubert cache directory defaults to ./.schubert-cache, can be moved
with the SCHUBERT_CACHE environment variable, and --cache-dir beats both.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from .complement import NotAPolynomialError, complement, is_schubert
from .perm import format_perm, format_vec, pad_perm, parse_perm, parse_vec
from .poly import dumps, eval_all_ones, pretty, revlex_key
from .rc import all_rc_graphs, ascii_render, bottom_rc, rc_weight, top_rc
from .schubert import METHODS, schubert
from .verify import CLAIMS, SweepConfig, run_claim

DEFAULT_CACHE = ".schubert-cache"


def _resolve_cache_dir(flag_value: str | None) -> Path:
    if flag_value is not None:
        return Path(flag_value)
    env = os.environ.get("SCHUBERT_CACHE")
    if env:
        return Path(env)
    return Path(DEFAULT_CACHE)


def _print_poly(f, fmt: str) -> None:
    print(pretty(f) if fmt == "pretty" else dumps(f))


def _cmd_compute(args: argparse.Namespace) -> int:
    try:
        w = parse_perm(args.perm)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    names = ["dd", "bjs", "rc"] if args.method == "all" else [args.method]
    results = [(name, METHODS[name](w)) for name in names]
    f = results[0][1]
    if any(g != f for _, g in results[1:]):
        detail = ", ".join(
            f"{name}:{len(g.terms)} terms" for name, g in results
        )
        print(f"DISAGREE {detail}", file=sys.stderr)
        return 3
    if args.count:
        print(eval_all_ones(f))
    else:
        _print_poly(f, args.fmt)
    if args.method == "all":
        print("AGREE")
    return 0


def _cmd_complement(args: argparse.Namespace) -> int:
    try:
        w = parse_perm(args.perm)
        mu = parse_vec(args.mu)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        g = complement(schubert(w), mu)
    except NotAPolynomialError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    _print_poly(g, args.fmt)
    v = is_schubert(g)
    if v is None:
        print("NOT-SCHUBERT")
    else:
        print(f"SCHUBERT w'={format_perm(pad_perm(v, max(len(v), len(w))))}")
    return 0


def _cmd_rc(args: argparse.Namespace) -> int:
    try:
        w = parse_perm(args.perm)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.bottom or args.top:
        graph = bottom_rc(w) if args.bottom else top_rc(w)
        print(ascii_render(graph))
        return 0
    graphs = sorted(
        all_rc_graphs(w),
        key=lambda d: (revlex_key(rc_weight(d)), sorted(d.crosses)),
        reverse=True,
    )
    print(f"graphs={len(graphs)}")
    for d in graphs:
        print()
        print(f"weight={format_vec(rc_weight(d))}")
        print(ascii_render(d))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        jobs=max(1, args.jobs),
        long_run=args.long_run,
        cache_dir=_resolve_cache_dir(args.cache_dir),
    )
    try:
        report = run_claim(args.claim, args.n, cfg)
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = report.to_csv() if args.csv else report.to_json()
    sys.stdout.write(text)
    if args.out is not None:
        Path(args.out).write_text(text)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubcomp",
        description="Schubert polynomials, their complements, and exhaustive checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print a Schubert polynomial")
    p.add_argument("perm", help="one-line notation, e.g. 1432 or 10,2,1,...")
    p.add_argument("--method", choices=["dd", "bjs", "rc", "all"], default="dd")
    p.add_argument(
        "--format", dest="fmt", choices=["pretty", "raw"], default="pretty",
        help="pretty monomial form or the line-oriented serialization",
    )
    p.add_argument(
        "--count", action="store_true",
        help="print the number of RC-graphs (all coefficients summed) instead",
    )
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("complement", help="complement x^mu S_w(1/x) and recognize it")
    p.add_argument("perm")
    p.add_argument("--mu", required=True, help="shift vector, e.g. 2,1,0")
    p.add_argument("--format", dest="fmt", choices=["pretty", "raw"], default="pretty")
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("rc", help="draw RC-graphs")
    p.add_argument("perm")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--bottom", action="store_true", help="left-justified graph only")
    group.add_argument("--top", action="store_true", help="top graph only")
    group.add_argument("--all", action="store_true", help="whole closure with weights")
    p.set_defaults(func=_cmd_rc)

    p = sub.add_parser("verify", help="run an exhaustive sweep and report")
    p.add_argument("claim", help=f"one of: {', '.join(sorted(CLAIMS))}")
    p.add_argument("--n", type=int, required=True, help="symmetric group size (or bound)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument(
        "--long-run", action="store_true",
        help="allow the gated n=7 pair sweeps (checkpointed to the cache dir)",
    )
    p.add_argument("--out", help="also write the report to this file")
    p.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    p.add_argument("--cache-dir", help=f"default ./{DEFAULT_CACHE} or $SCHUBERT_CACHE")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return args.func(args)


def main_entry() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    main_entry()
