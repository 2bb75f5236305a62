"""Command-line surface: analyze, dlp, scan, verify.

Exit codes: 0 success, 1 math-level failure (unreachable target,
failed verification check), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import sys

from . import dlp as dlp_mod
from .graph import (
    decompose,
    export_dot,
    export_json,
    verify_map_properties,
    verify_theorem,
)
from .halving import make_context
from .modarith import primes_in_range
from .scanner import export_csv, scan_range


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunwalk",
        description=(
            "Sunlet decomposition of the mod-p halving map, walk-based "
            "discrete logarithms, and weak-prime scanning."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="decompose a prime and report its structure")
    p_analyze.add_argument("prime", type=int)
    p_analyze.add_argument("--format", choices=("human", "json"), default="human")
    p_analyze.add_argument("--dot", metavar="PATH", help="write the decomposition as DOT")
    p_analyze.add_argument("--figure", metavar="PATH", help="render the components to an image file")
    p_analyze.set_defaults(func=cmd_analyze)

    p_dlp = sub.add_parser("dlp", help="solve a discrete logarithm by exponent walk")
    p_dlp.add_argument("prime", type=int)
    p_dlp.add_argument("b", type=int)
    p_dlp.add_argument("--base", type=int, default=None, help="solve base**x = b (default base 2)")
    p_dlp.set_defaults(func=cmd_dlp)

    p_scan = sub.add_parser("scan", help="audit a range of primes for short cycles")
    p_scan.add_argument("lo", type=int)
    p_scan.add_argument("hi", type=int)
    p_scan.add_argument("--threshold", type=int, default=64, help="weak when cycle length <= this")
    p_scan.add_argument("--csv", metavar="PATH", help="write the per-prime records as CSV")
    p_scan.add_argument("--plot", metavar="PATH", help="render cycle lengths to an image file")
    p_scan.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_scan.set_defaults(func=cmd_scan)

    p_verify = sub.add_parser("verify", help="machine-check the structure theorems")
    p_verify.add_argument("target", help="a prime, or an inclusive range like 3..10000")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def cmd_analyze(args: argparse.Namespace) -> int:
    ctx = make_context(args.prime)
    d = decompose(ctx)
    if args.format == "json":
        sys.stdout.write(export_json(d))
    else:
        print(f"p = {ctx.p}")
        print(f"q = {ctx.q}")
        print(f"cycle_length = {ctx.cycle_length}")
        print(f"component_count = {ctx.component_count}")
        for i, comp in enumerate(d.components):
            cyc = ", ".join(str(v) for v in comp.cycle)
            rays = " ".join(f"{o}->{t}" for o, t in comp.rays)
            print(f"component {i}: cycle ({cyc})")
            print(f"  rays: {rays}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(export_dot(d))
    if args.figure:
        from .plots import render_decomposition

        render_decomposition(d, args.figure)
    return 0


def _print_trace(trace: dlp_mod.WalkTrace) -> None:
    widths = [
        max(len(str(row[col])) for row in trace.entries) for col in range(3)
    ]
    head = ("n", "u_n", "x_n")
    widths = [max(w, len(h)) for w, h in zip(widths, head)]
    print("  ".join(h.rjust(w) for h, w in zip(head, widths)))
    for row in trace.entries:
        print("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))


def cmd_dlp(args: argparse.Namespace) -> int:
    ctx = make_context(args.prime)
    base = args.base if args.base is not None else 2
    if args.base is not None:
        result = dlp_mod.solve_dlp_general(ctx, args.base, args.b)
    else:
        result = dlp_mod.solve_dlp2(ctx, args.b)
    print(f"p = {ctx.p}  b = {args.b}  base = {base}")
    if result.trace is not None:
        _print_trace(result.trace)
    if result.ok:
        print(f"x = {result.exponent}  (verified: {base}**{result.exponent} = {args.b} (mod {ctx.p}))")
        return 0
    print(f"{result.status}: no exponent found for base {base}")
    return 1


def cmd_scan(args: argparse.Namespace) -> int:
    report = scan_range(args.lo, args.hi, threshold=args.threshold, jobs=args.jobs)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(export_csv(report))
    if args.plot:
        from .plots import render_scan

        render_scan(report, args.plot)
    print(
        f"scanned {report.total_primes} primes in [{report.lo}, {report.hi}]; "
        f"{report.weak_primes} weak (threshold {report.threshold})"
    )
    weak = [r.p for r in report.records if r.weak]
    if weak:
        shown = ", ".join(str(p) for p in weak[:20])
        more = "" if len(weak) <= 20 else f" (+{len(weak) - 20} more)"
        print(f"weak primes: {shown}{more}")
    return 0


def _verify_one(p: int, verbose: bool) -> bool:
    ctx = make_context(p)
    theorem = verify_theorem(decompose(ctx))
    pointwise = verify_map_properties(ctx)
    ok = theorem.all_passed and pointwise.all_passed
    if verbose:
        print(f"p = {ctx.p} (L = {ctx.cycle_length}, c = {ctx.component_count})")
        for check in theorem.checks + pointwise.checks:
            tag = "PASS" if check.passed else f"FAIL [{check.counterexample}]"
            print(f"  {check.name}: {tag}")
    else:
        for check in theorem.checks + pointwise.checks:
            if not check.passed:
                print(f"p = {p}: {check.name} FAIL [{check.counterexample}]")
    return ok


def cmd_verify(args: argparse.Namespace) -> int:
    target = args.target
    if ".." in target:
        lo_text, hi_text = target.split("..", 1)
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise ValueError(f"cannot parse range {target!r}; expected LO..HI")
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        primes = [p for p in primes_in_range(lo, hi) if p != 2]
        all_ok = all([_verify_one(p, verbose=False) for p in primes])
        status = "all checks pass" if all_ok else "FAILURES FOUND"
        print(f"verified {len(primes)} odd primes in [{lo}, {hi}]: {status}")
        return 0 if all_ok else 1
    try:
        p = int(target)
    except ValueError:
        raise ValueError(f"cannot parse {target!r} as a prime or range")
    ok = _verify_one(p, verbose=True)
    print("all checks pass" if ok else "FAILURES FOUND")
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
