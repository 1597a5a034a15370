"""Command-line interface.

Exit codes: 0 success, 1 partition check failed, 2 invalid parameters,
3 empty fractal, 4 density search did not reach the target.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .dimension import DEFAULT_ITERS, similarity_dimension
from .errors import EmptyFractal, InvalidRange, TooManyTiles
from .geometry import IDENTITY_SIM, PROTOTILE_AREA, verify_partition
from .render import RenderStyle, render_rule_diagram, render_svg
from .spectrum import approx_dimension, convexity_report, lift_drift_report, sweep
from .substitution import DEFAULT_MAX_TILES, expand, from_expansion, iterate

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_EMPTY = 3
EXIT_NOT_REACHED = 4

CSV_HEADER = ["n", "a", "b", "removed", "total", "fraction", "root", "dimension"]


class UsageError(Exception):
    pass


def _num(x: float) -> float:
    """Round to 12 significant digits for JSON output."""
    return float(f"{x:.12g}")


def _fixed(x: float) -> str:
    return f"{x:.12f}"


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _need_n(n: int) -> None:
    if n < 1:
        raise UsageError("n must be >= 1")


def cmd_tiling(args) -> int:
    _need_n(args.n)
    style = RenderStyle(color_by=args.color_by)
    _write(args.out, render_svg(from_expansion(expand(args.n)), style))
    return EXIT_OK


def _parse_indices(text: str | None):
    if text is None:
        return None
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--indices must be comma-separated integers, got {text!r}")


def cmd_fractal(args) -> int:
    _need_n(args.n)
    if args.steps < 0:
        raise UsageError("steps must be >= 0")
    indices = _parse_indices(args.indices)
    strategy = "explicit" if indices is not None else args.strategy
    tiles = iterate(args.n, args.a, args.b, args.steps, strategy, args.seed,
                    indices=indices, max_tiles=args.max_tiles)
    _write(args.out, render_svg(tiles, RenderStyle(color_by=args.color_by)))
    return EXIT_OK


def cmd_rule(args) -> int:
    _need_n(args.n)
    indices = _parse_indices(args.indices)
    strategy = "explicit" if indices is not None else args.strategy
    _write(args.out, render_rule_diagram(args.n, args.a, args.b, strategy, args.seed,
                                         indices=indices))
    return EXIT_OK


def cmd_dimension(args) -> int:
    _need_n(args.n)
    if args.iters < 1:
        raise UsageError("iters must be >= 1")
    res = similarity_dimension(args.n, args.a, args.b, args.iters)
    lo, hi = float(res.root_lo), float(res.root_hi)
    if args.json:
        out = {"n": res.n, "a": res.a, "b": res.b, "root_lo": _num(lo),
               "root_hi": _num(hi), "root": _num(res.x), "dimension": _num(res.d)}
        print(json.dumps(out))
    else:
        print(f"p(x) = {res.poly}")
        print(f"d = {_fixed(res.d)} (root ∈ [{_fixed(lo)},{_fixed(hi)}])")
    return EXIT_OK


def spectrum_csv(n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in sweep(n):
        w.writerow([r.n, r.a, r.b, r.removed, r.total, _fixed(r.fraction),
                    _fixed(r.root), _fixed(r.dimension)])
    return buf.getvalue()


def cmd_spectrum(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    _write(args.out, spectrum_csv(args.n))
    if args.report:
        rep = convexity_report(sweep(args.n))
        print(f"max second difference {rep['max_second_difference']:.3e}; "
              f"non-concave points: {len(rep['violations'])}", file=sys.stderr)
    return EXIT_OK


def cmd_approx(args) -> int:
    if not 0.0 <= args.target <= 2.0:
        raise UsageError("target must lie in [0, 2]")
    if not args.eps > 0:
        raise UsageError("eps must be > 0")
    if args.n_max < 2:
        raise UsageError("n-max must be >= 2")
    res = approx_dimension(args.target, args.eps, args.n_max)
    if args.json:
        print(json.dumps({"target": args.target, "eps": args.eps, "n": res.n, "a": res.a,
                          "b": res.b, "dimension": _num(res.d), "error": _num(res.error),
                          "reached": res.reached}))
    else:
        status = "reached" if res.reached else "NOT reached"
        print(f"({res.n},{res.a},{res.b}) d = {_fixed(res.d)} "
              f"|d - target| = {res.error:.3e} ({status})")
    return EXIT_OK if res.reached else EXIT_NOT_REACHED


def cmd_lift(args) -> int:
    if args.k < 0:
        raise UsageError("k must be >= 0")
    _need_n(args.n)
    rows = lift_drift_report(args.n, args.a, args.b, args.k)
    if args.json:
        print(json.dumps({"source": [args.n, args.a, args.b], "dimension": _num(rows[0].d),
                          "lifts": [{"k": r.k, "n": r.lifted[0], "a": r.lifted[1],
                                     "b": r.lifted[2], "dimension": _num(r.d_lifted),
                                     "drift": _num(r.drift)} for r in rows]}))
    else:
        print(f"source ({args.n},{args.a},{args.b}) d = {_fixed(rows[0].d)}")
        print(f"{'k':>3}  {'lifted':>20}  {'dimension':>16}  {'drift':>16}")
        for r in rows:
            lifted = "({},{},{})".format(*r.lifted)
            print(f"{r.k:>3}  {lifted:>20}  {_fixed(r.d_lifted):>16}  {_fixed(r.drift):>16}")
    return EXIT_OK


def verify_generations(n: int) -> list[str]:
    """Failure messages for generations 1..n (empty when all pass)."""
    failures = []
    for g in range(1, n + 1):
        exp = expand(g)
        rep = verify_partition(IDENTITY_SIM, exp.children)
        if not rep:
            failures.append(f"generation {g}: {rep}")
        total = from_expansion(exp).total_area()
        if total != PROTOTILE_AREA:
            failures.append(f"generation {g}: area {total!r} != {PROTOTILE_AREA!r}")
    return failures


def cmd_verify(args) -> int:
    _need_n(args.n)
    failures = verify_generations(args.n)
    if failures:
        for f in failures:
            print("FAIL:", f)
        return EXIT_VERIFY_FAILED
    print(f"OK: generations 1..{args.n} partition exactly")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ammann", description="Ammann chair tilings, fractals and their dimensions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tiling", help="render the n-th generation as SVG")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--color-by", choices=["label", "none"], default="label")
    p.set_defaults(func=cmd_tiling)

    def mask_flags(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=int, default=0)
        p.add_argument("--b", type=int, default=0)
        p.add_argument("--strategy", choices=["first", "last", "random"], default="first")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--indices", help="explicit comma-separated child indices")
        p.add_argument("--out", required=True)

    p = sub.add_parser("fractal", help="render k steps of the masked (n,a,b) rule")
    mask_flags(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--max-tiles", type=int, default=DEFAULT_MAX_TILES)
    p.add_argument("--color-by", choices=["label", "none"], default="label")
    p.set_defaults(func=cmd_fractal)

    p = sub.add_parser("rule", help="draw the masked (n,a,b) substitution rule")
    mask_flags(p)
    p.set_defaults(func=cmd_rule)

    p = sub.add_parser("dimension", help="similarity dimension of (n,a,b)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--iters", type=int, default=DEFAULT_ITERS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("spectrum", help="fixed-n sweep as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--report", action="store_true", help="print a concavity summary to stderr")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("approx", help="search (n,a,b) with dimension near a target")
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("lift", help="dimension drift under the Fibonacci lift")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="exact partition check of generations 1..n")
    p.add_argument("--n", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmptyFractal as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EMPTY
    except TooManyTiles as e:
        print(f"error: {e}; raise --max-tiles to allow it", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, InvalidRange) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
