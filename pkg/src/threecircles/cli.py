"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 bisection depth exhausted,
3 instance generator exhausted.  A ``check`` campaign with failures also
exits 1.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .certcheck import KINDS, CampaignParams, RootSpec, run_campaign
from .errors import DepthExhausted, GeneratorExhausted, ThreeCirclesError
from .isolator import IsolatorConfig, isolate, isolate_squarefree, strip_endpoint_roots
from .normal import is_normal, normal_via_properties
from .polycore import format_poly, format_rational, mobius, parse_poly, parse_rational
from .regions import DEFAULT_PRECISION_BITS, IntervalLR
from .signs import bernstein_coeffs, sign_changes
from .svg import render_svg

EXIT_OK, EXIT_USAGE, EXIT_DEPTH, EXIT_GENERATOR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ThreeCirclesError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _poly(text: str):
    try:
        return parse_poly(text)
    except ThreeCirclesError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _interval(args) -> IntervalLR:
    if not args.l < args.r:
        raise UsageError(f"need l < r, got ({format_rational(args.l)}, {format_rational(args.r)})")
    return IntervalLR(args.l, args.r)


def _emit(args, command: str, inputs: dict, result: dict, text: str, seed=None) -> None:
    if args.format == "json":
        doc = {"command": command, "inputs": inputs, "result": result, "seed": seed,
               "version": __version__}
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _pairs(ivs):
    return [[format_rational(a), format_rational(b)] for a, b in ivs]


def _isolation_dict(res) -> dict:
    return {
        "exact_roots": [format_rational(x) for x in res.exact_roots],
        "intervals": _pairs(res.intervals),
        "depth_reached": res.depth_reached,
        "node_count": res.node_count,
    }


def _isolation_text(res) -> str:
    lines = []
    if not res.intervals and not res.exact_roots:
        lines.append("no roots")
    for a, b in res.intervals:
        lines.append(f"interval ({format_rational(a)}, {format_rational(b)})")
    for x in res.exact_roots:
        lines.append(f"root {format_rational(x)}")
    lines.append(f"depth {res.depth_reached}, nodes {res.node_count}")
    return "\n".join(lines)


def cmd_isolate(args) -> int:
    iv = _interval(args)
    p = args.poly
    if p.is_zero():
        raise UsageError("the zero polynomial has no isolated roots")
    cfg = IsolatorConfig(max_depth=args.max_depth)
    inputs = {"poly": format_poly(p), "l": format_rational(iv.l), "r": format_rational(iv.r),
              "max_depth": args.max_depth, "squarefree_auto": args.squarefree_auto}
    extra: dict = {}
    extra_text: list[str] = []
    try:
        if args.squarefree_auto:
            sq = isolate_squarefree(p, iv, cfg)
            res = sq.result
            extra["squarefree_part"] = format_poly(sq.squarefree)
            extra["multiplicities"] = [{"factor": format_poly(f), "multiplicity": m}
                                       for f, m in sq.multiplicities]
            endpoints = sq.endpoint_roots
            for f, m in sq.multiplicities:
                extra_text.append(f"factor {format_poly(f)} multiplicity {m}")
        else:
            stripped, endpoints = strip_endpoint_roots(p, iv)
            if stripped.degree < 1:
                from .isolator import IsolationResult
                res = IsolationResult()
            else:
                res = isolate(stripped, iv, cfg)
    except DepthExhausted as exc:
        sys.stderr.write(f"error: {exc}\n")
        if exc.partial is not None:
            _emit(args, "isolate", inputs, {**_isolation_dict(exc.partial),
                                            "pending": _pairs(exc.partial.pending), **extra},
                  _isolation_text(exc.partial))
        return EXIT_DEPTH
    extra["endpoint_roots"] = {format_rational(e): m for e, m in sorted(endpoints.items())}
    for e, m in sorted(endpoints.items()):
        extra_text.append(f"endpoint {format_rational(e)} is a root (multiplicity {m}), excluded")
    _emit(args, "isolate", inputs, {**_isolation_dict(res), **extra},
          "\n".join([_isolation_text(res)] + extra_text))
    return EXIT_OK


def cmd_mobius(args) -> int:
    iv = _interval(args)
    if args.poly.is_zero():
        raise UsageError("Moebius transform of the zero polynomial")
    q = mobius(args.poly, iv.l, iv.r, args.n)
    out = format_poly(q)
    _emit(args, "mobius", {"poly": format_poly(args.poly), "l": format_rational(iv.l),
                           "r": format_rational(iv.r), "n": args.n},
          {"coeffs": out, "sign_changes": sign_changes(q)}, out)
    return EXIT_OK


def cmd_bernstein(args) -> int:
    iv = _interval(args)
    bc = bernstein_coeffs(args.poly, iv.l, iv.r, args.n)
    out = ",".join(format_rational(b) for b in bc.b)
    _emit(args, "bernstein", {"poly": format_poly(args.poly), "l": format_rational(iv.l),
                              "r": format_rational(iv.r), "n": bc.n},
          {"coeffs": out, "sign_changes": sign_changes(bc.b)}, out)
    return EXIT_OK


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("THREECIRCLES_SEED")
    if env is None:
        return 0
    try:
        s = int(env, 10)
    except ValueError:
        raise UsageError(f"THREECIRCLES_SEED is not an integer: {env!r}") from None
    if not 0 <= s < 2 ** 64:
        raise UsageError("THREECIRCLES_SEED must be a 64-bit unsigned integer")
    return s


def _u64(text: str) -> int:
    try:
        v = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def cmd_check(args) -> int:
    seed = _seed(args)
    try:
        params = CampaignParams(kind=args.kind, seed=seed, trials=args.trials,
                                degree_bound=args.degree_bound, p_count=args.p, q_count=args.q,
                                lens_k=args.k, precision_bits=args.precision_bits)
    except ThreeCirclesError as exc:
        raise UsageError(str(exc))
    if args.kind == "obreshkoff" and args.q < args.p:
        raise UsageError("obreshkoff needs --p <= --q")
    try:
        report = run_campaign(params, jobs=args.jobs)
    except GeneratorExhausted as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_GENERATOR
    inputs = {"kind": args.kind, "trials": args.trials, "degree_bound": args.degree_bound,
              "precision_bits": args.precision_bits}
    if args.kind == "obreshkoff":
        inputs.update({"p": args.p, "q": args.q, "k": args.k})
    d = report.to_dict()
    text = (f"{args.kind}: trials {report.trials}, passed {report.passed}, "
            f"failures {len(report.failures)}, skipped (boundary) {report.skipped_boundary}, "
            f"skipped (undecided) {report.skipped_undecided}, rejected {report.rejected}")
    if args.format == "text":
        for f in report.failures:
            text += f"\nFAIL trial {f['trial']} seed {f['seed']}: v = {f['observed_v']}, expected {f['expected']}"
    _emit(args, "check", inputs, d, text, seed=seed)
    return EXIT_OK if report.ok else EXIT_USAGE


def cmd_check_normal(args) -> int:
    p = args.poly
    verdict = normal_via_properties(p)
    rec = is_normal(p)
    text = f"normal: {'yes' if rec else 'no'}"
    if not verdict.is_normal:
        text += f" (condition {verdict.failed_condition} fails at index {verdict.failing_index})"
    _emit(args, "check-normal", {"poly": format_poly(p)},
          {"is_normal": rec, "properties_agree": rec == verdict.is_normal,
           "failed_condition": verdict.failed_condition, "failing_index": verdict.failing_index},
          text)
    return EXIT_OK


def cmd_plot(args) -> int:
    iv = _interval(args)
    points = []
    if args.roots:
        try:
            with open(args.roots) as fh:
                spec = RootSpec.from_text(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.roots}: {exc}")
        points = [z for z, _ in spec.roots()]
    svg = render_svg(iv, points, args.k)
    try:
        with open(args.out, "w") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}")
    _emit(args, "plot", {"l": format_rational(iv.l), "r": format_rational(iv.r), "k": args.k,
                         "roots": args.roots},
          {"out": args.out, "points": len(points)}, f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="threecircles", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, interval=True, poly=True):
        if poly:
            p.add_argument("-p", "--poly", type=_poly, required=True,
                           help="coefficients low-to-high, e.g. '2/9,-1,1'")
        if interval:
            p.add_argument("-l", type=_rational, required=True, help="left endpoint, integer or p/q")
            p.add_argument("-r", type=_rational, required=True, help="right endpoint, integer or p/q")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("isolate", help="isolate real roots in (l, r)")
    common(p)
    p.add_argument("--max-depth", type=int, default=64, help="bisection depth limit (default 64)")
    p.add_argument("--squarefree-auto", action="store_true",
                   help="reduce to the squarefree part first and report multiplicities")
    p.set_defaults(func=cmd_isolate)

    p = sub.add_parser("mobius", help="Moebius transform onto (l, r)")
    common(p)
    p.add_argument("-n", type=int, default=None, help="degree bound (default: degree)")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("bernstein", help="Bernstein coefficients on (l, r)")
    common(p)
    p.add_argument("-n", type=int, default=None, help="basis degree (default: degree)")
    p.set_defaults(func=cmd_bernstein)

    p = sub.add_parser("check", help="run a seeded validation campaign")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--seed", type=_u64, default=None,
                   help="campaign seed (default $THREECIRCLES_SEED, else 0)")
    p.add_argument("--trials", type=int, default=1000, help="number of trials (default 1000)")
    p.add_argument("--degree-bound", type=int, default=8, help="maximum degree (default 8)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output does not depend on it")
    p.add_argument("--p", type=int, default=0, help="Obreshkoff lower count")
    p.add_argument("--q", type=int, default=0, help="Obreshkoff upper count")
    p.add_argument("--k", type=int, default=None,
                   help="Obreshkoff lens index n-p (fixes the degree to p+k)")
    p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS,
                   help="interval budget for irrational disc tests (default 256)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-normal", help="test whether a polynomial is normal")
    common(p, interval=False)
    p.set_defaults(func=cmd_check_normal)

    p = sub.add_parser("plot", help="SVG of the interval, its discs and roots")
    common(p, poly=False)
    p.add_argument("--roots", help="root specification file")
    p.add_argument("--k", type=int, default=None, help="draw Obreshkoff discs of index k")
    p.add_argument("--out", required=True, help="SVG output path")
    p.set_defaults(func=cmd_plot)
    return parser


_VALUE_OPTIONS = ("-p", "--poly", "-l", "-r", "-n")


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Glue values such as ``-1/2`` or ``-1,0,1`` to their option so argparse keeps them."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            val = next(it, None)
            if val is None:
                out.append(tok)
            elif tok.startswith("--"):
                out.append(f"{tok}={val}")
            else:
                out.append(tok + val)
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_attach_values(argv))
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except ThreeCirclesError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
