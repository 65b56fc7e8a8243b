"""Command-line front end.

Usage::

    shirac expand SPEC [--from A --to B]
    shirac eval   SPEC --lo A --hi B [--mask cc]
    shirac bound  SPEC --d D --w1 A --w2 B --kind max|min [--mask cc]
    shirac graph  SPEC (--w1 A --w2 B | --hyperperiod) --kind max|min [--mask cc] [--out FILE]
    shirac verify [SPEC ...] [--seed N] [--cases N]
    shirac check  SPEC

Exit codes: 0 success, 1 I/O or parse error, 2 domain error, 3 failed verification.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

from ._rational import fmt, rational
from .bounds import HeavisideMask, MaskKind, existence_check, extrema, heaviside_duration
from .errors import DomainError, ShiracError
from .impulse import flatten
from .specfile import load_spec
from .transform import hyperperiod, transform_graph
from . import verify as verify_mod

EXIT_OK, EXIT_IO, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


def _numeral(text):
    try:
        return rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _mask(text):
    try:
        return MaskKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def _window(args, doc):
    lo = getattr(args, "w1", None)
    hi = getattr(args, "w2", None)
    if lo is None and hi is None:
        return doc.window
    if lo is None or hi is None:
        raise ShiracError("give both ends of the window")
    return (lo, hi)


def cmd_expand(args, out):
    doc = load_spec(args.spec)
    window = doc.window
    if args.lo is not None or args.hi is not None:
        if args.lo is None or args.hi is None:
            raise ShiracError("--from and --to go together")
        window = (args.lo, args.hi)
    w = _writer(out)
    w.writerow(["position", "amplitude"])
    for imp in flatten(doc.interference, window):
        w.writerow([fmt(imp.position), fmt(imp.amplitude)])


def cmd_eval(args, out):
    doc = load_spec(args.spec)
    mask = HeavisideMask.of_kind(args.lo, args.hi, args.mask)
    out.write(fmt(heaviside_duration(doc.interference, mask)) + "\n")


def cmd_bound(args, out):
    doc = load_spec(args.spec)
    window = _window(args, doc)
    if window is None:
        raise ShiracError("bound needs --w1/--w2 or a window in the spec")
    result = extrema(doc.interference, [args.d], window, args.mask, args.kind)[0]
    out.write(f"{result}\n")


def cmd_graph(args, out):
    doc = load_spec(args.spec)
    if args.hyperperiod:
        period = hyperperiod(doc.interference)
        if period is None:
            raise ShiracError("interference is not periodic; give --w1/--w2")
        window = (rational(0), period)
    else:
        window = _window(args, doc)
    if window is None:
        raise ShiracError("graph needs --w1/--w2, --hyperperiod or a window in the spec")
    graph = transform_graph(doc.interference, window, args.kind, args.mask)
    target = open(args.out, "w", encoding="utf-8", newline="") if args.out else out
    try:
        w = _writer(target)
        # each row opens a constant piece that lasts until next_d
        w.writerow(["d", "value", "witness", "next_d"])
        pts = graph.points
        for i, p in enumerate(pts):
            nxt = fmt(pts[i + 1].d) if i + 1 < len(pts) else ""
            w.writerow([fmt(p.d), fmt(p.value), fmt(p.witness), nxt])
    finally:
        if args.out:
            target.close()


def cmd_verify(args, out):
    seed = args.seed
    if os.environ.get("SHIRAC_SEED"):
        seed = int(os.environ["SHIRAC_SEED"])
    docs = [load_spec(p) for p in args.specs] if args.specs else verify_mod.bundled_specs()
    report = verify_mod.run(docs, seed=seed, cases=args.cases)
    for line in report.failures:
        out.write(f"FAIL {line}\n")
    if report.failures:
        out.write(f"{len(report.failures)} of {report.total} checks failed (seed {seed})\n")
        return EXIT_VERIFY
    out.write(f"all {report.total} checks passed (seed {seed})\n")
    return EXIT_OK


def cmd_check(args, out):
    doc = load_spec(args.spec)
    existence_check(doc.interference)
    x = doc.interference
    period = hyperperiod(x)
    out.write(f"ok: {x.K} summand(s)")
    if period is not None:
        out.write(f", hyperperiod {fmt(period)}")
    out.write("\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are parse errors (exit 1), not domain errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="shirac", description="Exact impulse-train event bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("expand", help="print the canonical flat train as CSV")
    s.add_argument("spec")
    s.add_argument("--from", dest="lo", type=_numeral)
    s.add_argument("--to", dest="hi", type=_numeral)
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("eval", help="summed amplitude inside one mask")
    s.add_argument("spec")
    s.add_argument("--lo", type=_numeral, required=True)
    s.add_argument("--hi", type=_numeral, required=True)
    s.add_argument("--mask", type=_mask, default=MaskKind.CC)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("bound", help="extremal duration of a length-d mask in a window")
    s.add_argument("spec")
    s.add_argument("--d", type=_numeral, required=True)
    s.add_argument("--w1", type=_numeral)
    s.add_argument("--w2", type=_numeral)
    s.add_argument("--kind", choices=("max", "min"), default="max")
    s.add_argument("--mask", type=_mask, default=MaskKind.CC)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("graph", help="interval transformation over the distance set, as CSV")
    s.add_argument("spec")
    s.add_argument("--w1", type=_numeral)
    s.add_argument("--w2", type=_numeral)
    s.add_argument("--hyperperiod", action="store_true",
                   help="use [0, P] with P the hyperperiod of the spec")
    s.add_argument("--kind", choices=("max", "min"), default="max")
    s.add_argument("--mask", type=_mask, default=MaskKind.CC)
    s.add_argument("--out")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", help="cross-check against the brute-force oracle")
    s.add_argument("specs", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=20)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("check", help="confirm the spec has finitely many impulses per window")
    s.add_argument("spec")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args, out)
    except DomainError as exc:
        print(f"shirac: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ShiracError, OSError, ValueError) as exc:
        print(f"shirac: {exc}", file=sys.stderr)
        return EXIT_IO
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
