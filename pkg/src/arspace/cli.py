"""Command-line front end.

Each subcommand prints the library's own string form of the answer.  Usage
errors exit 2; domain errors exit 1 and print the error class name.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stdout
from typing import Optional, Sequence, Tuple

from . import crosscheck
from .derived import DObject, derived_hom_dim, derived_position, gamma_b, parse_dobject, triangle
from .errors import ArspaceError, IntervalSyntaxError
from .geometry import LambdaKey, Sign, extension_rectangle, metric_d, slope_class
from .homalg import ar_sequence, ext_with_middle, hom_dim
from .interval import classify, parse_interval
from .quiver import QuiverSpec, ext, quiver_from_json
from .render import HomRegion, LambdaGraph, Rectangle, Scene, render_svg


class UsageError(Exception):
    pass


def parse_lambda_key(text: str) -> LambdaKey:
    """``0.5``, ``0-``, ``1+``, ``-inf`` or the printed form ``lambda[0-]``."""
    body = text.strip()
    if body.startswith("lambda[") and body.endswith("]"):
        body = body[len("lambda["):-1]
    sign = Sign.UNDECORATED
    if len(body) > 1 and body[-1] in "+-":
        sign = Sign(body[-1])
        body = body[:-1]
    try:
        return LambdaKey(ext(body), sign)
    except (ValueError, ZeroDivisionError):
        raise IntervalSyntaxError("bad lambda key %r" % text) from None


def _load_quiver(path: str) -> QuiverSpec:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError("cannot read quiver file %s: %s" % (path, exc.strerror))
    except json.JSONDecodeError as exc:
        raise UsageError("quiver file %s is not JSON: %s" % (path, exc))
    if not isinstance(data, dict):
        raise UsageError("quiver file %s must hold a JSON object" % path)
    return quiver_from_json(data)


def _none_reason(q: QuiverSpec, i) -> str:
    flags = classify(q, i)
    if flags.simple:
        return "simple"
    if flags.projective:
        return "projective"
    if flags.injective:
        return "injective"
    return "bar"


def cmd_validate(q, args):
    print("valid: %s" % q)


def cmd_gamma(q, args):
    for text in args.objects:
        x = parse_dobject(text)
        print("%s %s position %d" % (x, gamma_b(q, x), int(derived_position(q, x))))


def cmd_hom(q, args):
    x, y = parse_dobject(args.v), parse_dobject(args.w)
    if x.shift == y.shift:
        h = hom_dim(q, x.interval, y.interval)
        print(h.dim)
        if h.witness is not None:
            print(h.witness)
    else:
        print(derived_hom_dim(q, x, y))


def cmd_ext(q, args):
    v, w = parse_interval(args.v), parse_interval(args.w)
    e = ext_with_middle(q, w, v)
    print(e.dim)
    if e.dim:
        print(" + ".join(str(m) for m in e.middle))
    print(extension_rectangle(q, v, w))


def cmd_arseq(q, args):
    i = parse_interval(args.interval)
    seq = ar_sequence(q, i)
    if seq is None:
        print("none (%s)" % _none_reason(q, i))
        return
    print("type (%d)" % seq.type_tag)
    for t in seq.terms:
        print(t)


def cmd_triangle(q, args):
    print(triangle(q, parse_dobject(args.v), parse_dobject(args.w)))


def cmd_metric(q, args):
    v, w = parse_interval(args.v), parse_interval(args.w)
    print(metric_d(q, v, w))
    if args.slope:
        print(slope_class(q, v, w))


def _rect_arg(text: str) -> Tuple[DObject, DObject]:
    depth = 0
    for n, ch in enumerate(text):
        if ch in "[({":
            depth += 1
        elif ch in "])}":
            depth -= 1
        elif ch == "," and depth == 0:
            return parse_dobject(text[:n]), parse_dobject(text[n + 1:])
    raise UsageError("--rect expects two objects separated by a comma")


def cmd_plot(q, args):
    marks = [(parse_dobject(m), m) for m in args.mark]
    overlays = [LambdaGraph(parse_lambda_key(k)) for k in args.lam]
    overlays += [HomRegion(parse_dobject(r)) for r in args.region]
    for r in args.rect:
        v, w = _rect_arg(r)
        overlays.append(Rectangle(triangle(q, v, w)))
    svg = render_svg(Scene(q, marks, overlays))
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        with open(args.output, "w") as fh:
            fh.write(svg)
        print("wrote %s" % args.output)


def cmd_verify(q, args):
    if args.trials < 0 or not 1 <= args.max_ss <= 6:
        raise UsageError("--trials must be >= 0 and --max-ss in 1..6")
    rep = crosscheck.run(args.trials, args.seed, args.max_ss)
    for line in rep.lines():
        print(line)
    print("OK" if rep.ok else "DISAGREEMENT")
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arspace", description=__doc__.splitlines()[0])
    p.add_argument("--quiver", help="quiver JSON file (otherwise the first positional argument)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, needs_quiver=True, help=None):
        sp = sub.add_parser(name, help=help)
        if needs_quiver:
            sp.add_argument("quiver_file", nargs="?", metavar="QUIVER.json")
        for arg in positional:
            sp.add_argument(*arg[0], **arg[1])
        sp.set_defaults(func=func, needs_quiver=needs_quiver)
        return sp

    add("validate", cmd_validate, help="check a quiver file")
    add("gamma", cmd_gamma, (("objects",), dict(nargs="+", metavar="OBJ")), help="strip coordinates")
    add("hom", cmd_hom, (("v",), {}), (("w",), {}), help="dim Hom(V, W) and its image")
    add("ext", cmd_ext, (("v",), {}), (("w",), {}), help="Ext^1(W, V), its middle term and rectangle")
    add("arseq", cmd_arseq, (("interval",), {}), help="the AR sequence through an interval")
    add("triangle", cmd_triangle, (("v",), {}), (("w",), {}), help="triangle V -> U -> W -> V[1]")
    m = add("metric", cmd_metric, (("v",), {}), (("w",), {}), help="generalized distance")
    m.add_argument("--slope", action="store_true", help="also print the slope class")
    pl = add("plot", cmd_plot, help="write an SVG picture")
    pl.add_argument("--mark", action="append", default=[], metavar="OBJ")
    pl.add_argument("--lambda", dest="lam", action="append", default=[], metavar="KEY")
    pl.add_argument("--region", action="append", default=[], metavar="OBJ")
    pl.add_argument("--rect", action="append", default=[], metavar="OBJ,OBJ")
    pl.add_argument("-o", "--output", default="-", metavar="FILE")
    v = add("verify", cmd_verify, needs_quiver=False, help="cross-check against the grid oracle")
    v.add_argument("--trials", type=int, default=500)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-ss", type=int, default=4)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        q = None
        if args.needs_quiver:
            path = args.quiver or args.quiver_file
            if args.quiver and args.quiver_file:
                # with a global --quiver the slot holds the first operand
                if args.command != "gamma":
                    raise UsageError("give the quiver either with --quiver or positionally")
                args.objects.insert(0, args.quiver_file)
            if path is None:
                raise UsageError("no quiver file given")
            q = _load_quiver(path)
        status = args.func(q, args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print("arspace: error: %s" % exc, file=sys.stderr)
        return 2
    except ArspaceError as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    return status or 0


def run_command(argv: Sequence[str]) -> Tuple[int, str]:
    """Run ``main`` and capture what it prints; usage errors report status 2."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        try:
            status = main(list(argv))
        except SystemExit as exc:
            status = exc.code if isinstance(exc.code, int) else 2
    return status, buf.getvalue()
