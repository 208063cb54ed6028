"""Command-line front end.

Subcommands: dlens, vseq, dsurg, verdict, embed, seifert, classify.
All numeric output is exact: rationals print as "a/b" (plain integer
when the denominator is 1).  Exit codes: 0 ok, 1 domain error (with the
violated precondition on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import SearchSpace, classify_sweep, results_csv, results_jsonl
from .dinv import d_lens, d_lens_table, d_surgery
from .knots import KnotModel
from .lattice import NotEmbeddable, embed_lattice
from .obstruct import rhb_verdict
from .plumbing import (LensConnectedSum, PlumbingGraph, linear_dual,
                       torus_surgery_graph, torus_surgery_seifert)


def fmt(x):
    x = Fraction(x)
    if x.denominator == 1:
        return "%d" % x.numerator
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(text):
    if "/" in text:
        a, b = text.split("/", 1)
        return Fraction(int(a), int(b))
    return Fraction(int(text))


def parse_knot(text):
    kind, _, rest = text.partition(":")
    if kind == "torus":
        p, q = rest.split(",")
        return KnotModel.torus(int(p), int(q))
    if kind == "thin":
        return KnotModel.thin(int(rest))
    if kind == "explicit":
        return KnotModel.explicit([int(v) for v in rest.split(",") if v])
    raise ValueError("unknown knot spec %r (torus:p,q | thin:tau)" % text)


def parse_range(text):
    lo, _, hi = text.partition("..")
    return int(lo), int(hi if hi else lo)


def cmd_dlens(args):
    if args.all:
        table = d_lens_table(args.p, args.q)
        print(json.dumps({"d": [fmt(v) for v in table]}))
    else:
        if args.i is None:
            raise ValueError("need -i LABEL or --all")
        print(json.dumps({"d": fmt(d_lens(args.p, args.q, args.i))}))
    return 0


def cmd_vseq(args):
    knot = parse_knot(args.knot)
    V = knot.v_sequence()
    upto = args.max if args.max is not None else max(V.nu_plus, 1)
    print(json.dumps({"knot": knot.label(),
                      "nu_plus": V.nu_plus,
                      "V": [V[i] for i in range(upto)]}))
    return 0


def cmd_dsurg(args):
    if args.slope is not None:
        slope = parse_rational(args.slope)
    elif args.n is not None:
        slope = Fraction(args.n)
    elif args.p is not None and args.q is not None:
        slope = Fraction(args.p, args.q)
    else:
        raise ValueError("need --slope a/b, -n N, or -p/-q")
    knot = parse_knot(args.knot)
    V = knot.v_sequence()
    p, q = slope.numerator, slope.denominator
    if args.i is not None:
        out = {"d": fmt(d_surgery(p, q, args.i, V,
                                  convention=args.convention))}
    else:
        out = {"d": [fmt(d_surgery(p, q, i, V, convention=args.convention))
                     for i in range(p)]}
    print(json.dumps(out))
    return 0


def cmd_verdict(args):
    knot = parse_knot(args.knot)
    slope = parse_rational(args.slope)
    report = rhb_verdict(knot, slope)
    print(report.to_json())
    return 0


def cmd_embed(args):
    with open(args.graph) as fh:
        g = PlumbingGraph.from_json(fh.read())
    sign = 1 if args.sign == "pos" else -1
    out = embed_lattice(g, sign=sign)
    if isinstance(out, NotEmbeddable):
        print(json.dumps({"embeddable": False, "nodes": out.nodes}))
    else:
        print(json.dumps({"embeddable": True,
                          "vectors": [list(v) for v in out.vectors],
                          "nodes": out.nodes}))
    return 0


def cmd_seifert(args):
    p, q = (int(x) for x in args.torus.split(","))
    slope = parse_rational(args.slope)
    if args.canonical or args.dual:
        g = torus_surgery_graph(p, q, slope)
        if args.dual:
            g = linear_dual(g)
        print(g.to_json())
    else:
        s = torus_surgery_seifert(p, q, slope)
        if isinstance(s, LensConnectedSum):
            print(json.dumps({"connected_sum": [[a, b]
                                                for a, b in s.summands],
                              "orientation": s.orientation}))
        else:
            print(s.to_json())
    return 0


def cmd_classify(args):
    q_lo, q_hi = parse_range(args.q)
    k_lo, k_hi = parse_range(args.k)
    signs = (1, -1) if args.sign is None else ((1,) if args.sign == "+1"
                                               else (-1,))
    space = SearchSpace(q_lo, q_hi, k_lo, k_hi, signs)
    print("classify: %d knots" % len(set((p, q) for p, q, _
                                         in space.pairs())), file=sys.stderr)
    results = classify_sweep(space, threads=args.threads)
    text = results_csv(results) if args.emit == "csv" \
        else results_jsonl(results)
    sys.stdout.write(text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="qhb", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("dlens", help="lens-space correction terms")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-i", type=int)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_dlens)

    p = sub.add_parser("vseq", help="V-sequence of a knot")
    p.add_argument("--knot", required=True)
    p.add_argument("--max", type=int)
    p.set_defaults(func=cmd_vseq)

    p = sub.add_parser("dsurg", help="surgery correction terms")
    p.add_argument("-p", type=int)
    p.add_argument("-q", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("--slope")
    p.add_argument("--knot", required=True)
    p.add_argument("-i", type=int)
    p.add_argument("--convention", default="lens-recursion",
                   choices=["lens-recursion", "printed-q2", "printed-q3"])
    p.set_defaults(func=cmd_dsurg)

    p = sub.add_parser("verdict", help="obstruction report")
    p.add_argument("--knot", required=True)
    p.add_argument("--slope", required=True)
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("embed", help="diagonal-lattice embedding")
    p.add_argument("--graph", required=True)
    p.add_argument("--sign", choices=["pos", "neg"], default="pos")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("seifert", help="surgery presentations")
    p.add_argument("--torus", required=True)
    p.add_argument("--slope", required=True)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=cmd_seifert)

    p = sub.add_parser("classify", help="square-surgery sweep")
    p.add_argument("--q", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--sign", choices=["+1", "-1"])
    p.add_argument("--emit", choices=["csv", "json"], default="csv")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_classify)
    return ap


def run(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
