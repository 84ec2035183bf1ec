"""
Command line interface, installed as ``distcrit``.

Data goes to stdout (graph6 lines or one compact JSON object per line), diagnostics to stderr.
Exit code 0 on success, 1 on a negative verdict of ``check`` or a failing ``verify``, 2 on a
usage or input error, in which case nothing is written to stdout.
"""
import argparse
import json
import sys

from ._version import __version__
from .graphs import canonical_graph, decode_graph6, encode_graph6, iter_graph6, to_dot
from .criticality import METHODS, is_distance_critical_pairs, direct_report, determining_pairs_of, describe_graph
from .products import ProductKind, product
from .constructions import cycle, cycle_power, gamma, max_degree_extremal, regular_extremal, embed_host, dodecahedron, layout_roles
from .enumeration import survey
from .verify import LEMMA_IDS, run_all, run_lemma


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _input_graphs(args):
    if args.graph is not None:
        graphs = [decode_graph6(args.graph)]
    else:
        graphs = list(iter_graph6(sys.stdin))
    if not graphs:
        raise ValueError("No graph given, pass --graph or graph6 lines on stdin")
    return graphs


def _cmd_check(args):
    graphs = _input_graphs(args)
    lines = []
    status = 0
    for g in graphs:
        if args.method == "direct":
            out = direct_report(g).to_dict()
        else:
            report = is_distance_critical_pairs(g)
            out = report.to_dict()
            if args.method == "both":
                direct = direct_report(g)
                out["method"] = "both"
                out["agree"] = direct.verdict == report.verdict
                if not out["agree"]:
                    status = 1
        if not out["critical"]:
            status = 1
        lines.append(_dumps(out))
    return lines, status


def _cmd_pairs(args):
    graphs = _input_graphs(args)
    lines = []
    for g in graphs:
        vertices = range(g.n) if args.vertex is None else [args.vertex]
        pairs = [{"v": v, "pairs": [list(p) for p in determining_pairs_of(g, v)]} for v in vertices]
        lines.append(_dumps({"n": g.n, "pairs": pairs}))
    return lines, 0


def _cmd_stats(args):
    lines = [_dumps(describe_graph(g)._asdict()) for g in _input_graphs(args)]
    return lines, 0


def _cmd_product(args):
    g, h = decode_graph6(args.left), decode_graph6(args.right)
    return [encode_graph6(product(args.kind, g, h))], 0


def _construct(args):
    """
    Returns (graph, layout JSON object or None).
    """
    family = args.family
    if family == "gamma":
        g, layout = gamma(args.m)
        return g, {"family": family, "n": g.n, "roles": layout_roles(layout), "injection": None}
    if family == "embed":
        g, injection, layout = embed_host(decode_graph6(args.graph6), return_layout=True)
        return g, {"family": family, "n": g.n, "roles": layout_roles(layout), "injection": injection}
    if args.layout:
        raise ValueError("--layout is only available for gamma and embed")
    if family == "cycle":
        return cycle(args.n), None
    if family == "cycle-power":
        return cycle_power(args.n, args.k), None
    if family == "max-degree":
        return max_degree_extremal(args.n), None
    if family == "regular":
        return regular_extremal(args.n), None
    return dodecahedron(), None


def _cmd_construct(args):
    g, layout = _construct(args)
    if args.format == "dot":
        lines = [to_dot(g).rstrip("\n")]
    else:
        lines = [encode_graph6(g)]
    if args.layout:
        lines.append(_dumps(layout))
    return lines, 0


_EMITTERS = {
    "graph6": encode_graph6,
    "canonical": lambda g: encode_graph6(canonical_graph(g)),
}


def _cmd_enumerate(args):
    shard = (args.shard, args.shards)
    emit = _EMITTERS[args.emit]
    # survey validates n and shard before the first hit, so errors leave stdout empty
    visitor = None if args.count_only else (lambda g: print(emit(g), flush=True))
    tally = survey(args.n, edge_maximal=args.edge_maximal, visitor=visitor, shard=shard, n_jobs=args.jobs, allow_long_run=args.allow_long_run, verbose=args.verbose)
    if args.count_only:
        return [_dumps(tally.to_dict())], 0
    print(_dumps(tally.to_dict()), file=sys.stderr)
    return [], 0


def _cmd_verify(args):
    options = dict(n_jobs=args.jobs, verbose=args.verbose, cache_dir=args.cache_dir)
    if args.lemma == "all":
        checks = run_all(args.n_cap, **options)
    else:
        checks = [run_lemma(args.lemma, args.n_cap, **options)]
    if args.json:
        lines = [_dumps(c.to_dict()) for c in checks]
    else:
        lines = ["{}: {} ({} checked, {} violations)".format(c.id, "pass" if c.passed else "FAIL", c.checked, len(c.violations)) for c in checks]
        lines += ["  {} {}".format(c.id, g6) for c in checks for g6 in c.violations]
    return lines, 0 if all(c.passed for c in checks) else 1


def _add_graph_input(parser):
    parser.add_argument("--graph", default=None, metavar="G6", help="graph6 string, default: one graph6 per line on stdin")


def build_parser():
    parser = argparse.ArgumentParser(prog="distcrit", description="Distance-critical graphs: tests, constructions, enumeration and exhaustive checks.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide distance criticality")
    p.add_argument("--method", choices=METHODS + ("both",), default="pairs")
    _add_graph_input(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("pairs", help="list determining pairs")
    p.add_argument("--vertex", type=int, default=None)
    _add_graph_input(p)
    p.set_defaults(func=_cmd_pairs)

    p = sub.add_parser("stats", help="structural summary")
    _add_graph_input(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("product", help="graph product of two graph6 strings")
    p.add_argument("--kind", choices=[k.value for k in ProductKind], required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("construct", help="build a named family")
    p.add_argument("--format", choices=("graph6", "dot"), default="graph6")
    p.add_argument("--layout", action="store_true", help="also print the vertex roles as JSON (gamma, embed)")
    families = p.add_subparsers(dest="family", required=True)
    f = families.add_parser("cycle")
    f.add_argument("-n", type=int, required=True)
    f = families.add_parser("cycle-power")
    f.add_argument("-n", type=int, required=True)
    f.add_argument("-k", type=int, required=True)
    f = families.add_parser("gamma")
    f.add_argument("-m", type=int, required=True)
    f = families.add_parser("max-degree")
    f.add_argument("-n", type=int, required=True)
    f = families.add_parser("regular")
    f.add_argument("-n", type=int, required=True)
    f = families.add_parser("embed")
    f.add_argument("graph6")
    families.add_parser("dodecahedron")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="count distance-critical graphs")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--edge-maximal", action="store_true")
    p.add_argument("--count-only", action="store_true", help="print the tally on stdout instead of the hits")
    p.add_argument("--emit", choices=sorted(_EMITTERS), default="graph6", help="graph6 of each hit as generated, or of its canonical relabelling")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-long-run", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive lemma checks")
    p.add_argument("--lemma", default="all", help="one of {} or all".format(", ".join(LEMMA_IDS)))
    p.add_argument("--n-cap", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, status = args.func(args)
    except ValueError as e:
        print("distcrit: error: {}".format(e), file=sys.stderr)
        return 2
    for line in lines:
        print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
