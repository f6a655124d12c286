"""Command-line surface. Every subcommand reads JSON (or DIMACS-style text)
and writes one deterministic JSON document to stdout.

Exit codes: 0 = computed (including "no" answers), 2 = input or usage error,
3 = resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import engine, reduction, simulate, split2
from .generators import random_connected_graph, random_pair, random_split_graph
from .graph import (
    GraphError,
    NotSplitError,
    diameter,
    find_peo,
    graph_to_json,
    is_connected,
    parse_graph,
    recognize_split,
)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(path, fmt):
    return parse_graph(_read(path), fmt)


def _load_instance(path):
    data = json.loads(_read(path))
    from .graph import graph_from_json

    g = graph_from_json(data["graph"])
    return g, frozenset(data["start"]), frozenset(data["target"]), int(data["k"])


def _emit(payload):
    json.dump(payload, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_recognize(args):
    g = _load_graph(args.graph, args.format)
    report = {"n": g.n, "edges": len(g.edges), "connected": is_connected(g)}
    try:
        dec = recognize_split(g)
        report["split"] = True
        report["cliquePart"] = sorted(dec.clique_part)
        report["indepPart"] = sorted(dec.indep_part)
        report["clusters"] = [
            {
                "u": sorted(c.u_side),
                "v": sorted(c.v_side),
                "vmin": c.vmin,
                "nSize": c.n_size,
            }
            for c in dec.clusters
        ]
    except NotSplitError as exc:
        report["split"] = False
        report["obstruction"] = (
            {"kind": exc.witness[0], "vertices": list(exc.witness[1])}
            if exc.witness
            else None
        )
    peo = find_peo(g)
    report["chordal"] = peo is not None
    if peo is not None:
        report["peo"] = peo
    _emit(report)
    return 0


def _cmd_decide(args):
    g, s, t, k = _load_instance(args.instance)
    if args.k is not None:
        k = args.k
    _emit({"k": k, "reconfigurable": engine.decide(g, s, t, k)})
    return 0


def _cmd_shortest(args):
    g, s, t, k = _load_instance(args.instance)
    seq = engine.shortest(g, s, t, k)
    if seq is None:
        _emit({"k": k, "reconfigurable": False, "sequence": "unreachable"})
    else:
        _emit(
            {
                "k": k,
                "reconfigurable": True,
                "length": len(seq),
                "sequence": engine.sequence_to_json(seq),
            }
        )
    return 0


def _cmd_decide2(args):
    g, s, t, k = _load_instance(args.instance)
    if k != 2:
        raise GraphError(f"decide2 requires k = 2, instance has k = {k}")
    res = split2.decide2(g, s, t)
    _emit({"reconfigurable": res.reconfigurable, "trace": res.trace})
    return 0


def _cmd_simulate(args):
    g = _load_graph(args.graph, args.format)
    seq = engine.sequence_from_json(json.loads(_read(args.sequence)))
    out = simulate.simulate_sequence(g, seq, args.k)
    _emit({"k": args.k, "length": len(out), "sequence": engine.sequence_to_json(out)})
    return 0


def _cmd_reduce(args):
    phi = reduction.parse_e3cnf(_read(args.cnf))
    inst = reduction.build_instance(phi, args.k)
    _emit(reduction.instance_to_json(inst))
    return 0


def _cmd_witness(args):
    inst = reduction.instance_from_json(json.loads(_read(args.instance)))
    bits = args.assignment.strip()
    if not all(c in "01" for c in bits):
        raise reduction.CnfError(f"assignment must be a 0/1 string: {bits!r}")
    assignment = tuple(c == "1" for c in bits)
    seq = reduction.assignment_to_sequence(inst, assignment)
    _emit({"length": len(seq), "sequence": engine.sequence_to_json(seq)})
    return 0


def _cmd_extract(args):
    inst = reduction.instance_from_json(json.loads(_read(args.instance)))
    seq = engine.sequence_from_json(json.loads(_read(args.sequence)))
    assignment = reduction.sequence_to_assignment(inst, seq)
    _emit({"assignment": "".join("1" if b else "0" for b in assignment)})
    return 0


def _cmd_verify(args):
    g, s, t, k = _load_instance(args.instance)
    seq = engine.sequence_from_json(json.loads(_read(args.sequence)))
    report = engine.validate_sequence(g, seq, k)
    out = {"valid": report.ok}
    if not report.ok:
        out["step"] = report.step
        out["reason"] = report.reason
    else:
        out["length"] = len(seq)
        out["reachesTarget"] = seq.final() == t and frozenset(seq.start) == s
    _emit(out)
    return 0


def _cmd_stats(args):
    inst = reduction.instance_from_json(json.loads(_read(args.instance)))
    st = reduction.instance_stats(inst)
    _emit(
        {
            "vertices": st.vertices,
            "tokens": st.tokens,
            "diameter": st.diameter,
            "chordal": st.chordal,
            "lowerBound": st.lower_bound,
        }
    )
    return 0


def _cmd_gen(args):
    rng = random.Random(args.seed)
    if args.kind == "connected":
        g = random_connected_graph(args.n, rng)
    elif args.kind == "split":
        g = random_split_graph(args.n, rng)
    else:
        raise GraphError(f"unknown generator kind: {args.kind}")
    out = {"graph": graph_to_json(g)}
    if args.with_pair:
        s, t = random_pair(g, rng, max_size=args.max_tokens)
        out["start"] = sorted(s)
        out["target"] = sorted(t)
        out["k"] = args.k
    _emit(out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="kjump")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_fmt(sp):
        sp.add_argument("--format", choices=["json", "edgelist"], default="json")

    sp = sub.add_parser("recognize", help="split/chordal structure report")
    sp.add_argument("graph")
    graph_fmt(sp)
    sp.set_defaults(fn=_cmd_recognize)

    sp = sub.add_parser("decide", help="oracle reachability decision")
    sp.add_argument("instance")
    sp.add_argument("--k", type=int, default=None)
    sp.set_defaults(fn=_cmd_decide)

    sp = sub.add_parser("shortest", help="oracle optimal sequence")
    sp.add_argument("instance")
    sp.set_defaults(fn=_cmd_shortest)

    sp = sub.add_parser("decide2", help="split-graph 2-Jump decision")
    sp.add_argument("instance")
    sp.set_defaults(fn=_cmd_decide2)

    sp = sub.add_parser("simulate", help="compile a TJ sequence to k-Jump")
    sp.add_argument("graph")
    sp.add_argument("sequence")
    sp.add_argument("--k", type=int, required=True)
    graph_fmt(sp)
    sp.set_defaults(fn=_cmd_simulate)

    sp = sub.add_parser("reduce", help="E3-CNF to reconfiguration instance")
    sp.add_argument("cnf")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(fn=_cmd_reduce)

    sp = sub.add_parser("witness", help="optimal sequence from an assignment")
    sp.add_argument("instance")
    sp.add_argument("--assignment", required=True)
    sp.set_defaults(fn=_cmd_witness)

    sp = sub.add_parser("extract", help="assignment from a short sequence")
    sp.add_argument("instance")
    sp.add_argument("sequence")
    sp.set_defaults(fn=_cmd_extract)

    sp = sub.add_parser("verify", help="validate a move sequence")
    sp.add_argument("instance")
    sp.add_argument("sequence")
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("stats", help="reduction instance report")
    sp.add_argument("instance")
    sp.set_defaults(fn=_cmd_stats)

    sp = sub.add_parser("gen")  # hidden-ish: seeded corpus generation
    sp.add_argument("kind", choices=["connected", "split"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--with-pair", action="store_true")
    sp.add_argument("--max-tokens", type=int, default=3)
    sp.add_argument("--k", type=int, default=2)
    sp.set_defaults(fn=_cmd_gen)

    return p


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except engine.ResourceExhausted as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 3
    except (GraphError, reduction.CnfError, ValueError, OSError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
