#!/usr/bin/env python3
"""Tabulate reduction instance quantities across k.

Reads a DIMACS E3-CNF file (or uses a built-in demo formula) and prints, for
each k, the vertex count, diameter, chordality certificate, matching lower
bound, and, when the formula is satisfiable, the constructed witness length.

Usage: python3 scripts/reduction_table.py [cnf-file] [--kmax 8]
"""

import argparse
import itertools
import sys

from kjump.reduction import (
    assignment_to_sequence,
    build_instance,
    instance_stats,
    parse_e3cnf,
)

DEMO = "p cnf 3 2\n1 2 -3 0\n-1 2 3 0\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("cnf", nargs="?", help="DIMACS E3-CNF file, default demo")
    ap.add_argument("--kmin", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=8)
    args = ap.parse_args()

    text = open(args.cnf).read() if args.cnf else DEMO
    phi = parse_e3cnf(text)
    m, n = len(phi.clauses), phi.num_vars
    sat = next(
        (
            bits
            for bits in itertools.product((False, True), repeat=n)
            if phi.satisfies(bits)
        ),
        None,
    )
    print(f"formula: n={n} m={m} satisfiable={'yes' if sat else 'no'} 2(m+n)={2 * (m + n)}")
    print(f"{'k':>3} {'vertices':>9} {'tokens':>7} {'diam':>5} {'2k+1':>5} "
          f"{'chordal':>8} {'bound':>6} {'witness':>8}")
    for k in range(args.kmin, args.kmax + 1):
        inst = build_instance(phi, k)
        st = instance_stats(inst)
        witness = "-"
        if sat is not None:
            witness = str(len(assignment_to_sequence(inst, sat)))
        diam = "inf" if st.diameter is None else st.diameter
        print(
            f"{k:>3} {st.vertices:>9} {st.tokens:>7} {diam:>5} {2 * k + 1:>5} "
            f"{str(st.chordal):>8} {st.lower_bound:>6} {witness:>8}"
        )


if __name__ == "__main__":
    main()
