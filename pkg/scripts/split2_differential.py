#!/usr/bin/env python3
"""Differential test: decide2 versus the exact oracle at k = 2.

Generates seeded random split graphs, draws random same-size independent
pairs, and compares the polynomial decision against BFS ground truth. Any
mismatch is printed with a full reproduction (edge list, pair, trace).

Usage: python3 scripts/split2_differential.py [--trials 5000] [--max-n 12] [--seed 0]
"""

import argparse
import random
import sys

from kjump import engine
from kjump.generators import random_pair, random_split_graph
from kjump.split2 import decide2


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=5000)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--max-tokens", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mismatches = yes = 0
    for trial in range(args.trials):
        g = random_split_graph(rng.randint(2, args.max_n), rng)
        s, t = random_pair(g, rng, max_size=args.max_tokens)
        if len(s) != len(t):
            continue
        oracle = engine.decide(g, s, t, 2)
        res = decide2(g, s, t)
        yes += oracle
        if oracle != res.reconfigurable:
            mismatches += 1
            print(f"MISMATCH trial={trial} oracle={oracle} decide2={res.reconfigurable}")
            print(f"  edges={sorted(g.edges)}")
            print(f"  s={sorted(s)} t={sorted(t)}")
            print(f"  trace={res.trace}")
    print(
        f"{args.trials} trials, {yes} reconfigurable by oracle,"
        f" {mismatches} mismatches"
    )
    sys.exit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
