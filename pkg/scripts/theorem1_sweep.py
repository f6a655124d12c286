#!/usr/bin/env python3
"""Measure the expansion cost of compiling TJ witnesses down to k-Jump.

For seeded random connected graphs, take oracle TJ shortest sequences between
random independent pairs and expand them at each k in 3..D(G). Reports, per
k, the mean and max number of emitted moves per simulated TJ move, and the
max ratio against the 2*dist(u, v) engineering conjecture.

Usage: python3 scripts/theorem1_sweep.py [--graphs 150] [--max-n 10] [--seed 0]
"""

import argparse
import random
from collections import defaultdict

from kjump import engine
from kjump.generators import random_connected_graph, random_pair
from kjump.graph import diameter, dist
from kjump.simulate import simulate_move


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--graphs", type=int, default=150)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    stats = defaultdict(list)  # k -> list of (emitted, tj_dist)
    for _ in range(args.graphs):
        g = random_connected_graph(rng.randint(4, args.max_n), rng)
        d = diameter(g)
        if d < 4:
            continue
        s, t = random_pair(g, rng, max_size=3)
        if len(s) != len(t) or not s:
            continue
        witness = engine.shortest(g, s, t, d)
        if witness is None:
            continue
        cur = frozenset(s)
        for mv in witness.moves:
            span = dist(g, mv.src, mv.dst)
            for k in range(3, d + 1):
                piece = simulate_move(g, cur, mv.src, mv.dst, k)
                stats[k].append((len(piece.moves), span))
            cur = cur - {mv.src} | {mv.dst}

    print(f"{'k':>3} {'moves':>7} {'mean':>6} {'max':>4} {'max/2dist':>9}")
    for k in sorted(stats):
        rows = stats[k]
        emitted = [e for e, _ in rows]
        worst_ratio = max(e / (2 * max(sp, 1)) for e, sp in rows)
        print(
            f"{k:>3} {len(rows):>7} {sum(emitted) / len(emitted):>6.2f}"
            f" {max(emitted):>4} {worst_ratio:>9.2f}"
        )
    bad = [
        (k, e, sp)
        for k, rows in stats.items()
        for e, sp in rows
        if e > 2 * max(sp, 1)
    ]
    if bad:
        print(f"conjecture violations (emitted > 2*dist): {len(bad)}")
        for k, e, sp in bad[:10]:
            print(f"  k={k} emitted={e} dist={sp}")
    else:
        print("no violations of the 2*dist expansion conjecture")


if __name__ == "__main__":
    main()
