"""Seeded random instance generators used by the test corpus and the hidden
`gen` CLI subcommand."""

from __future__ import annotations

import random

from .graph import build_graph, is_connected


def random_connected_graph(n, rng, p=None):
    """Erdos-Renyi with rejection until connected; p defaults to a density
    comfortably above the connectivity threshold."""
    if n <= 0:
        raise ValueError("n must be positive")
    if p is None:
        p = min(1.0, 2.5 / max(n - 1, 1))
    while True:
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = build_graph(n, edges)
        if is_connected(g):
            return g


def random_split_graph(n, rng, edge_p=0.5):
    """Random split graph: clique of size q, independent part of size n-q,
    each bipartite edge present with probability edge_p."""
    q = rng.randint(0, n)
    edges = [(u, v) for u in range(q) for v in range(u + 1, q)]
    for u in range(q):
        for v in range(q, n):
            if rng.random() < edge_p:
                edges.append((u, v))
    return build_graph(n, edges)


def random_independent_set(g, size, rng, tries=2000):
    """A uniform-ish independent set of the requested size, or None."""
    verts = list(range(g.n))
    for _ in range(tries):
        rng.shuffle(verts)
        chosen = []
        blocked = set()
        for v in verts:
            if v not in blocked:
                chosen.append(v)
                blocked.add(v)
                blocked.update(g.adj[v])
            if len(chosen) == size:
                return frozenset(chosen)
    return None


def random_pair(g, rng, max_size=None):
    """Two same-size independent sets, sized randomly up to max_size."""
    cap = max_size if max_size is not None else g.n
    for _ in range(200):
        size = rng.randint(1, max(1, cap))
        s = random_independent_set(g, size, rng)
        t = random_independent_set(g, size, rng)
        if s is not None and t is not None:
            return s, t
    return frozenset(), frozenset()
