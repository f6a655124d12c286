"""Shared fixtures and independent reference implementations.

Everything in here is deliberately naive: frozenset BFS, brute-force subset
scans, exhaustive partition enumeration. None of it shares search code with
the package, so it can arbitrate expected values in the tests.
"""

import itertools
import random
from collections import deque
from functools import lru_cache

from kjump.graph import Graph, build_graph


# ---------------------------------------------------------------------------
# small graph zoo

def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    """Center 0, leaves 1..leaves."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def two_cluster_graph(per_side):
    """Clique {0, 1}; 0 adjacent to the first per_side independent vertices,
    1 to the rest. The standard two-cluster split example."""
    edges = [(0, 1)]
    for i in range(per_side):
        edges.append((0, 2 + i))
        edges.append((1, 2 + per_side + i))
    return build_graph(2 + 2 * per_side, edges)


# ---------------------------------------------------------------------------
# naive reference oracles

def naive_dist(g, u, v):
    if u == v:
        return 0
    seen = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        for w in g.adj[x]:
            if w not in seen:
                seen[w] = seen[x] + 1
                if w == v:
                    return seen[w]
                q.append(w)
    return None


def naive_is_independent(g, s):
    return all(not g.has_edge(a, b) for a, b in itertools.combinations(s, 2))


def naive_successors(g, c, k):
    out = set()
    for u in c:
        for v in range(g.n):
            if v in c:
                continue
            d = naive_dist(g, u, v)
            if d is None or d > k:
                continue
            nxt = frozenset(c) - {u} | {v}
            if naive_is_independent(g, nxt):
                out.add(nxt)
    return out


def naive_decide(g, s, t, k):
    s, t = frozenset(s), frozenset(t)
    seen = {s}
    q = deque([s])
    while q:
        cur = q.popleft()
        if cur == t:
            return True
        for nxt in naive_successors(g, cur, k):
            if nxt not in seen:
                seen.add(nxt)
                q.append(nxt)
    return False


def naive_shortest_len(g, s, t, k):
    s, t = frozenset(s), frozenset(t)
    if s == t:
        return 0
    seen = {s: 0}
    q = deque([s])
    while q:
        cur = q.popleft()
        for nxt in naive_successors(g, cur, k):
            if nxt not in seen:
                seen[nxt] = seen[cur] + 1
                if nxt == t:
                    return seen[nxt]
                q.append(nxt)
    return None


def naive_reachable(g, s, k):
    s = frozenset(s)
    seen = {s}
    q = deque([s])
    while q:
        cur = q.popleft()
        for nxt in naive_successors(g, cur, k):
            if nxt not in seen:
                seen.add(nxt)
                q.append(nxt)
    return seen


def naive_chordal(g):
    """No induced cycle of length >= 4; brute force, fine up to n ~ 9."""
    for size in range(4, g.n + 1):
        for vs in itertools.combinations(range(g.n), size):
            induced = [
                (a, b) for a, b in itertools.combinations(vs, 2) if g.has_edge(a, b)
            ]
            if len(induced) != size:
                continue
            deg = {v: sum(1 for e in induced if v in e) for v in vs}
            if any(d != 2 for d in deg.values()):
                continue
            # connected 2-regular graph on `size` vertices = one cycle
            adj = {v: [w for e in induced for w in e if v in e and w != v] for v in vs}
            comp = {vs[0]}
            stack = [vs[0]]
            while stack:
                x = stack.pop()
                for w in adj[x]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            if len(comp) == size:
                return False
    return True


def brute_split_partitions(g):
    """All (clique, indep) bipartitions, by trying every subset as clique."""
    out = []
    for r in range(g.n + 1):
        for ks in itertools.combinations(range(g.n), r):
            kset = set(ks)
            iset = set(range(g.n)) - kset
            if all(g.has_edge(a, b) for a, b in itertools.combinations(ks, 2)) and \
                    naive_is_independent(g, iset):
                out.append((frozenset(kset), frozenset(iset)))
    return out


def independent_sets(g, max_size=None):
    """All independent sets (optionally up to a size cap), small n only."""
    cap = g.n if max_size is None else max_size
    out = []
    for r in range(cap + 1):
        for c in itertools.combinations(range(g.n), r):
            if naive_is_independent(g, c):
                out.append(frozenset(c))
    return out


# ---------------------------------------------------------------------------
# corpora

def to_nx(g):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_nx(G):
    nodes = sorted(G.nodes())
    remap = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(remap[u], remap[v]) for u, v in G.edges()])


@lru_cache(maxsize=None)
def atlas_graphs(max_n=7, connected_only=False):
    """All non-isomorphic graphs with up to max_n <= 7 vertices (atlas)."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        if G.number_of_nodes() == 0 or G.number_of_nodes() > max_n:
            continue
        if connected_only and not nx.is_connected(G):
            continue
        out.append(from_nx(G))
    return tuple(out)


@lru_cache(maxsize=None)
def split_graphs_upto(max_n):
    """All non-isomorphic split graphs with 1..max_n vertices.

    Generated as (clique size q, multiset of independent-vertex neighborhood
    masks), then deduplicated with a WL hash plus exact isomorphism checks
    inside hash buckets.
    """
    import networkx as nx

    buckets = {}
    out = []
    for n in range(1, max_n + 1):
        for q in range(n + 1):
            r = n - q
            for combo in itertools.combinations_with_replacement(range(2 ** q), r):
                edges = [(a, b) for a in range(q) for b in range(a + 1, q)]
                for i, mask in enumerate(combo):
                    for a in range(q):
                        if mask >> a & 1:
                            edges.append((a, q + i))
                g = build_graph(n, edges)
                G = to_nx(g)
                h = nx.weisfeiler_lehman_graph_hash(G)
                bucket = buckets.setdefault((n, h), [])
                if any(nx.is_isomorphic(G, H) for H in bucket):
                    continue
                bucket.append(G)
                out.append(g)
    return tuple(out)


def random_graphs(count, max_n, seed, connected=True):
    from kjump.generators import random_connected_graph

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        g = random_connected_graph(n, rng)
        out.append(g)
    return out
