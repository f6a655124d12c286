"""Simple undirected graphs plus the structural machinery the solvers need:
BFS distances, split-graph recognition with a canonical partition, and
perfect elimination orderings for chordality certificates.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


class NotSplitError(GraphError):
    """Raised when a graph is not split; carries a witness obstruction."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


_DIST_CACHE_LIMIT = 4096


class Graph:
    """Immutable simple undirected graph with vertex ids 0..n-1."""

    __slots__ = ("n", "edges", "adj", "adj_mask", "labels", "_dist_table")

    def __init__(self, n, edges, labels=None):
        self.n = n
        seen = set()
        adj = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop: ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge: ({u}, {v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.edges = frozenset(seen)
        self.adj = tuple(tuple(sorted(ns)) for ns in adj)
        self.adj_mask = tuple(sum(1 << w for w in ns) for ns in self.adj)
        self.labels = dict(labels) if labels else {}
        self._dist_table = None

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def build_graph(n, edges, labels=None):
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    return Graph(n, edges, labels)


def bfs_distances(g, source):
    """Hop distances from source; None marks unreachable vertices."""
    dist = [None] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _dist_row(g, u):
    if g.n <= _DIST_CACHE_LIMIT:
        if g._dist_table is None:
            g._dist_table = [None] * g.n
        row = g._dist_table[u]
        if row is None:
            row = bfs_distances(g, u)
            g._dist_table[u] = row
        return row
    return bfs_distances(g, u)


def dist(g, u, v):
    """Shortest-path hop count, or None when u and v are disconnected."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range: ({u}, {v})")
    if u == v:
        return 0
    return _dist_row(g, u)[v]


def shortest_path(g, u, v):
    """One shortest u-v path with lowest-id parent tie-breaking, or None.

    Parents are chosen deterministically: BFS scans neighbors in ascending
    order, so the first parent found for each vertex is the lowest-id one at
    the previous level.
    """
    if u == v:
        return [u]
    parent = [None] * g.n
    seen = [False] * g.n
    seen[u] = True
    q = deque([u])
    while q:
        x = q.popleft()
        for w in g.adj[x]:
            if not seen[w]:
                seen[w] = True
                parent[w] = x
                if w == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                q.append(w)
    return None


def is_connected(g):
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def diameter(g):
    if g.n == 0:
        raise GraphError("diameter of empty graph")
    best = 0
    for u in range(g.n):
        row = _dist_row(g, u)
        for d in row:
            if d is None:
                raise GraphError("diameter undefined: graph is disconnected")
            if d > best:
                best = d
    return best


def is_independent(g, s):
    s = set(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex out of range: {v}")
    for v in s:
        for w in g.adj[v]:
            if w in s:
                return False
    return True


# ---------------------------------------------------------------------------
# Split graphs


@dataclass(frozen=True)
class Cluster:
    """One connected component of the bipartite part of a split graph.

    u_side lies in the independent part, v_side in the clique part. nbhd is
    the neighborhood (within the cluster) of vmin, a minimum-degree vertex of
    v_side. Pseudo-clusters collect clique vertices with no independent-side
    neighbor and have u_side = nbhd = empty.
    """

    u_side: frozenset
    v_side: frozenset
    edges: frozenset
    vmin: int | None
    nbhd: frozenset

    @property
    def n_size(self):
        return len(self.nbhd)


@dataclass(frozen=True)
class SplitDecomposition:
    clique_part: frozenset
    indep_part: frozenset
    clusters: tuple  # Cluster, ascending by |nbhd| then discovery order

    def cluster_of(self, v):
        for i, c in enumerate(self.clusters):
            if v in c.u_side or v in c.v_side:
                return i
        raise GraphError(f"vertex {v} not in any cluster")


def _degree_partition(g):
    """Hammer-Simeone degree test. Returns (clique, indep) or a reason string."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    h = 0
    for i in range(1, g.n + 1):
        if degs[i - 1] >= i - 1:
            h = i
    lhs = sum(degs[:h])
    rhs = h * (h - 1) + sum(degs[h:])
    if lhs != rhs:
        return None
    return set(order[:h]), set(order[h:])


def _find_obstruction(g):
    """Locate an induced 2K2, C4 or C5 in a non-split graph."""
    edges = sorted(g.edges)
    # C4: two non-adjacent vertices with two non-adjacent common neighbors.
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = [w for w in g.adj[u] if v in set(g.adj[w])]
            for i in range(len(common)):
                for j in range(i + 1, len(common)):
                    a, b = common[i], common[j]
                    if not g.has_edge(a, b):
                        return ("C4", (u, a, v, b))
    # 2K2: two edges with no connecting edge.
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if len({a, b, c, d}) < 4:
                continue
            if not any(g.has_edge(x, y) for x in (a, b) for y in (c, d)):
                return ("2K2", (a, b, c, d))
    # C5: brute force over 5-cycles.
    from itertools import combinations

    for vs in combinations(range(g.n), 5):
        sub = [(x, y) for x, y in combinations(vs, 2) if g.has_edge(x, y)]
        if len(sub) != 5:
            continue
        if all(sum(1 for e in sub if v in e) == 2 for v in vs):
            return ("C5", vs)
    return None


def _all_split_partitions(g, start):
    """Closure of a valid split partition under single moves and swaps."""
    def key(part):
        k, i = part
        return (frozenset(k), frozenset(i))

    seen = {key(start)}
    queue = [start]
    out = [start]
    while queue:
        kpart, ipart = queue.pop()
        candidates = []
        # clique -> independent move
        for v in kpart:
            if not any(w in ipart for w in g.adj[v]):
                candidates.append((kpart - {v}, ipart | {v}))
        # independent -> clique move
        for u in ipart:
            if all(w in set(g.adj[u]) for w in kpart):
                candidates.append((kpart | {u}, ipart - {u}))
        # swap
        for u in ipart:
            nu = set(g.adj[u])
            for v in kpart:
                if all(w in nu for w in kpart if w != v) and all(
                    w == u or w not in ipart for w in g.adj[v]
                ):
                    candidates.append((kpart - {v} | {u}, ipart - {u} | {v}))
        for cand in candidates:
            ck = key(cand)
            if ck not in seen:
                seen.add(ck)
                queue.append(cand)
                out.append(cand)
    return out


def recognize_split(g):
    """Split recognition with the canonical max-independent-part partition.

    Among all valid (clique, independent) bipartitions the one with the
    largest independent part wins; ties go to the lexicographically smallest
    sorted clique part.
    """
    part = _degree_partition(g)
    if part is None:
        obs = _find_obstruction(g)
        kind, vs = obs if obs else ("unknown", ())
        raise NotSplitError(f"not a split graph: induced {kind} on {vs}", obs)
    kpart, ipart = part
    if not is_independent(g, ipart) or not _is_clique(g, kpart):
        raise GraphError("degree partition inconsistency")  # pragma: no cover
    best = None
    for k2, i2 in _all_split_partitions(g, (kpart, ipart)):
        cand = (-len(i2), tuple(sorted(k2)))
        if best is None or cand < best[0]:
            best = (cand, (k2, i2))
    kpart, ipart = best[1]
    return _decompose(g, frozenset(kpart), frozenset(ipart))


def _is_clique(g, vs):
    vs = list(vs)
    return all(g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def _decompose(g, kpart, ipart):
    bip_adj = {
        v: [w for w in g.adj[v] if (w in ipart) != (v in ipart)] for v in range(g.n)
    }
    comp = [None] * g.n
    clusters = []
    pseudo = sorted(v for v in kpart if not bip_adj[v])
    for v in range(g.n):
        if comp[v] is not None or v in pseudo:
            continue
        cid = len(clusters)
        comp[v] = cid
        stack = [v]
        members = [v]
        while stack:
            x = stack.pop()
            for w in bip_adj[x]:
                if comp[w] is None:
                    comp[w] = cid
                    stack.append(w)
                    members.append(w)
        u_side = frozenset(x for x in members if x in ipart)
        v_side = frozenset(x for x in members if x in kpart)
        ce = frozenset(
            (min(x, w), max(x, w)) for x in members for w in bip_adj[x]
        )
        if v_side:
            vmin = min(v_side, key=lambda x: (len(bip_adj[x]), x))
            nbhd = frozenset(bip_adj[vmin])
        else:
            vmin, nbhd = None, frozenset()
        clusters.append(Cluster(u_side, v_side, ce, vmin, nbhd))
    if pseudo:
        clusters.append(
            Cluster(frozenset(), frozenset(pseudo), frozenset(), min(pseudo), frozenset())
        )
    order = sorted(range(len(clusters)), key=lambda i: (len(clusters[i].nbhd), i))
    return SplitDecomposition(kpart, ipart, tuple(clusters[i] for i in order))


# ---------------------------------------------------------------------------
# Chordality via perfect elimination orderings


def lex_bfs(g):
    """Lexicographic BFS order, smallest vertex id first among ties."""
    labels = {v: [] for v in range(g.n)}
    order = []
    remaining = set(range(g.n))
    for step in range(g.n):
        v = max(remaining, key=lambda x: (labels[x], -x))
        order.append(v)
        remaining.discard(v)
        for w in g.adj[v]:
            if w in remaining:
                labels[w].append(g.n - step)
    return order


def verify_peo(g, order):
    """True iff every vertex is simplicial in the subgraph of its suffix."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("ordering is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        for i in range(len(later)):
            for j in range(i + 1, len(later)):
                if not g.has_edge(later[i], later[j]):
                    return False
    return True


def find_peo(g):
    """A perfect elimination ordering when g is chordal, else None."""
    if g.n == 0:
        return []
    order = list(reversed(lex_bfs(g)))
    return order if verify_peo(g, order) else None


# ---------------------------------------------------------------------------
# Serialization


def graph_to_json(g):
    out = {"n": g.n, "edges": sorted([list(e) for e in g.edges])}
    if g.labels:
        out["labels"] = {str(k): v for k, v in g.labels.items()}
    return out


def graph_from_json(data):
    labels = None
    if "labels" in data:
        labels = {int(k): v for k, v in data["labels"].items()}
    return build_graph(data["n"], [tuple(e) for e in data["edges"]], labels)


def parse_edgelist(text):
    """DIMACS-like edge list: 'p edge n m' header, 'e u v' lines, 1-indexed."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "edges"):
                raise GraphError(f"malformed header at line {lineno}: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError("edge line before 'p edge' header")
            u, v = int(parts[1]), int(parts[2])
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"unrecognized line {lineno}: {line!r}")
    if n is None:
        raise GraphError("missing 'p edge' header")
    return build_graph(n, edges)


def parse_graph(text, fmt="json"):
    if fmt == "json":
        return graph_from_json(json.loads(text))
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphError(f"unknown graph format: {fmt}")
