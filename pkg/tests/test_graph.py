import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from kjump.graph import (
    GraphError,
    NotSplitError,
    build_graph,
    diameter,
    dist,
    find_peo,
    graph_from_json,
    graph_to_json,
    is_connected,
    is_independent,
    lex_bfs,
    parse_edgelist,
    parse_graph,
    recognize_split,
    shortest_path,
    verify_peo,
)
from kjump.generators import random_split_graph

from conftest import (
    atlas_graphs,
    brute_split_partitions,
    complete_graph,
    cycle_graph,
    naive_chordal,
    naive_dist,
    path_graph,
    random_graphs,
    star_graph,
    two_cluster_graph,
)


# ---------------------------------------------------------------------------
# construction

def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3
    assert len(g.edges) == 3
    assert g.adj[0] == (1, 2)


def test_build_rejects_self_loop():
    with pytest.raises(GraphError, match=r"self-loop.*\(0, 0\)"):
        build_graph(2, [(0, 0)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(GraphError, match=r"duplicate.*\(0, 1\)"):
        build_graph(3, [(0, 1), (0, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError, match=r"out of range.*\(0, 5\)"):
        build_graph(3, [(0, 5)])


def test_adjacency_symmetric():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    for u in range(4):
        for v in g.adj[u]:
            assert u in g.adj[v]


# ---------------------------------------------------------------------------
# distances

def test_dist_path():
    g = path_graph(4)
    assert dist(g, 0, 3) == 3
    assert dist(g, 3, 0) == 3


def test_dist_identity():
    g = cycle_graph(5)
    for v in range(5):
        assert dist(g, v, v) == 0


def test_dist_unreachable():
    g = build_graph(2, [])
    assert dist(g, 0, 1) is None


def test_dist_out_of_range():
    with pytest.raises(GraphError):
        dist(path_graph(3), 0, 7)


def test_shortest_path_lowest_id_tie_break():
    # C4: both 0-1-2 and 0-3-2 are shortest; parent scan is ascending.
    g = cycle_graph(4)
    assert shortest_path(g, 0, 2) == [0, 1, 2]
    assert shortest_path(g, 0, 0) == [0]


def test_shortest_path_none_across_components():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert shortest_path(g, 0, 3) is None


def test_diameter_examples():
    assert diameter(cycle_graph(5)) == 2
    assert diameter(complete_graph(4)) == 1
    assert diameter(star_graph(3)) == 2


def test_diameter_disconnected_raises():
    with pytest.raises(GraphError, match="disconnected"):
        diameter(build_graph(3, [(0, 1)]))


def test_is_connected():
    assert is_connected(path_graph(5))
    assert not is_connected(build_graph(3, [(0, 1)]))
    assert is_connected(build_graph(1, []))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_dist_is_a_metric(data):
    n = data.draw(st.integers(2, 8))
    all_pairs = list(itertools.combinations(range(n), 2))
    edges = data.draw(st.sets(st.sampled_from(all_pairs)))
    g = build_graph(n, sorted(edges))
    for u in range(n):
        for v in range(n):
            d = dist(g, u, v)
            assert d == naive_dist(g, u, v)
            assert d == dist(g, v, u)
            for w in range(n):
                a, b = dist(g, u, w), dist(g, w, v)
                if a is not None and b is not None:
                    assert d is not None and d <= a + b


# ---------------------------------------------------------------------------
# independence

def test_is_independent_examples():
    g = star_graph(3)
    assert is_independent(g, {1, 2, 3})
    assert not is_independent(g, {0, 1})
    assert is_independent(g, set())


def test_is_independent_range_check():
    with pytest.raises(GraphError):
        is_independent(path_graph(2), {9})


# ---------------------------------------------------------------------------
# split recognition

def test_recognize_c4_rejected_with_witness():
    with pytest.raises(NotSplitError) as ei:
        recognize_split(cycle_graph(4))
    kind, verts = ei.value.witness
    assert kind == "C4"
    assert len(set(verts)) == 4


def test_recognize_2k2_rejected():
    with pytest.raises(NotSplitError) as ei:
        recognize_split(build_graph(4, [(0, 1), (2, 3)]))
    assert ei.value.witness[0] == "2K2"


def test_recognize_c5_rejected():
    with pytest.raises(NotSplitError) as ei:
        recognize_split(cycle_graph(5))
    assert ei.value.witness[0] in ("C4", "2K2", "C5")


def test_canonical_partition_k3_plus_pendant():
    # Triangle 0,1,2 with pendant 3 on 0. Maximum independent part has two
    # vertices; among the ties the lexicographically smallest clique wins.
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    dec = recognize_split(g)
    assert sorted(dec.clique_part) == [0, 1]
    assert sorted(dec.indep_part) == [2, 3]


def test_two_cluster_decomposition():
    g = two_cluster_graph(2)  # clique {0,1}; 0-2,3; 1-4,5
    dec = recognize_split(g)
    assert sorted(dec.clique_part) == [0, 1]
    assert len(dec.clusters) == 2
    for c in dec.clusters:
        assert c.n_size == 2
        assert len(c.u_side) == 2
        assert len(c.v_side) == 1
    sides = {frozenset(c.u_side) for c in dec.clusters}
    assert sides == {frozenset({2, 3}), frozenset({4, 5})}


def test_pseudo_cluster_collects_bare_clique_vertices():
    # Pseudo-clusters only arise for non-canonical partitions: a clique
    # vertex with no independent neighbor is movable, so the canonical
    # max-|U^B| rule always empties them. Exercise the rule directly.
    from kjump.graph import _decompose

    g = build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])
    dec = _decompose(g, frozenset({0, 1, 2}), frozenset({3, 4}))
    pseudo = [c for c in dec.clusters if not c.u_side]
    assert len(pseudo) == 1
    assert pseudo[0].v_side == frozenset({1, 2})
    assert pseudo[0].n_size == 0
    # and the canonical recognizer indeed leaves no pseudo-cluster
    assert all(c.u_side for c in recognize_split(g).clusters)


def test_clusters_sorted_by_neighborhood_size():
    g = random_split_graph(9, random.Random(3))
    dec = recognize_split(g)
    sizes = [c.n_size for c in dec.clusters]
    assert sizes == sorted(sizes)


def test_canonical_partition_matches_brute_force():
    rng = random.Random(11)
    for _ in range(120):
        g = random_split_graph(rng.randint(1, 7), rng)
        dec = recognize_split(g)
        parts = brute_split_partitions(g)
        assert parts, "generated graph should be split"
        best = min(parts, key=lambda p: (-len(p[1]), tuple(sorted(p[0]))))
        assert (dec.clique_part, dec.indep_part) == best


def test_recognition_agrees_with_forbidden_subgraph_check():
    # A graph is split iff it has no induced 2K2, C4 or C5.
    for g in atlas_graphs(6):
        try:
            dec = recognize_split(g)
            is_split = True
        except NotSplitError as exc:
            is_split = False
            kind, verts = exc.witness
            induced = [
                (a, b)
                for a, b in itertools.combinations(sorted(set(verts)), 2)
                if g.has_edge(a, b)
            ]
            assert len(induced) == {"2K2": 2, "C4": 4, "C5": 5}[kind]
        assert is_split == bool(brute_split_partitions(g))
        if is_split:
            # reassembly: U^B edgeless, V^A complete, clusters partition U^B
            assert is_independent(g, dec.indep_part)
            for a, b in itertools.combinations(sorted(dec.clique_part), 2):
                assert g.has_edge(a, b)
            covered = [v for c in dec.clusters for v in c.u_side]
            assert sorted(covered) == sorted(dec.indep_part)


# ---------------------------------------------------------------------------
# chordality

def test_find_peo_on_path():
    g = path_graph(4)
    order = find_peo(g)
    assert order is not None
    assert verify_peo(g, order)


def test_find_peo_rejects_c4():
    assert find_peo(cycle_graph(4)) is None


def test_verify_peo_examples():
    p3 = path_graph(3)
    assert verify_peo(p3, [0, 2, 1])
    c4 = cycle_graph(4)
    for order in itertools.permutations(range(4)):
        assert not verify_peo(c4, list(order))


def test_verify_peo_requires_permutation():
    with pytest.raises(GraphError, match="permutation"):
        verify_peo(path_graph(3), [0, 0, 1])


def test_lex_bfs_is_permutation():
    for g in random_graphs(20, 8, seed=5):
        assert sorted(lex_bfs(g)) == list(range(g.n))


def test_peo_matches_exhaustive_chordality():
    # find_peo returns an ordering exactly when no induced cycle >= 4 exists.
    for g in atlas_graphs(7):
        order = find_peo(g)
        assert (order is not None) == naive_chordal(g), g.edges
        if order is not None:
            assert verify_peo(g, order)
    rng = random.Random(23)
    for _ in range(60):
        edges = [e for e in itertools.combinations(range(8), 2) if rng.random() < 0.35]
        g = build_graph(8, edges)
        assert (find_peo(g) is not None) == naive_chordal(g), g.edges


# ---------------------------------------------------------------------------
# serialization

def test_graph_json_round_trip():
    g = build_graph(4, [(0, 1), (2, 3)], labels={0: "a"})
    data = graph_to_json(g)
    h = graph_from_json(json.loads(json.dumps(data)))
    assert h.n == g.n and h.edges == g.edges and h.labels == g.labels


def test_parse_edgelist():
    g = parse_edgelist("c comment\np edge 4 2\ne 1 2\ne 3 4\n")
    assert g.n == 4
    assert g.edges == frozenset({(0, 1), (2, 3)})


def test_parse_edgelist_errors():
    with pytest.raises(GraphError, match="header"):
        parse_edgelist("e 1 2\n")
    with pytest.raises(GraphError, match="unrecognized"):
        parse_edgelist("p edge 2 1\nx 1 2\n")


def test_parse_graph_dispatch():
    g = parse_graph('{"n": 2, "edges": [[0, 1]]}', "json")
    assert g.edges == frozenset({(0, 1)})
    with pytest.raises(GraphError, match="format"):
        parse_graph("", "yaml")
