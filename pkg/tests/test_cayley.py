from fractions import Fraction
from itertools import combinations

import pytest

from prefix_spectra import colored_group as cg
from prefix_spectra.cayley import (
    CayleyGraph,
    GraphTooLarge,
    adjacency_matrix,
    boundary_size,
    build_graph,
    edge_count,
    edge_list_csv,
    expansion_ratio_exact,
    graph_matvec,
    multi_edge_audit,
    to_dot,
    vertex_cap,
)
from prefix_spectra.colored_group import PrefixReversal


def brute_h(g):
    V = g.vertex_count
    best = None
    for k in range(1, V // 2 + 1):
        for S in combinations(range(V), k):
            r = Fraction(boundary_size(g, S), k)
            best = r if best is None or r < best else best
    return best


def hand_graph(adj):
    gens = tuple(PrefixReversal(1) for _ in adj[0])
    return CayleyGraph(1, 1, False, gens, tuple(tuple(a) for a in adj))


def is_cycle(g):
    if any(len(set(nbrs)) != 2 for nbrs in g.adjacency):
        return False
    seen, prev, cur = {0}, None, 0
    while True:
        nxt = next(w for w in g.adjacency[cur] if w != prev)
        if nxt == 0:
            return len(seen) == g.vertex_count
        seen.add(nxt)
        prev, cur = cur, nxt


def test_pancake_p3_is_hexagon():
    g = build_graph(1, 3, True, classical=True)
    assert g.vertex_count == 6 and is_cycle(g)


def test_burnt_pancake_bp2_is_octagon():
    g = build_graph(2, 2, True, classical=True)
    assert g.vertex_count == 8 and is_cycle(g)


@pytest.mark.parametrize("m,n", [(3, 2), (2, 3), (4, 2)])
def test_undirected_is_directed_plus_transpose(m, n):
    A = adjacency_matrix(build_graph(m, n, True))
    B = adjacency_matrix(build_graph(m, n, False))
    assert B == A + A.T
    assert B.is_symmetric()


@pytest.mark.parametrize("m,n", [(3, 2), (3, 3), (5, 2)])
def test_regular_and_edge_count(m, n):
    g = build_graph(m, n, False)
    assert g.degree == 2 * n
    assert set(g.in_degrees()) == {2 * n}
    assert edge_count(g) == cg.group_order(m, n) * n


def test_p32_edges_and_audit():
    g = build_graph(3, 2, False)
    assert edge_count(g) == 36
    assert edge_list_csv(g).count("\n") == 37
    assert multi_edge_audit(g) == {"m": 3, "n": 2, "vertices_with_collisions": 0, "self_loops": 0}


def test_neighbors_follow_reversals():
    g = build_graph(3, 3, True)
    for v in (0, 17, 100):
        p = cg.unrank(v, 3, 3)
        assert [cg.unrank(w, 3, 3) for w in g.neighbors(v)] == [cg.apply(r, p) for r in cg.flips(3)]


def test_graph_matvec_matches_dense():
    g = build_graph(3, 2, False)
    v = list(range(g.vertex_count))
    assert graph_matvec(g, v) == adjacency_matrix(g).matvec(v)


def test_k4_expansion():
    g = hand_graph([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])
    h, witness = expansion_ratio_exact(g)
    assert h == 2 and len(witness) == 2


def test_disconnected_expansion_is_zero():
    g = hand_graph([[1], [0], [3], [2]])
    h, witness = expansion_ratio_exact(g)
    assert h == 0 and boundary_size(g, witness) == 0


def test_hexagon_expansion():
    # pancake graph on S_3: the 6-cycle, best cut is a path of 3 vertices
    g = build_graph(1, 3, False, classical=True)
    h, _ = expansion_ratio_exact(g)
    assert h == Fraction(2, 3)


@pytest.mark.parametrize("m,n", [(2, 2), (1, 3), (2, 1), (4, 1)])
def test_expansion_matches_brute_force(m, n):
    g = build_graph(m, n, False)
    h, witness = expansion_ratio_exact(g)
    assert h == brute_h(g) == Fraction(boundary_size(g, witness), len(witness))


def test_expansion_p32():
    g = build_graph(3, 2, False)
    h, witness = expansion_ratio_exact(g)
    assert h == brute_h(g) == Fraction(10, 9)
    assert len(witness) <= 9


def test_expansion_rejects_directed_and_large():
    with pytest.raises(ValueError):
        expansion_ratio_exact(build_graph(3, 2, True))
    with pytest.raises(GraphTooLarge):
        expansion_ratio_exact(build_graph(3, 3, False))


def test_cap(monkeypatch):
    with pytest.raises(GraphTooLarge):
        build_graph(3, 3, False, cap=100)
    monkeypatch.setenv("PREFIX_SPECTRA_CAP", "50")
    assert vertex_cap() == 50
    with pytest.raises(GraphTooLarge):
        build_graph(3, 3, False)


def test_dot_export():
    d = to_dot(build_graph(3, 2, True))
    assert d.startswith("digraph P_3_2 {") and " -> " in d
    u = to_dot(build_graph(3, 2, False))
    assert u.startswith("graph PP_3_2 {") and " -- " in u and " -> " not in u
    assert u.count(" -- ") == 36
    assert '[label="1^0 2^0"]' in u
