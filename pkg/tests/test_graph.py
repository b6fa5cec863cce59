import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_clique, brute_degeneracy, construction, floyd_warshall
from powerchoice.graph import (UNREACHABLE, BudgetExceeded, Graph, GraphError, HintNotClique,
                               ball, bfs_all_pairs, clique_lower, complete_bipartite,
                               complete_graph, cycle_graph, degeneracy_coloring,
                               degeneracy_order, exact_clique, is_proper_coloring,
                               path_graph, petersen_graph, power, random_connected_graph)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_rejects_loops_and_range():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_simple_and_sorted():
    g = Graph(4, [(2, 0), (0, 2), (3, 0), (0, 1)])
    assert g.m == 3
    assert g.neighbors(0) == (1, 2, 3)
    assert all(g.has_edge(u, v) == (v in g.neighbors(u)) for u in range(4) for v in range(4))


def test_path_distance():
    D = bfs_all_pairs(path_graph(3))
    assert D[0, 2] == 2


def test_unreachable():
    D = bfs_all_pairs(Graph(4, [(0, 1), (2, 3)]))
    assert D[0, 2] == UNREACHABLE
    assert not D.reachable(0, 3)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_bfs_matches_floyd_warshall(g):
    D = bfs_all_pairs(g)
    fw = floyd_warshall(g)
    for u in range(g.n):
        for v in range(g.n):
            want = UNREACHABLE if fw[u][v] is None else fw[u][v]
            assert D[u, v] == want


def test_bfs_parallel_matches_serial():
    g = construction(4, 3).graph
    assert (bfs_all_pairs(g, workers=2).d == bfs_all_pairs(g).d).all()


def test_construction_diameter(G22):
    assert bfs_all_pairs(G22.graph).eccentricity_max() >= 9


def test_power_identity():
    g = petersen_graph()
    assert power(g, 1) == g


def test_c7_cubed_is_k7():
    assert power(cycle_graph(7), 3) == complete_graph(7)


def test_p5_squared():
    g2 = power(path_graph(5), 2)
    assert g2.neighbors(2) == (0, 1, 3, 4)
    assert g2.neighbors(0) == (1, 2)
    assert not g2.has_edge(0, 3)


def test_power_rejects_zero():
    with pytest.raises(GraphError):
        power(path_graph(3), 0)


def test_power_parallel_matches_serial():
    g = construction(4, 3).graph
    assert power(g, 5, workers=2) == power(g, 5)


@settings(max_examples=40, deadline=None)
@given(graphs(), st.integers(1, 5), st.integers(1, 5))
def test_power_composition(g, a, b):
    assert power(power(g, a), b) == power(g, a * b)


@settings(max_examples=40, deadline=None)
@given(graphs(), st.integers(1, 5))
def test_power_monotone_and_definition(g, k):
    gk = power(g, k)
    assert set(power(g, k).edges()) <= set(power(g, k + 1).edges())
    fw = floyd_warshall(g)
    assert set(gk.edges()) == {(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                               if fw[u][v] is not None and fw[u][v] <= k}


def test_ball_examples():
    D = bfs_all_pairs(cycle_graph(7))
    assert ball(D, 3, 0) == {3}
    assert len(ball(D, 0, 1)) == 3
    assert ball(D, 0, 3) == frozenset(range(7))


@settings(max_examples=40, deadline=None)
@given(graphs(), st.integers(0, 4))
def test_ball_properties(g, r):
    D = bfs_all_pairs(g)
    for v in range(g.n):
        assert ball(D, v, r) <= ball(D, v, r + 1)
        assert len(ball(D, v, 1)) == 1 + g.degree(v)


def test_degeneracy_examples():
    tree = Graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert degeneracy_order(tree)[1] == 1
    assert degeneracy_order(complete_graph(5))[1] == 4
    order, d = degeneracy_order(complete_bipartite(2, 4))
    assert d == 2
    # the size-4 side has the smaller degree and is peeled first
    assert order[0] in {2, 3, 4, 5}


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_degeneracy_matches_brute_force(g):
    order, d = degeneracy_order(g)
    assert sorted(order) == list(range(g.n))
    assert d == brute_degeneracy(g)
    col = degeneracy_coloring(g)
    assert is_proper_coloring(g, col)
    assert max(col) + 1 <= d + 1


def test_clique_lower_examples(G32):
    assert len(clique_lower(complete_graph(4))) == 4
    assert len(clique_lower(cycle_graph(5))) == 2
    g8 = power(G32.graph, 8)
    hint = sorted(min(p.vertices) for p in G32.low_parts())
    assert len(hint) == 12 and g8.is_clique(hint)
    assert len(clique_lower(g8, hint)) >= 12


def test_clique_lower_bad_hint():
    with pytest.raises(HintNotClique):
        clique_lower(cycle_graph(5), [0, 2])


def test_clique_lower_from_balls():
    base = cycle_graph(9)
    D = bfs_all_pairs(base)
    c = clique_lower(power(base, 4), base=D, radius=2)
    assert len(c) >= 5


def test_exact_clique_examples():
    assert exact_clique(petersen_graph()) == 2
    assert exact_clique(complete_bipartite(3, 3)) == 2
    assert exact_clique(power(cycle_graph(7), 3)) == 7


def test_exact_clique_budget():
    with pytest.raises(BudgetExceeded):
        exact_clique(path_graph(65))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=11))
def test_exact_clique_matches_brute_force(g):
    assert exact_clique(g) == brute_clique(g)
    assert g.is_clique(clique_lower(g))


def test_random_connected():
    rng = random.Random(5)
    for _ in range(20):
        g = random_connected_graph(rng.randint(1, 30), 0.05, rng)
        assert g.is_connected()
