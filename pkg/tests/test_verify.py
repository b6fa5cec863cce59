import dataclasses

import pytest

from conftest import brute_degeneracy, construction, floyd_warshall
from powerchoice.construction import ConstructionGraph
from powerchoice.graph import (Graph, complete_bipartite, complete_graph, cycle_graph,
                               path_graph, power, star_graph)
from powerchoice.verify import (Disconnected, KNotOddOrTooSmall, fk_suite, random_suite,
                                verify_construction, verify_counts, verify_fk_bound,
                                verify_lemma1, verify_lemma2, verify_upper_chain)


def rewired(G: ConstructionGraph, part_tag: str) -> tuple[ConstructionGraph, tuple[int, int]]:
    """Detach one degree-2 vertex and hang it between two members of ``part_tag``."""
    part = next(p for p in G.parts if p.tag == part_tag)
    u, v = part.vertices[:2]
    w = next(x for x, lab in enumerate(G.labels)
             if lab.kind == "sub" and G.graph.degree(x) == 2)
    edges = [e for e in G.graph.edges() if w not in e] + [(w, u), (w, v)]
    return dataclasses.replace(G, graph=Graph(G.graph.n, edges), _levels=None), (u, v)


@pytest.mark.parametrize("q,k", [(2, 2), (3, 3)])
def test_lemma1_passes(q, k):
    r = verify_lemma1(construction(q, k), cross_check=True)
    assert r.passed and r.values["min_required"] == 4 * k + 1
    assert r.values["cross_check"] == "agree"


def test_lemma1_distances_at_least_9(G22):
    fw = floyd_warshall(G22.graph)
    for p in G22.parts:
        for i, u in enumerate(p.vertices):
            for v in p.vertices[i + 1:]:
                assert fw[u][v] >= 9


def test_lemma1_mutation_gives_witness(G22):
    bad, (u, v) = rewired(G22, "a1")
    r = verify_lemma1(bad)
    assert r.status == "fail"
    assert {"pair": [u, v], "part": "a1", "distance": 2} in r.witnesses
    for w in r.witnesses:
        a, b = w["pair"]
        assert floyd_warshall(bad.graph)[a][b] == w["distance"] <= 8


@pytest.mark.parametrize("q,k,parts", [(2, 2, 6), (3, 2, 12)])
def test_lemma2_passes(q, k, parts):
    r = verify_lemma2(construction(q, k), cross_check=True)
    assert r.passed
    assert r.values["parts"] == parts == (k - 1) * q * q + q
    assert r.values["part_sizes"] == [q]
    assert r.values["cross_check"] == "agree"


def test_lemma2_largest_instance():
    G = construction(5, 4)
    assert G.graph.n == 505
    assert verify_lemma2(G).passed


def test_lemma2_detects_missing_cross_pair(G22):
    # drop every edge at one point: it becomes unreachable from the rest
    p = 0
    edges = [e for e in G22.graph.edges() if p not in e]
    bad = dataclasses.replace(G22, graph=Graph(G22.graph.n, edges), _levels=None)
    r = verify_lemma2(bad)
    assert r.status == "fail"
    assert any(p in w["pair"] for w in r.witnesses)
    fw = floyd_warshall(bad.graph)
    for w in r.witnesses:
        a, b = w["pair"]
        assert w["kind"] == "cross part missing"
        assert fw[a][b] is None or fw[a][b] > 8


@pytest.mark.parametrize("q,k,parts,lo", [(3, 2, 19, 12), (2, 2, 9, 6), (2, 3, 13, 10)])
def test_counts(q, k, parts, lo):
    r = verify_counts(construction(q, k))
    assert r.passed
    assert r.values["parts"] == parts == r.values["chi_upper"]
    assert r.values["transversal"] == lo
    assert lo <= r.values["chi_lower"] <= r.values["chi_upper"]


def test_counts_detect_bad_partition(G22):
    merged = list(G22.parts)
    merged[0] = dataclasses.replace(merged[0], vertices=merged[0].vertices + merged[1].vertices)
    del merged[1]
    r = verify_counts(dataclasses.replace(G22, parts=merged, _levels=None))
    assert r.status == "fail"
    checks = {w["check"] for w in r.witnesses}
    assert {"part count", "part size"} <= checks


def test_upper_chain_c7():
    r = verify_upper_chain(cycle_graph(7), 3)
    assert r.passed
    assert r.values["one_plus_max_degree_power"] == 7
    assert r.values["delta"] * r.values["chi"] ** 2 == 98
    assert r.values["centres"] == 7


def test_upper_chain_star():
    r = verify_upper_chain(star_graph(4), 3)
    assert r.passed
    assert r.values["delta"] == 4 and r.values["omega"] == 5 == r.values["chi"]


def test_upper_chain_rejects_even_k():
    with pytest.raises(KNotOddOrTooSmall):
        verify_upper_chain(cycle_graph(7), 2)
    with pytest.raises(KNotOddOrTooSmall):
        verify_upper_chain(cycle_graph(7), 1)


def test_upper_chain_rejects_disconnected():
    with pytest.raises(Disconnected):
        verify_upper_chain(Graph(4, [(0, 1), (2, 3)]), 3)


@pytest.mark.parametrize("q,k", [(2, 2), (3, 2), (2, 3), (3, 3)])
@pytest.mark.parametrize("kk", [3, 5])
def test_upper_chain_on_construction(q, k, kk):
    assert verify_upper_chain(construction(q, k).graph, kk).passed


def test_fk_examples():
    r = verify_fk_bound(path_graph(6), 2)
    p62 = power(path_graph(6), 2)
    assert brute_degeneracy(p62) == 2 and p62.max_degree() == 4
    assert r.passed and r.values["chi"] == 3 and r.values["one_plus_degeneracy"] == 3
    r = verify_fk_bound(cycle_graph(7), 3)
    assert r.passed and r.values["chi"] == 7 and r.values["bound"] == 343
    r = verify_fk_bound(complete_graph(2), 2)
    assert r.passed and (r.values["chi"], r.values["one_plus_degeneracy"]) == (2, 2)


def test_fk_reports_failure_honestly():
    # an edgeless graph has m = 1 and 1 + 0 < 1 fails
    r = verify_fk_bound(Graph(3), 2)
    assert r.status == "fail" and r.witnesses


def test_suites_are_seeded():
    a = [x.values for x in random_suite(5, 7)]
    b = [x.values for x in random_suite(5, 7)]
    assert a == b
    assert all(x.passed for x in fk_suite(3, 1))


def test_verify_construction_bundle(G22):
    reports = verify_construction(G22)
    assert [r.claim for r in reports] == ["lemma1", "lemma2", "counts", "upper_chain",
                                          "upper_chain", "fk_bound"]
    assert all(r.passed for r in reports)


def test_power_cross_check_small():
    G = construction(3, 2)
    g8 = power(G.graph, 8)
    part_of = G.part_index()
    assert not any(part_of[u] == part_of[v] for u, v in g8.edges())
