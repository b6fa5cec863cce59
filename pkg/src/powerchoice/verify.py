"""Checks of the distance lemmas, the part counts and the upper-bound chain.

The lemma checks work on distances in G directly, using BFS truncated at
depth 4k, so the dense power G^{4k} is only built for the optional cross-check.
"""

from __future__ import annotations

import itertools
import random
from typing import Optional

import numpy as np

from .coloring import CHROMATIC_BUDGET, chromatic_exact
from .construction import ConstructionGraph, expected_counts
from .graph import (UNREACHABLE, BudgetExceeded, Graph, GraphError, bfs_all_pairs,
                    bfs_layers, clique_lower, degeneracy_order, exact_clique, power,
                    random_connected_graph)
from .report import VerificationReport, timed

MAX_WITNESSES = 20
CLIQUE_LIMIT = 64


class KNotOddOrTooSmall(ValueError):
    pass


class Disconnected(GraphError):
    pass


def _params(G: ConstructionGraph) -> dict:
    return {"n": G.n, "k": G.k}


def _distance(g: Graph, u: int, v: int) -> Optional[int]:
    return bfs_layers(g, u).get(v)


def verify_lemma1(G: ConstructionGraph, cross_check: bool = False) -> VerificationReport:
    """No two vertices of one part are within distance 4k of each other."""
    g, k = G.graph, G.k
    radius = 4 * k
    part_of = G.part_index()
    with timed() as t:
        bad = []
        pairs = 0
        for part in G.parts:
            members = set(part.vertices)
            pairs += len(members) * (len(members) - 1) // 2
            for u in part.vertices:
                near = bfs_layers(g, u, radius)
                for v in sorted(members & near.keys()):
                    if v > u:
                        bad.append({"pair": [u, v], "part": part.tag, "distance": near[v]})
        values = {"pairs_checked": pairs, "min_required": radius + 1}
        if cross_check:
            p = power(g, radius)
            clash = [(u, v) for u, v in p.edges() if part_of[u] == part_of[v] >= 0]
            values["cross_check"] = "agree" if len(clash) == len(bad) else "disagree"
            if len(clash) != len(bad):
                bad.append({"cross_check": "power graph disagrees", "edges": len(clash)})
    return VerificationReport.make("lemma1", _params(G), bad, t.ms, MAX_WITNESSES, values)


def verify_lemma2(G: ConstructionGraph, cross_check: bool = False) -> VerificationReport:
    """Levels 0..k-1 induce a complete multipartite subgraph of G^{4k} on the restricted parts."""
    g, k = G.graph, G.k
    radius = 4 * k
    levels = G.levels
    part_of = G.part_index()
    low = [v for v in range(g.n) if 0 <= levels[v] <= k - 1]
    with timed() as t:
        bad = []
        for u in low:
            near = bfs_layers(g, u, radius)
            for v in low:
                if v <= u:
                    continue
                same = part_of[u] == part_of[v]
                if same and v in near:
                    bad.append({"pair": [u, v], "kind": "same part adjacent",
                                "distance": near[v]})
                elif not same and v not in near:
                    bad.append({"pair": [u, v], "kind": "cross part missing",
                                "distance": _distance(g, u, v)})
        low_parts = {part_of[v] for v in low}
        values = {"vertices": len(low), "parts": len(low_parts),
                  "part_sizes": sorted({len(G.parts[i].vertices) for i in low_parts})}
        if cross_check:
            p = power(g, radius).induced(low)
            expect = sum(1 for u, v in itertools.combinations(low, 2)
                         if part_of[u] != part_of[v])
            ok = p.m == expect and all(part_of[low[a]] != part_of[low[b]] for a, b in p.edges())
            values["cross_check"] = "agree" if ok == (not bad) else "disagree"
            if not ok and not bad:
                bad.append({"cross_check": "power graph is not complete multipartite"})
    return VerificationReport.make("lemma2", _params(G), bad, t.ms, MAX_WITNESSES, values)


def transversal(G: ConstructionGraph) -> list[int]:
    """One vertex (the smallest id) from every part at levels 0..k-1."""
    return sorted(min(p.vertices) for p in G.low_parts())


def verify_counts(G: ConstructionGraph, power_graph: Graph | None = None) -> VerificationReport:
    """Size identities plus the chromatic interval for G^{4k}."""
    g, n, k = G.graph, G.n, G.k
    expect = expected_counts(n, k)
    with timed() as t:
        bad = []
        if len(G.parts) != expect["parts"]:
            bad.append({"check": "part count", "got": len(G.parts), "want": expect["parts"]})
        for part in G.parts:
            if len(part.vertices) != n:
                bad.append({"check": "part size", "part": part.tag, "got": len(part.vertices)})
        if g.n != expect["vertices"]:
            bad.append({"check": "vertex count", "got": g.n, "want": expect["vertices"]})
        part_of = G.part_index()
        covered = sorted(v for p in G.parts for v in p.vertices)
        if covered != list(range(g.n)):
            bad.append({"check": "partition", "reason": "parts do not cover each vertex once"})
        if g.max_degree() != n:
            bad.append({"check": "max degree", "got": g.max_degree(), "want": n})
        if not g.is_connected():
            bad.append({"check": "connected", "got": False})

        gp = power_graph if power_graph is not None else power(g, 4 * k)
        clashes = [(u, v) for u, v in gp.edges() if part_of[u] == part_of[v]]
        for u, v in clashes:
            bad.append({"check": "partition colouring", "edge": [u, v]})
        hint = transversal(G)
        if not gp.is_clique(hint):
            bad.append({"check": "transversal clique", "reason": "not pairwise adjacent"})
            hint = None
        elif len(hint) < expect["low_parts"]:
            bad.append({"check": "transversal clique", "got": len(hint),
                        "want": expect["low_parts"]})
        # the transversal, greedily extended; always at least as large
        clique = clique_lower(gp, hint)
        upper = len(G.parts)
        if len(clique) > upper:
            bad.append({"check": "empty interval", "lower": len(clique), "upper": upper})
        values = {"vertices": g.n, "edges": g.m, "parts": len(G.parts),
                  "transversal": len(hint or ()), "chi_lower": len(clique), "chi_upper": upper}
    return VerificationReport.make("counts", _params(G), bad, t.ms, MAX_WITNESSES, values)


def verify_upper_chain(g: Graph, k: int, graph_id: str = "") -> VerificationReport:
    """Step-by-step check of the odd-k bound chi_l(g^k) <= Delta(g) * chi(g^k)^2.

    Every vertex of maximum degree in g^k is tried as the centre x.
    """
    if k < 3 or k % 2 == 0:
        raise KNotOddOrTooSmall(f"k must be odd and >= 3, got {k}")
    params = {"graph": graph_id or f"n{g.n}", "k": k}
    with timed() as t:
        D = bfs_all_pairs(g)
        if g.n and (D.d == UNREACHABLE).any():
            raise Disconnected("the base graph must be connected")
        half, up = k // 2, (k + 1) // 2
        delta = g.max_degree()
        big = D.ball_sizes(k)
        small = D.ball_sizes(half)
        max_small = int(small.max())
        centres = np.flatnonzero(big == big.max()).tolist()
        bad = []
        for x in centres:
            row = D.d[x]
            A = np.flatnonzero(row == up)
            S = np.flatnonzero(row == half)
            outer = D.ball_mask(x, k) & ~D.ball_mask(x, half)
            if len(A):
                cover = ((D.d[A] != UNREACHABLE) & (D.d[A] <= half)).any(axis=0)
            else:
                cover = np.zeros(g.n, dtype=bool)
            missed = np.flatnonzero(outer & ~cover).tolist()
            if missed:
                bad.append({"step": "i", "x": x, "uncovered": missed[:10]})
            sub = D.d[np.ix_(S, S)]
            if ((sub == UNREACHABLE) | (sub > k)).any():
                bad.append({"step": "ii", "x": x, "S": S.tolist()})
            if len(A) > (delta - 1) * len(S):
                bad.append({"step": "iii", "x": x, "A": len(A), "bound": (delta - 1) * len(S)})
            ball_x = int(big[x])
            sum_bound = int(small[x]) + int(small[A].sum())
            if ball_x > sum_bound:
                bad.append({"step": "iv", "x": x, "ball": ball_x, "bound": sum_bound})
            if ball_x > (1 + len(A)) * max_small:
                bad.append({"step": "iv", "x": x, "ball": ball_x,
                            "bound": (1 + len(A)) * max_small})

        gk = power(g, k)
        _, degen = degeneracy_order(gk)
        one_plus_delta_k = int(big.max())
        values = {"delta": delta, "one_plus_max_degree_power": one_plus_delta_k,
                  "one_plus_degeneracy_power": degen + 1, "max_half_ball": max_small,
                  "centres": len(centres)}
        if degen + 1 > one_plus_delta_k:
            bad.append({"step": "v", "degeneracy": degen, "max_degree_power": one_plus_delta_k - 1})
        if g.n <= CLIQUE_LIMIT:
            omega = exact_clique(gk, CLIQUE_LIMIT)
            values["omega"] = omega
        else:
            omega = len(clique_lower(gk, base=D, radius=half))
            values["omega_lower"] = omega
        if one_plus_delta_k > delta * omega * omega:
            bad.append({"step": "v", "lhs": one_plus_delta_k, "rhs": delta * omega * omega})
        if g.n <= CHROMATIC_BUDGET:
            chi = chromatic_exact(gk)
            values["chi"] = chi
            if one_plus_delta_k > delta * chi * chi:
                bad.append({"step": "v", "lhs": one_plus_delta_k, "rhs": delta * chi * chi})
            if omega > chi:
                bad.append({"step": "vi", "omega": omega, "chi": chi})
        if not delta < omega:
            bad.append({"step": "vi", "delta": delta, "omega": omega})
    return VerificationReport.make("upper_chain", params, bad, t.ms, MAX_WITNESSES, values)


def verify_fk_bound(g: Graph, k: int, graph_id: str = "") -> VerificationReport:
    """1 + degeneracy(g^k) < m^2 (k even) or m^3 (k odd), where m = chi(g^k)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if g.n > CHROMATIC_BUDGET:
        raise BudgetExceeded(f"{g.n} vertices exceeds the chromatic budget {CHROMATIC_BUDGET}")
    params = {"graph": graph_id or f"n{g.n}", "k": k}
    with timed() as t:
        gk = power(g, k)
        m = chromatic_exact(gk)
        _, degen = degeneracy_order(gk)
        exponent = 2 if k % 2 == 0 else 3
        bound = m**exponent
        bad = []
        if not degen + 1 < bound:
            bad.append({"chi": m, "one_plus_degeneracy": degen + 1, "bound": bound})
        values = {"chi": m, "one_plus_degeneracy": degen + 1, "bound": bound,
                  "exponent": exponent}
    return VerificationReport.make("fk_bound", params, bad, t.ms, MAX_WITNESSES, values)


def verify_construction(G: ConstructionGraph, odd_powers=(3, 5)) -> list[VerificationReport]:
    """Every check that applies to a built construction graph."""
    reports = [verify_lemma1(G), verify_lemma2(G), verify_counts(G)]
    tag = f"G(n={G.n},k={G.k})"
    for kk in odd_powers:
        reports.append(verify_upper_chain(G.graph, kk, tag))
    if G.graph.n <= CHROMATIC_BUDGET:
        reports.append(verify_fk_bound(G.graph, G.k, tag))
    return reports


def random_graphs(count: int, seed: int, n_range=(5, 30), p_range=(0.0, 0.08)):
    """``count`` seeded random connected graphs as ``(name, graph)`` pairs."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(*n_range)
        p = rng.uniform(*p_range)
        out.append((f"rand{i}(n={n},seed={seed})", random_connected_graph(n, p, rng)))
    return out


def random_suite(count: int, seed: int, odd_powers=(3, 5)) -> list[VerificationReport]:
    """Upper-bound chain on seeded random connected graphs of at most 30 vertices."""
    return [verify_upper_chain(g, odd_powers[i % len(odd_powers)], name)
            for i, (name, g) in enumerate(random_graphs(count, seed))]


def fk_suite(count: int, seed: int, powers=(2, 3, 4, 5)) -> list[VerificationReport]:
    """f_k bound witnesses on seeded random connected graphs of at most 20 vertices."""
    graphs = random_graphs(count, seed, n_range=(2, 20), p_range=(0.0, 0.15))
    return [verify_fk_bound(g, k, name) for name, g in graphs for k in powers]
