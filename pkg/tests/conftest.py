import functools
import itertools

import pytest

from powerchoice.construction import build_construction
from powerchoice.graph import Graph


@functools.lru_cache(maxsize=None)
def construction(q, k):
    return build_construction(q, k)


@pytest.fixture
def G22():
    return construction(2, 2)


@pytest.fixture
def G32():
    return construction(3, 2)


def floyd_warshall(g: Graph):
    """Independent all-pairs oracle; None marks unreachable."""
    inf = float("inf")
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(g.n)]
         for i in range(g.n)]
    for w in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][w] + d[w][j] < d[i][j]:
                    d[i][j] = d[i][w] + d[w][j]
    return [[None if x == inf else int(x) for x in row] for row in d]


def brute_chromatic(g: Graph) -> int:
    for c in range(1, g.n + 1):
        for col in itertools.product(range(c), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges()):
                return c
    return 0


def brute_clique(g: Graph) -> int:
    best = 0
    for r in range(1, g.n + 1):
        if any(g.is_clique(s) for s in itertools.combinations(range(g.n), r)):
            best = r
    return best


def brute_degeneracy(g: Graph) -> int:
    best = 0
    for r in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            ss = set(s)
            best = max(best, min(sum(1 for u in g.neighbors(v) if u in ss) for v in s))
    return best


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
