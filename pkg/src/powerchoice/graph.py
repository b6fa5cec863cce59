"""Undirected simple graphs, BFS distances, powers and clique bounds.

Vertices are the integers ``0..n-1``.  Each vertex keeps a sorted tuple of
neighbours plus an integer bitset row so adjacency tests are O(1).
"""

from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

import numpy as np

# sentinel stored in distance matrices for unreachable pairs
UNREACHABLE = -1


class GraphError(ValueError):
    pass


class HintNotClique(GraphError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Immutable undirected simple graph.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.has_edge(2, 1), g.degree(1)
    (True, 2)
    """

    __slots__ = ("n", "adj", "rows", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._set_adjacency(n, [tuple(sorted(s)) for s in nbrs])

    def _set_adjacency(self, n, adj):
        self.n = n
        self.adj = tuple(adj)
        rows = []
        for ns in self.adj:
            r = 0
            for v in ns:
                r |= 1 << v
            rows.append(r)
        self.rows = tuple(rows)
        self._m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        """Build from symmetric neighbour lists without re-validating every edge twice."""
        g = cls.__new__(cls)
        g._set_adjacency(len(adj), [tuple(sorted(a)) for a in adj])
        for u, ns in enumerate(g.adj):
            for v in ns:
                if v == u or not (g.rows[v] >> u) & 1:
                    raise GraphError(f"adjacency not simple/symmetric at ({u}, {v})")
        return g

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        return cls.from_adjacency([bits(r) for r in rows])

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, m={self._m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, ns in enumerate(self.adj) for v in ns if u < v]

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self.rows[v] | (1 << v)) & mask == mask for v in vs)

    def induced(self, vs: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``vs[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), [(pos[u], pos[v]) for u in vs for v in self.adj[u]
                               if v in pos and u < v])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_layers(self, 0)) == self.n


# -- distances ----------------------------------------------------------------

def bfs_layers(g: Graph, source: int, depth: int | None = None) -> dict[int, int]:
    """Distances from ``source`` to every vertex within ``depth`` (all reachable if None)."""
    dist = {source: 0}
    frontier = deque([source])
    adj = g.adj
    while frontier:
        u = frontier.popleft()
        du = dist[u]
        if depth is not None and du >= depth:
            continue
        for v in adj[u]:
            if v not in dist:
                dist[v] = du + 1
                frontier.append(v)
    return dist


def _bfs_row(adj, n, source):
    row = [UNREACHABLE] * n
    row[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if row[v] == UNREACHABLE:
                    row[v] = d
                    nxt.append(v)
        frontier = nxt
    return row


def _bfs_rows(args):
    adj, n, sources = args
    return [_bfs_row(adj, n, s) for s in sources]


def _chunks(n: int, workers: int) -> list[range]:
    step = -(-n // workers)
    return [range(i, min(n, i + step)) for i in range(0, n, step)]


class DistanceMatrix:
    """All-pairs shortest-path lengths with ``UNREACHABLE`` for separate components."""

    def __init__(self, d: np.ndarray):
        self.d = d

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __getitem__(self, uv):
        return int(self.d[uv])

    def reachable(self, u: int, v: int) -> bool:
        return self.d[u, v] != UNREACHABLE

    def ball_mask(self, v: int, r: int) -> np.ndarray:
        row = self.d[v]
        return (row != UNREACHABLE) & (row <= r)

    def ball_sizes(self, r: int) -> np.ndarray:
        return ((self.d != UNREACHABLE) & (self.d <= r)).sum(axis=1)

    def sphere(self, v: int, r: int) -> list[int]:
        return np.flatnonzero(self.d[v] == r).tolist()

    def eccentricity_max(self) -> int:
        """Largest finite distance."""
        return int(self.d.max()) if self.n else 0


def bfs_all_pairs(g: Graph, workers: int = 1) -> DistanceMatrix:
    """One BFS per source; with ``workers > 1`` the sources are split across processes."""
    n = g.n
    d = np.full((n, n), UNREACHABLE, dtype=np.int32)
    if workers > 1 and n >= 256:
        jobs = [(g.adj, n, list(c)) for c in _chunks(n, workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = [r for part in ex.map(_bfs_rows, jobs) for r in part]
    else:
        rows = _bfs_rows((g.adj, n, range(n)))
    for s, row in enumerate(rows):
        d[s] = row
    return DistanceMatrix(d)


def ball(d: DistanceMatrix, v: int, r: int) -> frozenset[int]:
    """Vertices at distance at most r from v."""
    if r < 0:
        raise GraphError("radius must be non-negative")
    return frozenset(np.flatnonzero(d.ball_mask(v, r)).tolist())


def _power_rows(args):
    adj, sources, k = args
    out = []
    for s in sources:
        seen = {s}
        frontier = [s]
        for _ in range(k):
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            if not nxt:
                break
            frontier = nxt
        seen.discard(s)
        out.append(sorted(seen))
    return out


def power(g: Graph, k: int, workers: int = 1) -> Graph:
    """The k-th power: same vertices, uv an edge iff 1 <= d(u, v) <= k.

    Runs a BFS truncated at depth k from every vertex, so the full distance
    matrix is never built.
    """
    if k < 1:
        raise GraphError(f"power exponent must be >= 1, got {k}")
    if k == 1:
        return g
    if workers > 1 and g.n >= 256:
        jobs = [(g.adj, list(c), k) for c in _chunks(g.n, workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            adj = [r for part in ex.map(_power_rows, jobs) for r in part]
    else:
        adj = _power_rows((g.adj, range(g.n), k))
    out = Graph.__new__(Graph)
    out._set_adjacency(g.n, [tuple(a) for a in adj])
    return out


# -- degeneracy and greedy colouring ------------------------------------------

def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Smallest-last ordering by repeated removal of a minimum-degree vertex.

    Returns ``(order, degeneracy)`` where ``order`` lists vertices in removal
    order and ``degeneracy`` is the largest degree seen at removal time.
    Ties are broken by smallest vertex id.
    """
    n = g.n
    deg = [len(a) for a in g.adj]
    buckets: list[set[int]] = [set() for _ in range(max(deg, default=0) + 1)]
    for v, dv in enumerate(deg):
        buckets[dv].add(v)
    removed = [False] * n
    order = []
    degeneracy = 0
    lo = 0
    for _ in range(n):
        lo = max(lo - 1, 0)
        while not buckets[lo]:
            lo += 1
        v = min(buckets[lo])
        buckets[lo].remove(v)
        removed[v] = True
        order.append(v)
        degeneracy = max(degeneracy, lo)
        for u in g.adj[v]:
            if not removed[u]:
                buckets[deg[u]].remove(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
    return order, degeneracy


def greedy_coloring(g: Graph, order: Sequence[int]) -> list[int]:
    """First-fit colouring visiting vertices in ``order``; colours start at 0."""
    color = [-1] * g.n
    for v in order:
        taken = {color[u] for u in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return color


def degeneracy_coloring(g: Graph) -> list[int]:
    """Greedy colouring along the reverse smallest-last order (uses <= 1 + degeneracy colours)."""
    order, _ = degeneracy_order(g)
    return greedy_coloring(g, order[::-1])


def is_proper_coloring(g: Graph, color: Sequence[int]) -> bool:
    return all(color[u] != color[v] for u, v in g.edges())


# -- cliques ------------------------------------------------------------------

def _greedy_extend(g: Graph, clique: list[int]) -> list[int]:
    cand = (1 << g.n) - 1
    for v in clique:
        cand &= g.rows[v]
    clique = list(clique)
    while cand:
        # pick the candidate keeping the most other candidates alive
        best = max(bits(cand), key=lambda v: ((g.rows[v] & cand).bit_count(), -v))
        clique.append(best)
        cand &= g.rows[best]
    return clique


def clique_lower(g: Graph, hint: Iterable[int] | None = None, *,
                 base: DistanceMatrix | None = None, radius: int | None = None) -> list[int]:
    """A verified clique of ``g``; the largest of the available constructions.

    Candidates: the caller's ``hint`` (checked pairwise) extended greedily; a
    plain greedy clique; and, when ``g`` is known to be a power of a graph
    whose distances are ``base``, the largest ball of the given ``radius``
    (a ball of radius r is a clique in any power >= 2r).
    """
    candidates = []
    if hint is not None:
        hint = sorted(set(hint))
        if any(not 0 <= v < g.n for v in hint):
            raise HintNotClique("hint contains vertices outside the graph")
        if not g.is_clique(hint):
            bad = next((u, v) for i, u in enumerate(hint) for v in hint[i + 1:]
                       if not g.has_edge(u, v))
            raise HintNotClique(f"hint vertices {bad[0]} and {bad[1]} are not adjacent")
        candidates.append(_greedy_extend(g, hint))
    if base is not None and radius is not None and g.n:
        sizes = base.ball_sizes(radius)
        center = int(np.argmax(sizes))
        candidates.append(sorted(ball(base, center, radius)))
    if g.n:
        start = max(range(g.n), key=lambda v: (g.degree(v), -v))
        candidates.append(_greedy_extend(g, [start]))
    best = sorted(max(candidates, key=len, default=[]))
    if not g.is_clique(best):
        raise AssertionError("clique_lower produced a non-clique")
    return best


def _color_bound(g: Graph, cand: int) -> list[tuple[int, int]]:
    """Greedy colour classes of ``cand``; returns (vertex, colour number) sorted by colour."""
    out = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            rest &= ~low
            avail &= ~low & ~g.rows[v]
            out.append((v, color))
    return out


def max_clique(g: Graph, limit: int = 64) -> list[int]:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    if g.n > limit:
        raise BudgetExceeded(f"{g.n} vertices exceeds the exact clique limit {limit}")
    best: list[int] = []

    def expand(clique, cand):
        nonlocal best
        order = _color_bound(g, cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            new = clique + [v]
            sub = cand & g.rows[v]
            if sub:
                expand(new, sub)
            elif len(new) > len(best):
                best = new
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return sorted(best)


def exact_clique(g: Graph, limit: int = 64) -> int:
    """Clique number of ``g`` (at most ``limit`` vertices)."""
    return len(max_clique(g, limit))


# -- small generators ---------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges with probability p."""
    edges = set()
    perm = list(range(n))
    rng.shuffle(perm)
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return Graph(n, sorted(edges))
