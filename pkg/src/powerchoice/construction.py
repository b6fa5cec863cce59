"""The incidence graph H, the subdivided graph G and its partition into parts.

Conventions (all 0-based internally):

* ``a_i`` (i = 1..n) is the i-th line of the vertical class ``L_0``.
* ``L_j`` (j = 1..n) is ``plane.classes[j]``; ``L_1`` is the horizontal class.
* Edges ``p-l`` with ``l`` in ``L_1`` become paths of length k ending at the
  line vertex itself; every other edge becomes a path of length k + 1 whose
  far end is replaced by a clique on the level-k vertices of that line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, power
from .plane import AffinePlane


class InvalidK(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite point/line incidence graph on the points and ``B = L - L_0``.

    Vertex ``p`` (``0 <= p < n^2``) is a point; vertex ``n^2 + (j-1)*n + b``
    is line ``b`` of class ``L_j``.
    """

    plane: AffinePlane
    graph: Graph
    point_parts: tuple[tuple[int, ...], ...]
    line_parts: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.plane.n

    def line_vertex(self, j: int, b: int) -> int:
        return self.n * self.n + (j - 1) * self.n + b

    def block(self, i: int, j: int) -> list[tuple[int, int]]:
        """Edges of ``H[a_i, L_j]`` (1-based i and j)."""
        pts = set(self.point_parts[i - 1])
        return [(p, l) for l in self.line_parts[j - 1] for p in self.graph.neighbors(l)
                if p in pts]

    def is_matching_block(self, i: int, j: int) -> bool:
        """True when ``H[a_i, L_j]`` is a perfect matching between the two n-sets."""
        edges = self.block(i, j)
        ps = {p for p, _ in edges}
        ls = {l for _, l in edges}
        return len(edges) == self.n and len(ps) == self.n and len(ls) == self.n


def build_H(plane: AffinePlane) -> IncidenceGraph:
    n = plane.n
    edges = []
    line_parts = []
    for j in range(1, n + 1):
        part = []
        for b, line in enumerate(plane.classes[j]):
            lv = n * n + (j - 1) * n + b
            part.append(lv)
            edges.extend((p, lv) for p in line)
        line_parts.append(tuple(part))
    point_parts = tuple(tuple(line) for line in plane.classes[0])
    return IncidenceGraph(plane, Graph(n * n + n * n, edges), point_parts, tuple(line_parts))


@dataclass(frozen=True)
class VertexLabel:
    """``kind`` is ``point``, ``line`` (an ``L_1`` line) or ``sub``.

    ``point`` is a plane point index and ``line`` a global plane line index
    (``class * n + index``); either is None where it does not apply.
    Level-k clique vertices keep the (point, line) of the edge they came from.
    """

    kind: str
    point: Optional[int]
    line: Optional[int]
    level: int


_TAG_RE = re.compile(r"^(?:a(\d+)|L1|V(\d+)\.(\d+)\.(\d+))$")


@dataclass(frozen=True)
class Part:
    tag: str
    vertices: tuple[int, ...]

    def level(self, k: int) -> int:
        m = _TAG_RE.match(self.tag)
        if m is None:
            raise ValueError(f"bad part tag {self.tag!r}")
        if m.group(1):
            return 0
        if self.tag == "L1":
            return k
        return int(m.group(4))


def parse_tag(tag: str) -> tuple[str, tuple[int, ...]]:
    m = _TAG_RE.match(tag)
    if m is None:
        raise ValueError(f"bad part tag {tag!r}")
    if m.group(1):
        return "a", (int(m.group(1)),)
    if tag == "L1":
        return "L1", ()
    return "V", (int(m.group(2)), int(m.group(3)), int(m.group(4)))


@dataclass
class ConstructionGraph:
    graph: Graph
    parts: list[Part]
    n: int
    k: int
    labels: Optional[list[VertexLabel]] = None
    _levels: Optional[list[int]] = field(default=None, repr=False)

    @property
    def levels(self) -> list[int]:
        """Level of every vertex, read off the partition tags."""
        if self._levels is None:
            lv = [-1] * self.graph.n
            for part in self.parts:
                m = part.level(self.k)
                for v in part.vertices:
                    lv[v] = m
            self._levels = lv
        return self._levels

    def part_index(self) -> list[int]:
        """Part number of every vertex (-1 if a vertex is in no part)."""
        idx = [-1] * self.graph.n
        for i, part in enumerate(self.parts):
            for v in part.vertices:
                idx[v] = i
        return idx

    def low_parts(self) -> list[Part]:
        """Parts at levels 0..k-1, the complete multipartite piece."""
        return [p for p in self.parts if p.level(self.k) <= self.k - 1]


def build_G(H: IncidenceGraph, k: int) -> ConstructionGraph:
    if k < 2:
        raise InvalidK(f"k must be at least 2, got {k}")
    plane = H.plane
    n = plane.n
    labels: list[VertexLabel] = []
    for p in range(n * n):
        labels.append(VertexLabel("point", p, None, 0))
    l1_vertex = {}
    for b in range(n):
        l1_vertex[b] = len(labels)
        labels.append(VertexLabel("line", None, plane.line_id(1, b), k))

    adj: list[set[int]] = [set() for _ in labels]

    def new_vertex(label):
        labels.append(label)
        adj.append(set())
        return len(labels) - 1

    def join(u, v):
        adj[u].add(v)
        adj[v].add(u)

    # subdivision vertices by (class, line index, point, level); (p, l, m) -> vertex id
    sub: dict[tuple[int, int, int], int] = {}
    for j in range(1, n + 1):
        for b, line in enumerate(plane.classes[j]):
            lid = plane.line_id(j, b)
            top = k - 1 if j == 1 else k
            for p in line:
                for m in range(1, top + 1):
                    sub[p, lid, m] = new_vertex(VertexLabel("sub", p, lid, m))
    n_real = len(labels)

    # the lines of L_2..L_n exist temporarily, then get replaced by cliques
    temp_line = {}
    for j in range(2, n + 1):
        for b in range(n):
            lid = plane.line_id(j, b)
            temp_line[lid] = len(adj)
            adj.append(set())

    for j in range(1, n + 1):
        for b, line in enumerate(plane.classes[j]):
            lid = plane.line_id(j, b)
            end = l1_vertex[b] if j == 1 else temp_line[lid]
            length = k if j == 1 else k + 1
            for p in line:
                path = [p] + [sub[p, lid, m] for m in range(1, length)] + [end]
                for u, v in zip(path, path[1:]):
                    join(u, v)

    for lid, lv in temp_line.items():
        nbrs = sorted(adj[lv])
        for i, u in enumerate(nbrs):
            for v in nbrs[i + 1:]:
                join(u, v)
        for u in nbrs:
            adj[u].discard(lv)
        adj[lv] = set()
    del adj[n_real:]

    graph = Graph.from_adjacency([sorted(a) for a in adj])
    parts = _partition(plane, k, l1_vertex, sub)
    return ConstructionGraph(graph, parts, n, k, labels)


def _partition(plane, k, l1_vertex, sub) -> list[Part]:
    n = plane.n
    parts = [Part(f"a{i}", tuple(sorted(plane.classes[0][i - 1]))) for i in range(1, n + 1)]
    for m in range(1, k + 1):
        if m == k:
            parts.append(Part("L1", tuple(sorted(l1_vertex.values()))))
        for i in range(1, n + 1):
            a_i = set(plane.classes[0][i - 1])
            for j in range(1, n + 1):
                if m == k and j == 1:
                    continue
                vs = [sub[p, plane.line_id(j, b), m]
                      for b, line in enumerate(plane.classes[j]) for p in line if p in a_i]
                parts.append(Part(f"V{i}.{j}.{m}", tuple(sorted(vs))))
    return parts


def build_construction(q: int, k: int) -> ConstructionGraph:
    """Plane of order q, then H, then G."""
    from .plane import plane_for_order
    return build_G(build_H(plane_for_order(q)), k)


def base_family_graph(G: ConstructionGraph | Graph) -> Graph:
    """G^4, whose k-th power is G^{4k}."""
    g = G.graph if isinstance(G, ConstructionGraph) else G
    return power(g, 4)


def expected_counts(n: int, k: int) -> dict[str, int]:
    """Closed-form sizes of G, counted straight from the construction."""
    return {
        "vertices": n**3 * k + n,
        "parts": k * n * n + 1,
        "edges": n * n * k + (n**3 - n * n) * (k + 1) - n * n * (n - 1)
        + n * (n - 1) * (n * (n - 1) // 2),
        "low_parts": (k - 1) * n * n + n,
    }
