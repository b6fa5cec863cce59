"""Text formats.  Vertex ids are 1-based in files and 0-based in memory.

graph   ``p edge <nV> <nE>`` then ``e <u> <v>`` (u < v, sorted); ``c`` lines are comments
parts   ``part <tag> : <v1> <v2> ...``
labels  ``v <id> point|line|sub <p> <l> <level>`` with ``-`` for unused fields
lists   ``L <v> : <c1> <c2> ...``
plane   ``line <class> <index-in-class> : <point-indices...>`` (0-based)
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .construction import ConstructionGraph, Part, VertexLabel, parse_tag
from .graph import Graph
from .plane import AffinePlane


class FormatError(ValueError):
    pass


def _lines(text: str):
    for no, line in enumerate(text.splitlines(), 1):
        toks = line.split()
        if toks and toks[0] != "c":
            yield no, toks


def _vertex(tok: str, n: int, no: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise FormatError(f"line {no}: bad vertex id {tok!r}") from None
    if not 1 <= v <= n:
        raise FormatError(f"line {no}: vertex {v} out of range 1..{n}")
    return v - 1


# -- graph --------------------------------------------------------------------

def format_graph(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    declared = 0
    edges = []
    for no, toks in _lines(text):
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "edge":
                raise FormatError(f"line {no}: expected 'p edge <nV> <nE>'")
            if n is not None:
                raise FormatError(f"line {no}: duplicate header")
            n, declared = int(toks[2]), int(toks[3])
        elif toks[0] == "e":
            if n is None:
                raise FormatError(f"line {no}: edge before header")
            if len(toks) != 3:
                raise FormatError(f"line {no}: expected 'e <u> <v>'")
            u, v = _vertex(toks[1], n, no), _vertex(toks[2], n, no)
            if u == v:
                raise FormatError(f"line {no}: loop at vertex {u + 1}")
            edges.append((u, v))
        else:
            raise FormatError(f"line {no}: unknown record {toks[0]!r}")
    if n is None:
        raise FormatError("missing 'p edge' header")
    g = Graph(n, edges)
    if g.m != declared or len(edges) != declared:
        raise FormatError(f"header declares {declared} edges, file has {len(edges)} "
                          f"({g.m} distinct)")
    return g


# -- partition ----------------------------------------------------------------

def format_parts(parts: Iterable[Part]) -> str:
    return "".join(f"part {p.tag} : {' '.join(str(v + 1) for v in p.vertices)}\n"
                   for p in parts)


def parse_parts(text: str, n: int) -> list[Part]:
    parts = []
    for no, toks in _lines(text):
        if toks[0] != "part" or len(toks) < 3 or toks[2] != ":":
            raise FormatError(f"line {no}: expected 'part <tag> : <vertices...>'")
        try:
            parse_tag(toks[1])
        except ValueError as exc:
            raise FormatError(f"line {no}: {exc}") from None
        parts.append(Part(toks[1], tuple(_vertex(t, n, no) for t in toks[3:])))
    return parts


# -- labels -------------------------------------------------------------------

def _field(x) -> str:
    return "-" if x is None else str(x)


def format_labels(labels: Sequence[VertexLabel]) -> str:
    return "".join(f"v {i + 1} {lab.kind} {_field(lab.point)} {_field(lab.line)} {lab.level}\n"
                   for i, lab in enumerate(labels))


def parse_labels(text: str) -> list[VertexLabel]:
    out = []
    for no, toks in _lines(text):
        if toks[0] != "v" or len(toks) != 6 or toks[2] not in ("point", "line", "sub"):
            raise FormatError(f"line {no}: expected 'v <id> point|line|sub <p> <l> <level>'")
        if int(toks[1]) != len(out) + 1:
            raise FormatError(f"line {no}: labels must be listed in vertex order")
        p = None if toks[3] == "-" else int(toks[3])
        l = None if toks[4] == "-" else int(toks[4])
        out.append(VertexLabel(toks[2], p, l, int(toks[5])))
    return out


# -- list assignments ---------------------------------------------------------

def format_lists(lists: Sequence[Sequence[int]]) -> str:
    return "".join(f"L {v + 1} : {' '.join(str(c) for c in sorted(l))}\n"
                   for v, l in enumerate(lists))


def parse_lists(text: str) -> list[tuple[int, ...]]:
    found = {}
    for no, toks in _lines(text):
        if toks[0] != "L" or len(toks) < 3 or toks[2] != ":":
            raise FormatError(f"line {no}: expected 'L <v> : <colours...>'")
        v = int(toks[1]) - 1
        if v < 0 or v in found:
            raise FormatError(f"line {no}: bad or repeated vertex {toks[1]}")
        found[v] = tuple(sorted(int(c) for c in toks[3:]))
    if sorted(found) != list(range(len(found))):
        raise FormatError("list file must cover vertices 1..n")
    return [found[v] for v in range(len(found))]


# -- plane --------------------------------------------------------------------

def format_plane(plane: AffinePlane) -> str:
    return "".join(f"line {c} {i} : {' '.join(map(str, line))}\n"
                   for c, i, line in plane.lines())


def parse_plane(text: str) -> AffinePlane:
    classes: dict[int, dict[int, tuple[int, ...]]] = {}
    for no, toks in _lines(text):
        if toks[0] != "line" or len(toks) < 4 or toks[3] != ":":
            raise FormatError(f"line {no}: expected 'line <class> <index> : <points...>'")
        classes.setdefault(int(toks[1]), {})[int(toks[2])] = tuple(int(t) for t in toks[4:])
    if not classes:
        raise FormatError("empty plane file")
    n = len(classes[0])
    cls = tuple(tuple(classes[c][i] for i in sorted(classes[c])) for c in sorted(classes))
    return AffinePlane(None, n, cls)


# -- construction bundles -----------------------------------------------------

def write_construction(G: ConstructionGraph, prefix: str | Path) -> list[Path]:
    prefix = str(prefix)
    paths = [Path(prefix + ".graph"), Path(prefix + ".parts"), Path(prefix + ".labels")]
    paths[0].write_text(format_graph(G.graph))
    paths[1].write_text(format_parts(G.parts))
    if G.labels is not None:
        paths[2].write_text(format_labels(G.labels))
    else:
        paths.pop()
    return paths


def infer_k(parts: Sequence[Part]) -> int:
    """Largest level named by a ``V<i>.<j>.<m>`` tag."""
    levels = [parse_tag(p.tag)[1][2] for p in parts if p.tag.startswith("V")]
    if not levels:
        raise FormatError("cannot infer k: no V<i>.<j>.<m> parts")
    return max(levels)


def read_construction(graph_path, parts_path, labels_path=None, k: int | None = None
                      ) -> ConstructionGraph:
    g = parse_graph(Path(graph_path).read_text())
    parts = parse_parts(Path(parts_path).read_text(), g.n)
    labels = parse_labels(Path(labels_path).read_text()) if labels_path else None
    if labels is not None and len(labels) != g.n:
        raise FormatError(f"{len(labels)} labels for {g.n} vertices")
    k = k if k is not None else infer_k(parts)
    n = len(parts[0].vertices) if parts else 0
    return ConstructionGraph(g, parts, n, k, labels)
