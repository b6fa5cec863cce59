"""The affine plane AG(2, q) and an exhaustive axiom checker."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .field import FiniteField, prime_power
from .report import VerificationReport, timed


@dataclass(frozen=True)
class AffinePlane:
    """Points are ``(x, y)`` with index ``x * q + y``.

    ``classes[0]`` is the vertical class (x = c); ``classes[1 + m]`` holds the
    lines of slope ``m`` (by canonical index of m), so ``classes[1]`` is the
    horizontal class.  Within a class, line ``b`` is indexed by its
    intercept.  Each line is a sorted tuple of point indices.
    """

    field: FiniteField | None
    n: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    points: tuple[tuple[int, int], ...] = field(repr=False, default=())

    @property
    def num_points(self) -> int:
        return self.n * self.n

    def lines(self):
        """``(class, index_in_class, points)`` for every line."""
        for c, cls in enumerate(self.classes):
            for i, line in enumerate(cls):
                yield c, i, line

    def line_id(self, cls: int, idx: int) -> int:
        """Global 0-based line index, class-major."""
        return cls * self.n + idx

    def line_points(self, line_id: int) -> tuple[int, ...]:
        return self.classes[line_id // self.n][line_id % self.n]

    def line_through(self, cls: int, point: int) -> int:
        """Index within ``cls`` of the line containing ``point``."""
        for i, line in enumerate(self.classes[cls]):
            if point in line:
                return i
        raise ValueError(f"point {point} lies on no line of class {cls}")


def plane_build(F: FiniteField) -> AffinePlane:
    q = F.q
    els = F.elements()
    pid = {(x.index, y.index): x.index * q + y.index for x in els for y in els}
    vertical = tuple(tuple(sorted(pid[c.index, y.index] for y in els)) for c in els)
    classes = [vertical]
    for m in els:
        cls = []
        for b in els:
            cls.append(tuple(sorted(pid[x.index, (m * x + b).index] for x in els)))
        classes.append(tuple(cls))
    points = tuple((i // q, i % q) for i in range(q * q))
    return AffinePlane(F, q, tuple(classes), points)


def plane_for_order(q: int) -> AffinePlane:
    return plane_build(FiniteField.of_order(q))


AXIOMS = (
    "line_size",
    "unique_line_per_pair",
    "parallel_disjoint",
    "crossing_meet_once",
    "prime_power_order",
)


def plane_check(plane: AffinePlane, max_witnesses: int = 10) -> list[VerificationReport]:
    """Exhaustively check the five plane properties; one report per property."""
    n = plane.n
    npts = n * n
    params = {"q": n}
    reports = []

    with timed() as t:
        bad = [{"class": c, "index": i, "size": len(line)}
               for c, i, line in plane.lines() if len(line) != n]
    reports.append(VerificationReport.make("plane.line_size", params, bad, t.ms, max_witnesses))

    with timed() as t:
        count: dict[tuple[int, int], int] = {}
        for _, _, line in plane.lines():
            for pair in itertools.combinations(sorted(line), 2):
                count[pair] = count.get(pair, 0) + 1
        bad = []
        for pair in itertools.combinations(range(npts), 2):
            c = count.get(pair, 0)
            if c != 1:
                bad.append({"points": list(pair), "lines": c})
    reports.append(VerificationReport.make("plane.unique_line_per_pair", params, bad, t.ms,
                                           max_witnesses))

    sets = [(c, i, frozenset(line)) for c, i, line in plane.lines()]
    with timed() as t:
        disjoint_bad, meet_bad = [], []
        for (c1, i1, s1), (c2, i2, s2) in itertools.combinations(sets, 2):
            common = len(s1 & s2)
            if c1 == c2 and common:
                disjoint_bad.append({"lines": [[c1, i1], [c2, i2]], "common": common})
            elif c1 != c2 and common != 1:
                meet_bad.append({"lines": [[c1, i1], [c2, i2]], "common": common})
    reports.append(VerificationReport.make("plane.parallel_disjoint", params, disjoint_bad,
                                           t.ms, max_witnesses))
    reports.append(VerificationReport.make("plane.crossing_meet_once", params, meet_bad,
                                           t.ms, max_witnesses))

    with timed() as t:
        bad = []
        if prime_power(n) is None:
            bad.append({"order": n, "reason": "not a prime power"})
        if len(plane.classes) != n + 1:
            bad.append({"classes": len(plane.classes), "expected": n + 1})
        for c, cls in enumerate(plane.classes):
            if len(cls) != n:
                bad.append({"class": c, "lines": len(cls), "expected": n})
            covered = sorted(p for line in cls for p in line)
            if covered != list(range(npts)):
                bad.append({"class": c, "reason": "lines do not partition the points"})
    reports.append(VerificationReport.make("plane.prime_power_order", params, bad, t.ms,
                                           max_witnesses))
    return reports


def latin_square(plane: AffinePlane, rows: int, cols: int, symbols: int) -> list[list[int]]:
    """Latin square from three distinct classes.

    Entry (r, c) is the index, within class ``symbols``, of the line through
    the common point of line r of class ``rows`` and line c of class ``cols``.
    """
    owner = {p: i for i, line in enumerate(plane.classes[symbols]) for p in line}
    out = []
    for a in plane.classes[rows]:
        sa = set(a)
        out.append([owner[next(p for p in b if p in sa)] for b in plane.classes[cols]])
    return out
