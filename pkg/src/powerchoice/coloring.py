"""Exact chromatic number, list colouring and choosability on small graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import (BudgetExceeded, Graph, bits, clique_lower, degeneracy_order,
                    max_clique)

CHROMATIC_BUDGET = 30
DEFAULT_EFFORT = 20_000


# -- chromatic number ---------------------------------------------------------

def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR colouring (upper bound)."""
    n = g.n
    color = [-1] * n
    forbidden = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (forbidden[u].bit_count(), g.degree(u), -u))
        c = 0
        while (forbidden[v] >> c) & 1:
            c += 1
        color[v] = c
        for u in g.adj[v]:
            forbidden[u] |= 1 << c
    return color


def find_coloring(g: Graph, colors: int, precolored: Sequence[int] = ()) -> Optional[list[int]]:
    """A proper colouring with at most ``colors`` colours, or None.

    Backtracking that always branches on the uncoloured vertex of largest
    saturation degree.  ``precolored`` vertices (typically a clique) get
    colours 0, 1, ... in order, which removes colour-permutation symmetry.
    """
    n = g.n
    if n == 0:
        return []
    if colors <= 0:
        return None
    color = [-1] * n
    forbidden = [0] * n
    full = (1 << colors) - 1

    def assign(v, c):
        color[v] = c
        changed = []
        for u in g.adj[v]:
            if not (forbidden[u] >> c) & 1:
                forbidden[u] |= 1 << c
                changed.append(u)
        return changed

    def undo(v, c, changed):
        color[v] = -1
        for u in changed:
            forbidden[u] &= ~(1 << c)

    used = 0
    for c, v in enumerate(precolored):
        if c >= colors:
            return None
        if (forbidden[v] >> c) & 1:
            return None
        assign(v, c)
        used = c + 1

    def solve(done, used):
        if done == n:
            return True
        v = -1
        best = (-1, -1)
        for u in range(n):
            if color[u] < 0:
                key = (forbidden[u].bit_count(), g.degree(u))
                if key > best:
                    best, v = key, u
        avail = full & ~forbidden[v]
        # only one representative of the unused colours
        limit = min(used + 1, colors)
        avail &= (1 << limit) - 1
        for c in bits(avail):
            changed = assign(v, c)
            if all(color[u] >= 0 or forbidden[u] != full for u in changed):
                if solve(done + 1, max(used, c + 1)):
                    return True
            undo(v, c, changed)
        return False

    if solve(len(precolored), used):
        return color
    return None


def chromatic_exact(g: Graph, budget: int = CHROMATIC_BUDGET) -> int:
    """Chromatic number by clique lower bound, DSATUR upper bound, then backtracking."""
    if g.n > budget:
        raise BudgetExceeded(f"{g.n} vertices exceeds the chromatic budget {budget}")
    if g.n == 0:
        return 0
    clique = max_clique(g, limit=max(budget, 64))
    upper = max(dsatur_coloring(g)) + 1
    for c in range(len(clique), upper):
        if find_coloring(g, c, clique) is not None:
            return c
    return upper


def chromatic_coloring(g: Graph, budget: int = CHROMATIC_BUDGET) -> list[int]:
    chi = chromatic_exact(g, budget)
    if g.n == 0:
        return []
    coloring = find_coloring(g, chi)
    assert coloring is not None
    return coloring


# -- complete multipartite graphs ---------------------------------------------

def multipartite(r: int, s: int) -> Graph:
    """K_{r*s}: r parts of size s, part-major vertex order."""
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    n = r * s
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if u // s != v // s])


# -- list colouring -----------------------------------------------------------

def list_coloring(g: Graph, lists: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """A proper colouring choosing each vertex's colour from its list, or None."""
    n = g.n
    if len(lists) != n:
        raise ValueError(f"{len(lists)} lists for {n} vertices")
    color: list[Optional[int]] = [None] * n
    avail = [set(l) for l in lists]

    def solve(done):
        if done == n:
            return True
        v = min((u for u in range(n) if color[u] is None), key=lambda u: (len(avail[u]), u))
        for c in sorted(avail[v]):
            color[v] = c
            touched = [u for u in g.adj[v] if color[u] is None and c in avail[u]]
            for u in touched:
                avail[u].discard(c)
            if all(avail[u] for u in touched) and solve(done + 1):
                return True
            for u in touched:
                avail[u].add(c)
            color[v] = None
        return False

    return list(color) if solve(0) else None  # type: ignore[arg-type]


def count_list_colorings(g: Graph, lists: Sequence[Sequence[int]]) -> int:
    """Brute force over the product of the lists; the independent check for witnesses."""
    edges = g.edges()
    return sum(1 for pick in itertools.product(*lists)
               if all(pick[u] != pick[v] for u, v in edges))


def canonical_assignments(n: int, t: int, distinct: int):
    """List assignments of t-sets to n vertices using exactly ``distinct`` colours.

    Colours are numbered by first appearance (vertex order, then ascending
    within a list), so every assignment is equivalent under a colour
    permutation to at least one yielded assignment.  That is all the
    exhaustive search needs.
    """
    lists: list[tuple[int, ...]] = []

    def rec(v, used):
        if v == n:
            if used == distinct:
                yield list(lists)
            return
        remaining = n - v
        for fresh in range(t + 1):
            if used + fresh > distinct:
                break
            # the remaining vertices after this one can add at most t colours each
            if distinct - used - fresh > t * (remaining - 1):
                continue
            if t - fresh > used:
                continue
            new = tuple(range(used, used + fresh))
            for old in itertools.combinations(range(used), t - fresh):
                lists.append(old + new)
                yield from rec(v + 1, used + fresh)
                lists.pop()

    yield from rec(0, 0)


@dataclass
class ChoosabilityResult:
    t: int
    verdict: str  # "choosable", "not-choosable" or "unknown"
    witness: Optional[list[tuple[int, ...]]] = None
    certificate: dict = field(default_factory=dict)


def choosable(g: Graph, t: int, effort: int = DEFAULT_EFFORT) -> ChoosabilityResult:
    """Decide t-choosability by trying every assignment up to colour relabelling.

    Assignments are visited in increasing number of distinct colours, which
    finds the usual small bad assignments early.  ``effort`` caps the number
    of assignments tested; running out yields ``unknown``.
    """
    if t < 1:
        raise ValueError("list size must be >= 1")
    n = g.n
    tested = 0
    if n == 0:
        return ChoosabilityResult(t, "choosable", certificate={"assignments": 0})
    for distinct in range(t, t * n + 1):
        for lists in canonical_assignments(n, t, distinct):
            if tested >= effort:
                return ChoosabilityResult(t, "unknown", certificate={
                    "assignments": tested, "effort": effort, "stopped_at_colors": distinct})
            tested += 1
            if list_coloring(g, lists) is None:
                if count_list_colorings(g, lists) != 0:
                    raise AssertionError("list colouring search disagrees with brute force")
                return ChoosabilityResult(t, "not-choosable", witness=lists,
                                          certificate={"assignments": tested})
    return ChoosabilityResult(t, "choosable", certificate={
        "assignments": tested, "universe": t * n, "complete": True})


def verify_witness(g: Graph, lists: Sequence[Sequence[int]]) -> bool:
    """True when ``lists`` admits no proper colouring (checked by brute force)."""
    if len(lists) != g.n:
        raise ValueError(f"{len(lists)} lists for {g.n} vertices")
    return count_list_colorings(g, lists) == 0


@dataclass
class ChoiceBounds:
    lower: int
    upper: int
    exact: bool
    witness: Optional[list[tuple[int, ...]]] = None
    results: list[ChoosabilityResult] = field(default_factory=list)

    def as_tuple(self) -> tuple[int, int, bool]:
        return self.lower, self.upper, self.exact


def choice_number_bounds(g: Graph, effort: int = DEFAULT_EFFORT) -> ChoiceBounds:
    """Bounds on the choice number.

    The upper bound starts at 1 + degeneracy; the lower bound at the
    chromatic number (clique size beyond the exact budget).  Each list size
    t from the lower bound up is then tried: a verified bad assignment raises
    the lower bound to t + 1, a complete enumeration sets the upper bound to
    t, and ``unknown`` stops the search.
    """
    _, degen = degeneracy_order(g)
    upper = degen + 1 if g.n else 0
    if g.n <= CHROMATIC_BUDGET:
        lower = chromatic_exact(g)
    else:
        lower = len(clique_lower(g))
    bounds = ChoiceBounds(lower, upper, lower == upper)
    t = lower
    while t < bounds.upper:
        res = choosable(g, t, effort)
        bounds.results.append(res)
        if res.verdict == "not-choosable":
            bounds.lower = t + 1
            bounds.witness = res.witness
        elif res.verdict == "choosable":
            bounds.upper = t
            break
        else:
            break
        t += 1
    bounds.exact = bounds.lower == bounds.upper
    return bounds
