"""Increasing spanning forests and the natural perfect elimination order.

Everything here depends on the vertex labels, unlike the chromatic
polynomial itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .chromatic import DEFAULT_MAX_SUBSETS, chromatic_poly_dc, nbc_report, poly_from_counts
from .errors import BudgetExceeded, TheoremViolation
from .graph import Edge, Graph
from .polynomial import IntPoly, from_roots


@dataclass(frozen=True)
class LevelSets:
    """``sets[j - 1]`` holds the edges whose larger endpoint is ``j``."""

    sets: tuple[tuple[Edge, ...], ...]

    def __getitem__(self, j: int) -> tuple[Edge, ...]:
        return self.sets[j - 1]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def smaller_neighbours(self, j: int) -> tuple[int, ...]:
        return tuple(i for i, _ in self[j])


def level_sets(G: Graph) -> LevelSets:
    sets: list[list[Edge]] = [[] for _ in range(G.n)]
    for i, j in G.edges:
        sets[j - 1].append((i, j))
    return LevelSets(tuple(tuple(s) for s in sets))


def isf_poly(G: Graph) -> IntPoly:
    return from_roots(level_sets(G).sizes)


def is_increasing_forest(n: int, F: Iterable[Edge]) -> bool:
    """Labels increase along every path leaving each tree's minimum vertex.

    Walks every component from its least vertex; in a tree this holds iff
    each vertex is larger than its parent.  Returns False if ``F`` has a
    cycle.
    """
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for a, b in F:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * (n + 1)
    for root in range(1, n + 1):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, 0)]
        while stack:
            v, parent = stack.pop()
            for w in adj[v]:
                if w == parent:
                    continue
                if seen[w] or w < v:
                    return False
                seen[w] = True
                stack.append((w, v))
    return True


def hits_each_level_once(levels: LevelSets, F: Iterable[Edge]) -> bool:
    """At most one edge of ``F`` in every level set."""
    used = set()
    for _, j in F:
        if j in used:
            return False
        used.add(j)
    return True


def spanning_forests(G: Graph, budget: int = DEFAULT_MAX_SUBSETS):
    """Every acyclic edge subset of ``G`` as a tuple in edge order."""
    edges = G.edges
    parent = list(range(G.n + 1))
    chosen: list[Edge] = []
    visited = 0

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def grow(start):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded("spanning forest enumeration", budget)
        yield tuple(chosen)
        for k in range(start, len(edges)):
            a, b = edges[k]
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            parent[ra] = rb
            chosen.append(edges[k])
            yield from grow(k + 1)
            chosen.pop()
            parent[ra] = ra

    yield from grow(0)


def enumerate_isf(G: Graph, budget: int = DEFAULT_MAX_SUBSETS) -> tuple[tuple[tuple[Edge, ...], ...], ...]:
    """Increasing spanning forests grouped by edge count (index k = #edges)."""
    by_k: list[list[tuple[Edge, ...]]] = [[] for _ in range(G.n + 1)]
    for F in spanning_forests(G, budget):
        if is_increasing_forest(G.n, F):
            by_k[len(F)].append(F)
    return tuple(tuple(fs) for fs in by_k)


def level_choice_forests(G: Graph) -> tuple[tuple[tuple[Edge, ...], ...], ...]:
    """Edge sets picking at most one edge from each level set, by size."""
    levels = level_sets(G)
    by_k: list[list[tuple[Edge, ...]]] = [[()]] + [[] for _ in range(G.n)]
    for options in levels.sets:
        if not options:
            continue
        for k in range(G.n - 1, -1, -1):
            by_k[k + 1].extend(F + (e,) for F in by_k[k] for e in options)
    return tuple(tuple(tuple(sorted(F)) for F in fs) for fs in by_k)


class PeoResult(NamedTuple):
    ok: bool
    vertex: int | None = None
    missing: Edge | None = None

    def __bool__(self):
        return self.ok


def is_natural_peo(G: Graph) -> PeoResult:
    """Whether 1, 2, ..., n is a perfect elimination ordering.

    On failure reports the first ``j`` whose smaller neighbours are not
    pairwise adjacent, with one missing edge among them.
    """
    for j in G.vertices:
        smaller = sorted(i for i in G.adj[j] if i < j)
        for a in range(len(smaller)):
            for b in range(a + 1, len(smaller)):
                e = (smaller[a], smaller[b])
                if e not in G.edge_set:
                    return PeoResult(False, j, e)
    return PeoResult(True)


@dataclass
class IsfReport:
    graph: Graph
    isf_counts: tuple[int, ...]
    nbc_counts: tuple[int, ...]
    isf_poly: IntPoly
    chromatic_poly: IntPoly
    peo: PeoResult
    forests_checked: int
    sets_equal: bool

    @property
    def polys_equal(self) -> bool:
        return self.isf_poly == self.chromatic_poly


def verify_isf_theorems(G: Graph, budget: int = DEFAULT_MAX_SUBSETS) -> IsfReport:
    """Cross-check increasing forests against level sets, P(G) and NBC sets.

    Raises ``TheoremViolation`` if the path definition and the level-set
    criterion disagree on any spanning forest, if the forest counts do not
    match the product formula, if P = ISF does not coincide with the natural
    order being a PEO, or if an increasing forest is not NBC under the
    lexicographic edge order (with equality at every size exactly under PEO).
    """
    levels = level_sets(G)
    by_path: list[set] = [set() for _ in range(G.n + 1)]
    checked = 0
    for F in spanning_forests(G, budget):
        checked += 1
        a = is_increasing_forest(G.n, F)
        b = hits_each_level_once(levels, F)
        if a != b:
            raise TheoremViolation("increasing forest characterization", G, a, b, f"F={F}")
        if a:
            by_path[len(F)].add(frozenset(F))
    by_levels = [set(map(frozenset, fs)) for fs in level_choice_forests(G)]
    if by_path != by_levels:
        raise TheoremViolation("level-set enumeration", G, [len(s) for s in by_path],
                               [len(s) for s in by_levels])

    counts = tuple(len(s) for s in by_path)
    poly = isf_poly(G)
    from_counts = poly_from_counts(G.n, counts)
    if from_counts != poly:
        raise TheoremViolation("ISF product formula", G, from_counts, poly)

    P = chromatic_poly_dc(G)
    peo = is_natural_peo(G)
    if (P == poly) != peo.ok:
        raise TheoremViolation("P = ISF iff natural PEO", G, P == poly, peo.ok, str(peo))

    nbc = nbc_report(G, None, budget)
    nbc_sets = [set(sets) for sets in nbc.nbc_sets_by_k]
    for k, isf_k in enumerate(by_path):
        extra = isf_k - nbc_sets[k]
        if extra:
            raise TheoremViolation("ISF_k subset of NBC_k", G, sorted(map(sorted, extra))[0], "NBC")
    equal = by_path == nbc_sets
    if equal != peo.ok:
        raise TheoremViolation("ISF = NBC iff natural PEO", G, equal, peo.ok)
    return IsfReport(G, counts, nbc.nbc_counts, poly, P, peo, checked, equal)
