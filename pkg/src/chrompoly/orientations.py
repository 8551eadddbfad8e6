"""Acyclic orientations and compatible (orientation, coloring) pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .chromatic import DEFAULT_MAX_COLORINGS, DEFAULT_MAX_SUBSETS, chromatic_poly_dc
from .errors import BudgetExceeded, GraphError, TheoremViolation
from .graph import Graph

Arc = tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """One arc per edge of ``graph``, aligned with ``graph.edges``."""

    graph: Graph
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if len(self.arcs) != self.graph.m:
            raise GraphError(f"{len(self.arcs)} arcs for {self.graph.m} edges")
        for (u, v), (i, j) in zip(self.arcs, self.graph.edges):
            if {u, v} != {i, j}:
                raise GraphError(f"arc {(u, v)} does not orient edge {(i, j)}")

    @classmethod
    def from_arcs(cls, G: Graph, arcs) -> Orientation:
        """Build from arcs given in any order."""
        arcs = list(arcs)
        by_edge = {}
        for u, v in arcs:
            by_edge[(min(u, v), max(u, v))] = (u, v)
        if set(by_edge) != G.edge_set or len(by_edge) != len(arcs):
            raise GraphError(f"arcs {arcs} do not orient each edge of {G!r} exactly once")
        return cls(G, tuple(by_edge[e] for e in G.edges))

    @classmethod
    def from_bits(cls, G: Graph, bits: int) -> Orientation:
        """Bit k set reverses the k-th edge ``(i, j)`` to ``j -> i``."""
        return cls(G, tuple((j, i) if bits >> k & 1 else (i, j)
                            for k, (i, j) in enumerate(G.edges)))


def is_acyclic(O: Orientation) -> bool:
    """Kahn source elimination; acyclic iff every vertex gets removed."""
    n = O.graph.n
    indeg = [0] * (n + 1)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in O.arcs:
        out[u].append(v)
        indeg[v] += 1
    sources = [v for v in range(1, n + 1) if indeg[v] == 0]
    removed = 0
    while sources:
        u = sources.pop()
        removed += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                sources.append(v)
    return removed == n


def all_orientations(G: Graph) -> Iterator[Orientation]:
    for bits in range(1 << G.m):
        yield Orientation.from_bits(G, bits)


def _acyclic_arc_lists(G: Graph, budget: int) -> Iterator[tuple[Arc, ...]]:
    """Backtrack over edges; orient u -> v only if v cannot already reach u.

    Every acyclic partial orientation extends to an acyclic total one (orient
    the rest along a linear extension), so no branch is a dead end and the
    work is proportional to the number of acyclic orientations.
    """
    edges = G.edges
    m = len(edges)
    succ = [0] * (G.n + 1)
    arcs: list[Arc] = []
    visited = 0

    def reaches(src, dst):
        seen = 1 << src
        stack = [src]
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            nxt = succ[x] & ~seen
            seen |= nxt
            while nxt:
                low = nxt & -nxt
                stack.append(low.bit_length() - 1)
                nxt ^= low
        return False

    def rec(k):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded("acyclic orientation enumeration", budget)
        if k == m:
            yield tuple(arcs)
            return
        i, j = edges[k]
        for u, v in ((i, j), (j, i)):
            if reaches(v, u):
                continue
            succ[u] |= 1 << v
            arcs.append((u, v))
            yield from rec(k + 1)
            arcs.pop()
            succ[u] &= ~(1 << v)

    yield from rec(0)


def acyclic_orientations(G: Graph, collect: bool = False,
                         budget: int = DEFAULT_MAX_SUBSETS) -> tuple[int, list[Orientation] | None]:
    """Count the acyclic orientations of ``G``; optionally return them all."""
    count = 0
    found = [] if collect else None
    for arcs in _acyclic_arc_lists(G, budget):
        count += 1
        if collect:
            found.append(Orientation(G, arcs))
    return count, found


def _topological_order(n: int, arcs) -> list[int]:
    indeg = [0] * (n + 1)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in arcs:
        out[u].append(v)
        indeg[v] += 1
    order = []
    sources = sorted(v for v in range(1, n + 1) if indeg[v] == 0)
    while sources:
        u = sources.pop(0)
        order.append(u)
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                sources.append(v)
    return order


def compatible_colorings_count(O: Orientation, t: int, budget: int = DEFAULT_MAX_COLORINGS) -> int:
    """Number of colorings V -> [t] weakly increasing along every arc of ``O``.

    Vertices are colored in topological order, each starting at the largest
    color among its in-neighbours, so every completed branch is compatible.
    """
    n = O.graph.n
    order = _topological_order(n, O.arcs)
    if len(order) != n:
        raise GraphError("orientation has a directed cycle")
    preds: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in O.arcs:
        preds[v].append(u)
    color = [1] * (n + 1)
    visited = 0

    def place(k):
        nonlocal visited
        v = order[k]
        low = max((color[u] for u in preds[v]), default=1)
        if k == n - 1:
            return max(0, t - low + 1)
        visited += 1
        if visited > budget:
            raise BudgetExceeded("compatible coloring count", budget)
        total = 0
        for c in range(low, t + 1):
            color[v] = c
            total += place(k + 1)
        return total

    return place(0)


def compatible_pairs_count(G: Graph, t: int, budget: int = DEFAULT_MAX_COLORINGS) -> int:
    """#{(O, k): O acyclic, k: V -> [t], u->v in O implies k(u) <= k(v)}."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    total = 0
    for arcs in _acyclic_arc_lists(G, budget):
        total += compatible_colorings_count(Orientation(G, arcs), t, budget)
    return total


def compatible_pairs_bruteforce(G: Graph, t: int) -> int:
    """Same count over all 2^m orientations and all t^n colorings; tiny graphs only."""
    total = 0
    for O in all_orientations(G):
        if not is_acyclic(O):
            continue
        for kappa in product(range(1, t + 1), repeat=G.n):
            if all(kappa[u - 1] <= kappa[v - 1] for u, v in O.arcs):
                total += 1
    return total


@dataclass
class StanleyReport:
    graph: Graph
    acyclic: int
    rows: list[tuple[int, int, int]] = field(default_factory=list)  # (t, P(-t), pairs)

    @property
    def passed(self) -> bool:
        sign = (-1) ** self.graph.n
        return all(p == sign * pairs for _, p, pairs in self.rows)


def verify_stanley(G: Graph, t_max: int, budget: int = DEFAULT_MAX_COLORINGS) -> StanleyReport:
    """Check P(G; -t) = (-1)^n #compatible pairs for t = 1..t_max."""
    P = chromatic_poly_dc(G)
    sign = (-1) ** G.n
    acyclic, _ = acyclic_orientations(G, budget=budget)
    report = StanleyReport(G, acyclic)
    for t in range(1, t_max + 1):
        lhs = P.eval(-t)
        pairs = compatible_pairs_count(G, t, budget)
        report.rows.append((t, lhs, pairs))
        if lhs != sign * pairs:
            raise TheoremViolation("compatible pairs", G, lhs, sign * pairs, f"t={t}")
        if t == 1 and pairs != acyclic:
            raise TheoremViolation("acyclic orientations", G, pairs, acyclic, "t=1")
    return report
