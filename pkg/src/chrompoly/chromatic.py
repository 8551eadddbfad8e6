"""Chromatic polynomials by three independent routes, plus broken circuits.

* ``chromatic_poly_interp``: count proper colorings at t = 0..n by brute
  force and interpolate.
* ``chromatic_poly_dc``: deletion-contraction, memoized on isomorphism class.
* ``chromatic_poly_nbc``: signed count of edge sets containing no broken
  circuit.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded, GraphError
from .graph import (Edge, Graph, canonical_key, components_of, contract_edge,
                    delete_edge, normalize_edge, simple_cycles)
from .polynomial import IntPoly, interpolate

DEFAULT_MAX_COLORINGS = 10**7
DEFAULT_MAX_SUBSETS = 2**24

EdgeOrder = tuple[Edge, ...]


# ----------------------------------------------------------------------------
# Brute force oracle


def count_proper_colorings(G: Graph, t: int, budget: int = DEFAULT_MAX_COLORINGS) -> int:
    """Number of proper colorings V -> [t], by exhaustive search.

    Vertices are colored one at a time in increasing label order; a branch
    is abandoned as soon as an edge to an already-colored neighbour is
    monochromatic.  ``budget`` bounds the number of internal search nodes.
    """
    if t < 0:
        raise ValueError(f"number of colors must be nonnegative, got {t}")
    if t == 0:
        return 0
    n = G.n
    earlier = [sorted(u for u in G.adj[v] if u < v) for v in range(n + 1)]
    color = [0] * (n + 1)
    visited = 0

    def place(v):
        nonlocal visited
        if v == n:
            # last vertex: every color unused by its earlier neighbours is a leaf
            return t - len({color[u] for u in earlier[v]})
        visited += 1
        if visited > budget:
            raise BudgetExceeded("proper coloring count", budget)
        total = 0
        for c in range(1, t + 1):
            if all(color[u] != c for u in earlier[v]):
                color[v] = c
                total += place(v + 1)
        return total

    return place(1)


def chromatic_poly_interp(G: Graph, budget: int = DEFAULT_MAX_COLORINGS) -> IntPoly:
    return interpolate([(t, count_proper_colorings(G, t, budget)) for t in range(G.n + 1)])


# ----------------------------------------------------------------------------
# Deletion-contraction

_DC_CACHE: dict[tuple, IntPoly] = {}
_DC_CACHE_LIMIT = 200_000
_DC_LOCK = threading.Lock()


def clear_cache() -> None:
    with _DC_LOCK:
        _DC_CACHE.clear()


def chromatic_poly_dc(G: Graph) -> IntPoly:
    """P(G) = P(G - e) - P(G / e), pivoting on the lexicographically first edge."""
    if not G.edges:
        return IntPoly.monomial(G.n)
    key = canonical_key(G)
    hit = _DC_CACHE.get(key)
    if hit is not None:
        return hit
    e = G.edges[0]
    p = chromatic_poly_dc(delete_edge(G, e)) - chromatic_poly_dc(contract_edge(G, e))
    with _DC_LOCK:
        if len(_DC_CACHE) >= _DC_CACHE_LIMIT:
            _DC_CACHE.clear()
        _DC_CACHE[key] = p
    return p


# ----------------------------------------------------------------------------
# Broken circuits and NBC sets


def lex_order(G: Graph) -> EdgeOrder:
    return G.edges


def random_order(G: Graph, rng: random.Random) -> EdgeOrder:
    order = list(G.edges)
    rng.shuffle(order)
    return tuple(order)


def check_order(G: Graph, order: Sequence[Edge] | None) -> EdgeOrder:
    if order is None:
        return G.edges
    order = tuple(normalize_edge(e) for e in order)
    if len(order) != G.m or set(order) != G.edge_set:
        raise GraphError(f"edge order {order} is not a permutation of the edges of {G!r}")
    return order


def broken_circuits(G: Graph, order: Sequence[Edge] | None = None) -> frozenset[frozenset[Edge]]:
    order = check_order(G, order)
    rank = {e: k for k, e in enumerate(order)}
    return frozenset(c - {min(c, key=rank.__getitem__)} for c in simple_cycles(G))


@dataclass(frozen=True)
class NbcReport:
    order: EdgeOrder
    broken_circuits: frozenset[frozenset[Edge]]
    nbc_sets_by_k: tuple[tuple[frozenset[Edge], ...], ...]

    @property
    def nbc_counts(self) -> tuple[int, ...]:
        return tuple(len(sets) for sets in self.nbc_sets_by_k)

    def all_sets(self):
        for sets in self.nbc_sets_by_k:
            yield from sets


def nbc_report(G: Graph, order: Sequence[Edge] | None = None,
               budget: int = DEFAULT_MAX_SUBSETS) -> NbcReport:
    """All edge sets containing no broken circuit, grouped by size.

    Subsets are grown in edge order; a branch is cut as soon as the newest
    edge completes a broken circuit, since every superset then contains it
    too.  Each broken circuit is indexed by its last edge in the order so
    that only circuits that could have just been completed are tested.
    """
    order = check_order(G, order)
    bcs = broken_circuits(G, order)
    bit = {e: 1 << k for k, e in enumerate(order)}
    masks = sorted((sum(bit[e] for e in b) for b in bcs), key=lambda mk: (mk.bit_count(), mk))
    # a set avoids all broken circuits iff it avoids the inclusion-minimal ones
    minimal: list[int] = []
    for mk in masks:
        if not any(b & mk == b for b in minimal):
            minimal.append(mk)
    closing: list[list[int]] = [[] for _ in order]
    for mk in minimal:
        closing[mk.bit_length() - 1].append(mk)

    by_k: list[list[frozenset[Edge]]] = [[] for _ in range(G.n + 1)]
    visited = 0
    chosen: list[Edge] = []

    def grow(start, mask):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded("NBC enumeration", budget)
        by_k[len(chosen)].append(frozenset(chosen))
        for k in range(start, len(order)):
            new = mask | (1 << k)
            if any(b & new == b for b in closing[k]):
                continue
            chosen.append(order[k])
            grow(k + 1, new)
            chosen.pop()

    grow(0, 0)
    return NbcReport(order, bcs, tuple(tuple(sets) for sets in by_k))


def poly_from_counts(n: int, counts: Sequence[int]) -> IntPoly:
    """sum_k (-1)^k counts[k] t^(n-k)."""
    coeffs = [0] * (n + 1)
    for k, c in enumerate(counts):
        if c:
            coeffs[n - k] = (-1) ** k * c
    return IntPoly(coeffs)


def chromatic_poly_nbc(G: Graph, order: Sequence[Edge] | None = None,
                       budget: int = DEFAULT_MAX_SUBSETS) -> IntPoly:
    return poly_from_counts(G.n, nbc_report(G, order, budget).nbc_counts)


def chromatic_number(G: Graph) -> int:
    p = chromatic_poly_dc(G)
    t = 1
    while p.eval(t) <= 0:
        t += 1
    return t


def nbc_forest_partition_ok(G: Graph, A: frozenset[Edge]) -> bool:
    """An NBC set with k edges spans exactly n - k components."""
    return len(components_of(G.n, A)) == G.n - len(A)
