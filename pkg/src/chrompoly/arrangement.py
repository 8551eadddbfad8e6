"""The graphical arrangement of a graph, through its bond lattice.

A flat of the arrangement {x_i = x_j : ij in E} is the subspace on which
coordinates agree inside each block of a partition of 1..n whose blocks
induce connected subgraphs.  Its dimension is the number of blocks.  Flats
are ordered by reverse inclusion of subspaces, i.e. by refinement: the
all-singletons partition (the whole space) is the minimum.

Regions are not enumerated geometrically.  An orientation is acyclic
exactly when its half-spaces x_i < x_j meet in a region, so the region
count is the acyclic orientation count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .chromatic import DEFAULT_MAX_SUBSETS, chromatic_poly_dc
from .errors import BudgetExceeded, TheoremViolation
from .graph import Graph
from .orientations import acyclic_orientations
from .polynomial import IntPoly


@dataclass(frozen=True, order=True)
class Flat:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_masks(cls, masks) -> Flat:
        blocks = []
        for mk in masks:
            block = []
            v = 0
            while mk:
                if mk & 1:
                    block.append(v)
                mk >>= 1
                v += 1
            blocks.append(tuple(block))
        return cls(tuple(sorted(blocks)))

    @property
    def dim(self) -> int:
        return len(self.blocks)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in b) for b in self.blocks)

    @cached_property
    def block_of(self) -> dict[int, int]:
        """Vertex label -> mask of the block containing it."""
        return {v: mk for b, mk in zip(self.blocks, self.masks) for v in b}

    def refines(self, other: Flat) -> bool:
        """True when every block of ``self`` lies inside a block of ``other``."""
        if self.dim < other.dim:
            return False
        where = other.block_of
        return all(where[b[0]] & mk == mk for b, mk in zip(self.blocks, self.masks))

    def __str__(self):
        wide = any(v >= 10 for b in self.blocks for v in b)
        sep = "," if wide else ""
        return "|".join(sep.join(str(v) for v in b) for b in self.blocks)


def _block_key(masks) -> tuple[int, ...]:
    return tuple(sorted(masks))


@dataclass
class BondLattice:
    graph: Graph
    flats: list[Flat]
    _mobius: dict[Flat, int] | None = field(default=None, repr=False)

    @property
    def minimum(self) -> Flat:
        return self.flats[0]

    @property
    def mobius(self) -> dict[Flat, int]:
        if self._mobius is None:
            self._mobius = mobius_function(self)
        return self._mobius

    def below(self, S: Flat) -> list[Flat]:
        """Flats strictly below ``S`` (strict refinements of it)."""
        return [T for T in self.flats if T != S and T.refines(S)]

    def __len__(self):
        return len(self.flats)


def bond_lattice(G: Graph, budget: int = DEFAULT_MAX_SUBSETS) -> BondLattice:
    """All partitions of 1..n into G-connected blocks.

    Built by closure from the singleton partition: repeatedly merge two
    blocks joined by an edge.  Flats are listed by decreasing dimension, so
    every flat comes after all flats below it.
    """
    adj = G.adj_mask
    start = _block_key(1 << v for v in G.vertices)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for key in frontier:
            for a in range(len(key)):
                nbrs = 0
                v, mk = 0, key[a]
                while mk:
                    if mk & 1:
                        nbrs |= adj[v]
                    mk >>= 1
                    v += 1
                for b in range(a + 1, len(key)):
                    if nbrs & key[b]:
                        merged = _block_key(key[:a] + key[a + 1:b] + key[b + 1:] + (key[a] | key[b],))
                        if merged not in seen:
                            seen.add(merged)
                            nxt.append(merged)
                            if len(seen) > budget:
                                raise BudgetExceeded("bond lattice", budget)
        frontier = nxt
    flats = sorted((Flat.from_masks(key) for key in seen), key=lambda F: (-F.dim, F))
    return BondLattice(G, flats)


def mobius_function(L: BondLattice) -> dict[Flat, int]:
    """mu(min) = 1 and mu(S) = -sum of mu(T) over T strictly below S."""
    mu: dict[Flat, int] = {}
    for S in L.flats:
        if S == L.minimum:
            mu[S] = 1
        else:
            mu[S] = -sum(mu[T] for T in L.below(S))
    return mu


def characteristic_poly(L: BondLattice) -> IntPoly:
    coeffs = [0] * (L.graph.n + 1)
    for S, m in L.mobius.items():
        coeffs[S.dim] += m
    return IntPoly(coeffs)


@dataclass
class ZaslavskyReport:
    graph: Graph
    flats: int
    char_poly: IntPoly
    value_at_minus_one: int
    regions: int

    @property
    def passed(self) -> bool:
        return self.value_at_minus_one == (-1) ** self.graph.n * self.regions


def verify_zaslavsky(G: Graph, budget: int = DEFAULT_MAX_SUBSETS) -> ZaslavskyReport:
    """Check chi(L; -1) = (-1)^n #regions and chi(L) = P(G)."""
    L = bond_lattice(G, budget)
    chi = characteristic_poly(L)
    regions, _ = acyclic_orientations(G, budget=budget)
    report = ZaslavskyReport(G, len(L), chi, chi.eval(-1), regions)
    if not report.passed:
        raise TheoremViolation("region count", G, report.value_at_minus_one,
                               (-1) ** G.n * regions)
    P = chromatic_poly_dc(G)
    if chi != P:
        raise TheoremViolation("characteristic polynomial", G, chi, P)
    return report
