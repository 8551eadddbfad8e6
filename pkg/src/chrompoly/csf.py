"""Chromatic symmetric functions in the power-sum basis.

X(G) is stored as a finite map from integer partitions to integer
coefficients of p_lambda.  The infinite-variable monomial expansion is
never materialized; it only appears through ``csf_eval_monomial_oracle``,
which evaluates X(G) at x_1 = ... = x_t = 1 and all other x_i = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .chromatic import DEFAULT_MAX_COLORINGS, DEFAULT_MAX_SUBSETS, chromatic_poly_dc, nbc_report
from .errors import BudgetExceeded, PolynomialError
from .graph import Edge, Graph, Partition, build_graph, forest_code, partition_of
from .polynomial import IntPoly


@dataclass(frozen=True)
class PSymFunc:
    n: int
    terms: tuple[tuple[Partition, int], ...]

    def __init__(self, n: int, terms: Mapping[Sequence[int], int] | Sequence = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Partition, int] = {}
        for lam, c in items:
            lam = tuple(sorted((int(x) for x in lam), reverse=True))
            if any(x < 1 for x in lam) or sum(lam) != n:
                raise PolynomialError(f"{lam} is not a partition of {n}")
            collected[lam] = collected.get(lam, 0) + int(c)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", tuple(sorted((lam, c) for lam, c in collected.items() if c)))

    def coefficient(self, lam: Sequence[int]) -> int:
        lam = tuple(sorted(lam, reverse=True))
        return dict(self.terms).get(lam, 0)

    def __add__(self, other: PSymFunc) -> PSymFunc:
        if self.n != other.n:
            raise PolynomialError("adding symmetric functions of different degree")
        return PSymFunc(self.n, list(self.terms) + list(other.terms))

    def __neg__(self):
        return PSymFunc(self.n, [(lam, -c) for lam, c in self.terms])

    def __sub__(self, other: PSymFunc) -> PSymFunc:
        return self + (-other)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for lam, c in self.terms:
            name = "p[" + ",".join(map(str, lam)) + "]"
            body = name if abs(c) == 1 else f"{abs(c)}*{name}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"lambda": list(lam), "coef": c} for lam, c in self.terms]}

    @classmethod
    def from_json(cls, obj) -> PSymFunc:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["n"], [(t["lambda"], int(t["coef"])) for t in obj["terms"]])


def csf_nbc(G: Graph, order: Sequence[Edge] | None = None,
            budget: int = DEFAULT_MAX_SUBSETS) -> PSymFunc:
    """X(G) as the signed sum of p_lambda(A) over NBC sets A."""
    coeffs: dict[Partition, int] = {}
    for A in nbc_report(G, order, budget).all_sets():
        lam = partition_of(G.n, A)
        coeffs[lam] = coeffs.get(lam, 0) + (-1) ** len(A)
    return PSymFunc(G.n, coeffs)


def specialize(X: PSymFunc) -> IntPoly:
    """Substitute p_lambda -> t^(number of parts)."""
    coeffs = [0] * (X.n + 1)
    for lam, c in X.terms:
        coeffs[len(lam)] += c
    return IntPoly(coeffs)


def csf_eval_monomial_oracle(G: Graph, t: int, budget: int = DEFAULT_MAX_COLORINGS) -> int:
    """X(G) at x_1..x_t = 1, rest 0: sum 1 over every proper coloring into [t]."""
    if t ** G.n > budget:
        raise BudgetExceeded("monomial evaluation", budget)
    return sum(1 for kappa in product(range(t), repeat=G.n)
               if all(kappa[a - 1] != kappa[b - 1] for a, b in G.edges))


# ----------------------------------------------------------------------------
# Trees


def _tree_from_code(code: str) -> Graph:
    """Rebuild a tree from its nested-parenthesis code, labeling in preorder."""
    edges = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            count += 1
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
        else:
            stack.pop()
    return build_graph(count, edges)


def trees(n: int) -> list[Graph]:
    """One tree per isomorphism class on ``n`` vertices.

    Grown from the classes on n - 1 vertices by hanging a new leaf on every
    vertex and keeping one tree per canonical form.
    """
    if n < 1:
        return []
    layer = {forest_code(build_graph(1)): build_graph(1)}
    for size in range(2, n + 1):
        nxt: dict = {}
        for T in layer.values():
            for v in T.vertices:
                grown = build_graph(size, T.edges + ((v, size),))
                code = forest_code(grown)
                if code not in nxt:
                    nxt[code] = _tree_from_code(code[0])
        layer = nxt
    return [layer[k] for k in sorted(layer)]


@dataclass
class TreeScanReport:
    class_counts: dict[int, int]
    collisions: list[tuple[Graph, Graph]]
    bad_chromatic: list[Graph]

    @property
    def passed(self) -> bool:
        return not self.collisions and not self.bad_chromatic


def tree_scan(n_max: int) -> TreeScanReport:
    """Check P(T) = t (t-1)^(n-1) and pairwise distinct X(T) for all trees up to n_max."""
    counts: dict[int, int] = {}
    collisions: list[tuple[Graph, Graph]] = []
    bad: list[Graph] = []
    for n in range(1, n_max + 1):
        reps = trees(n)
        counts[n] = len(reps)
        expected = IntPoly.monomial(1) * IntPoly([-1, 1]) ** (n - 1)
        seen: dict[PSymFunc, Graph] = {}
        for T in reps:
            if chromatic_poly_dc(T) != expected:
                bad.append(T)
            X = csf_nbc(T)
            if X in seen:
                collisions.append((seen[X], T))
            else:
                seen[X] = T
    return TreeScanReport(counts, collisions, bad)
