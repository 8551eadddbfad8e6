"""Simple labeled graphs on the vertex set 1..n.

Graphs are immutable values.  Edges are stored as sorted ``(i, j)`` tuples
with ``i < j`` and the edge tuple itself is sorted lexicographically, which
doubles as the default total order on the edge set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphError

Edge = tuple[int, int]
Partition = tuple[int, ...]


def normalize_edge(e: Sequence[int]) -> Edge:
    i, j = int(e[0]), int(e[1])
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge {(i, j)} out of range 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex label; index 0 is unused."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        masks = [0] * (self.n + 1)
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, e: Sequence[int]) -> bool:
        return normalize_edge(e) in self.edge_set

    def __repr__(self):
        body = ",".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.edges)
        return f"Graph(n={self.n}, E={{{body}}})"

    def to_text(self) -> str:
        """Render in the edge-list text format (first line ``n``, then ``i j`` lines)."""
        lines = [str(self.n)] + [f"{i} {j}" for i, j in self.edges]
        return "\n".join(lines) + "\n"


def build_graph(n: int, edge_list: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a normalized graph; duplicate and reversed pairs collapse."""
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    edges = set()
    for e in edge_list:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        i, j = normalize_edge(e)
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        if i < 1 or j > n:
            raise GraphError(f"edge {(i, j)} out of range 1..{n}")
        edges.add((i, j))
    return Graph(n, tuple(sorted(edges)))


def _require_edge(G: Graph, e: Sequence[int]) -> Edge:
    e = normalize_edge(e)
    if e not in G.edge_set:
        raise GraphError(f"edge {e} is not in {G!r}")
    return e


def delete_edge(G: Graph, e: Sequence[int]) -> Graph:
    e = _require_edge(G, e)
    return Graph(G.n, tuple(f for f in G.edges if f != e))


def contract_edge(G: Graph, e: Sequence[int]) -> Graph:
    """Collapse edge ``{i, j}`` (i < j) into vertex ``i``.

    Labels above ``j`` shift down by one.  Parallel edges created by the
    merge collapse into one and the contracted edge itself disappears, so
    the result is again simple.
    """
    i, j = _require_edge(G, e)

    def relabel(v):
        if v == j:
            return i
        return v - 1 if v > j else v

    edges = set()
    for a, b in G.edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return Graph(G.n - 1, tuple(sorted(edges)))


def add_edge(G: Graph, e: Sequence[int]) -> Graph:
    return build_graph(G.n, G.edges + (normalize_edge(e),))


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabeled 1..k in increasing order."""
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("induced subgraph on the empty vertex set")
    index = {v: k + 1 for k, v in enumerate(vs)}
    return Graph(len(vs), tuple(sorted(
        (index[a], index[b]) for a, b in G.edges if a in index and b in index)))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Apply the bijection ``v -> perm[v - 1]`` to the vertex labels."""
    if sorted(perm) != list(G.vertices):
        raise GraphError(f"{perm!r} is not a permutation of 1..{G.n}")
    return build_graph(G.n, [(perm[a - 1], perm[b - 1]) for a, b in G.edges])


# ----------------------------------------------------------------------------
# Components and cycles


def components_of(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    """Vertex sets of the components of the spanning subgraph ``([n], edges)``."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        blocks.setdefault(find(v), []).append(v)
    return sorted(blocks.values())


def partition_of(n: int, edges: Iterable[Edge]) -> Partition:
    """Component-size partition of the spanning subgraph, weakly decreasing."""
    return tuple(sorted((len(b) for b in components_of(n, edges)), reverse=True))


def components(G: Graph) -> tuple[list[list[int]], Partition]:
    blocks = components_of(G.n, G.edges)
    return blocks, tuple(sorted((len(b) for b in blocks), reverse=True))


def is_forest_edges(n: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_forest(G: Graph) -> bool:
    return is_forest_edges(G.n, G.edges)


def simple_cycles(G: Graph) -> list[frozenset[Edge]]:
    """Every simple cycle of ``G`` exactly once, as a set of edges.

    Each cycle is found from its least vertex ``s`` by a DFS restricted to
    vertices above ``s``; the two traversal directions are told apart by
    requiring the second vertex to be smaller than the last one.
    """
    adj = G.adj
    found = []
    for s in G.vertices:
        path = [s]
        on_path = {s}

        def extend(v):
            for w in sorted(adj[v]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    cyc = path + [s]
                    found.append(frozenset(normalize_edge(p) for p in zip(cyc, cyc[1:])))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    return found


# ----------------------------------------------------------------------------
# Isomorphism


def _tree_code(adj: dict[int, list[int]], root: int, parent: int) -> str:
    kids = sorted(_tree_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def _tree_centers(adj: dict[int, list[int]], vertices: list[int]) -> list[int]:
    if len(vertices) <= 2:
        return vertices
    deg = {v: len(adj[v]) for v in vertices}
    leaves = [v for v in vertices if deg[v] <= 1]
    remaining = len(vertices)
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for w in adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[leaf] = 0
        leaves = nxt
    return leaves


def forest_code(G: Graph) -> tuple[str, ...]:
    """Canonical code of a forest: sorted center-rooted AHU strings of its trees."""
    adj = {v: sorted(G.adj[v]) for v in G.vertices}
    codes = []
    for block in components_of(G.n, G.edges):
        centers = _tree_centers(adj, block)
        codes.append(min(_tree_code(adj, c, 0) for c in centers))
    return tuple(sorted(codes))


def _refine(adj_mask: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every other cell until equitable."""
    while True:
        masks = []
        for cell in cells:
            mk = 0
            for v in cell:
                mk |= 1 << v
            masks.append(mk)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(bin(adj_mask[v] & mk).count("1") for mk in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _general_code(G: Graph) -> tuple[Edge, ...]:
    """Lexicographically least relabeled edge list over a pruned search tree.

    The search tree is individualization/refinement: refine the degree
    partition to an equitable one, individualize each vertex of the first
    non-singleton cell in turn, and recurse.  Vertices that are twins of an
    already-tried vertex are skipped since swapping twins is an
    automorphism fixing the current partition.
    """
    adj_mask = G.adj_mask
    best: list = [None]

    def leaf(cells):
        pos = {cell[0]: k + 1 for k, cell in enumerate(cells)}
        code = tuple(sorted(
            (pos[a], pos[b]) if pos[a] < pos[b] else (pos[b], pos[a]) for a, b in G.edges))
        if best[0] is None or code < best[0]:
            best[0] = code

    def search(cells):
        cells = _refine(adj_mask, cells)
        k = next((idx for idx, c in enumerate(cells) if len(c) > 1), None)
        if k is None:
            leaf(cells)
            return
        tried: list[int] = []
        for v in cells[k]:
            if any((adj_mask[v] & ~(1 << u)) == (adj_mask[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[k] if u != v]
            search(cells[:k] + [[v], rest] + cells[k + 1:])

    search([list(G.vertices)])
    return best[0]


def canonical_key(G: Graph) -> tuple:
    """Key equal for two graphs iff they are isomorphic."""
    if is_forest(G):
        return ("F", G.n, G.m, forest_code(G))
    return ("G", G.n, G.m, _general_code(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(G.degree(v) for v in G.vertices) != sorted(H.degree(v) for v in H.vertices):
        return False
    return canonical_key(G) == canonical_key(H)


# ----------------------------------------------------------------------------
# Standard families


FAMILIES = ("complete", "cycle", "path", "edgeless")


def family(kind: str, n: int) -> Graph:
    if kind == "complete":
        return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    if kind == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if kind == "path":
        return build_graph(n, [(i, i + 1) for i in range(1, n)])
    if kind == "edgeless":
        return build_graph(n)
    raise GraphError(f"unknown family {kind!r}; expected one of {', '.join(FAMILIES)}")


def complete(n: int) -> Graph:
    return family("complete", n)


def cycle(n: int) -> Graph:
    return family("cycle", n)


def path(n: int) -> Graph:
    return family("path", n)


def edgeless(n: int) -> Graph:
    return family("edgeless", n)


def random_graph(n: int, p: float, seed) -> Graph:
    """Erdos-Renyi G(n, p), reproducible from ``seed``."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                           if rng.random() < p])


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    First significant line is ``n``; each further line is ``i j``.  Blank
    lines and lines starting with ``#`` are ignored.  Errors carry the
    1-based line number.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(nums) != 1:
                raise GraphError(f"line {lineno}: expected vertex count, got {line!r}")
            n = nums[0]
            if n < 1:
                raise GraphError(f"line {lineno}: vertex count must be positive, got {n}")
            continue
        if len(nums) != 2:
            raise GraphError(f"line {lineno}: expected 'i j', got {line!r}")
        i, j = nums
        if i == j:
            raise GraphError(f"line {lineno}: loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"line {lineno}: endpoint outside 1..{n} in {line!r}")
        pairs.append((i, j))
    if n is None:
        raise GraphError("empty input: missing vertex count")
    return build_graph(n, pairs)
