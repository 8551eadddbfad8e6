"""Desk-scale graph corpora used by the verification suite."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, build_graph, complete, cycle, path, random_graph

DEFAULT_SEED = 20240229


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on vertex set 1..n (2^(n choose 2) of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [pairs[k] for k in range(len(pairs)) if bits >> k & 1])


def exhaustive(n_max: int = 5) -> list[Graph]:
    return [G for n in range(1, n_max + 1) for G in all_graphs(n)]


def random_corpus(count: int = 200, n_max: int = 7, seed: int = DEFAULT_SEED) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, n_max)
        p = rng.uniform(0.2, 0.8)
        out.append(random_graph(n, p, rng.getrandbits(32)))
    return out


def families(n_max: int = 8) -> list[Graph]:
    out = []
    for n in range(1, n_max + 1):
        out.append(complete(n))
        out.append(path(n))
        if n >= 3:
            out.append(cycle(n))
    return out


def desk_corpus(seed: int = DEFAULT_SEED) -> list[Graph]:
    """All graphs on at most 5 vertices, 200 random graphs with n <= 7, and K_n, C_n, P_n up to 8."""
    return exhaustive(5) + random_corpus(seed=seed) + families(8)
