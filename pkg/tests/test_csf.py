import json
import random
from itertools import permutations, product

import pytest

from chrompoly.chromatic import chromatic_poly_dc, random_order
from chrompoly.corpus import random_corpus
from chrompoly.csf import (PSymFunc, csf_eval_monomial_oracle, csf_nbc, specialize, tree_scan,
                           trees)
from chrompoly.errors import BudgetExceeded, PolynomialError
from chrompoly.graph import (build_graph, complete, edgeless, is_forest, is_isomorphic, path,
                             relabel)
from chrompoly.polynomial import IntPoly

GSTAR_X = PSymFunc(4, {(1, 1, 1, 1): 1, (2, 1, 1): -4, (2, 2): 1, (3, 1): 4, (4,): -2})


def prufer_trees(n):
    if n == 1:
        yield build_graph(1, [])
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        degree = [1] * (n + 1)
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(1, n + 1) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [v for v in range(1, n + 1) if degree[v] == 1]
        edges.append((u, w))
        yield build_graph(n, edges)


def perm_key(G):
    return min(tuple(sorted(tuple(sorted((p[a - 1], p[b - 1]))) for a, b in G.edges))
               for p in permutations(range(1, G.n + 1)))


def test_path_three():
    assert csf_nbc(path(3)) == PSymFunc(3, {(1, 1, 1): 1, (2, 1): -2, (3,): 1})
    assert str(csf_nbc(path(3))) == "p[1,1,1] - 2*p[2,1] + p[3]"


def test_running_example(gstar):
    assert csf_nbc(gstar) == GSTAR_X


def test_edgeless_and_complete():
    assert csf_nbc(edgeless(3)) == PSymFunc(3, {(1, 1, 1): 1})
    assert csf_nbc(complete(2)) == PSymFunc(2, {(1, 1): 1, (2,): -1})


def test_specialize_path_three():
    assert specialize(csf_nbc(path(3))) == IntPoly([0, 1, -2, 1])


def test_monomial_oracle_path_three():
    assert csf_eval_monomial_oracle(path(3), 2) == 2
    assert csf_eval_monomial_oracle(path(3), 3) == 12


def test_monomial_oracle_budget():
    with pytest.raises(BudgetExceeded):
        csf_eval_monomial_oracle(edgeless(10), 5, budget=1000)


def test_psym_validation_and_arithmetic():
    with pytest.raises(PolynomialError):
        PSymFunc(3, {(2, 2): 1})
    with pytest.raises(PolynomialError):
        PSymFunc(2, {(2, 0): 1})
    X = csf_nbc(path(3))
    assert (X - X).terms == ()
    assert str(X - X) == "0"
    assert PSymFunc(3, [((1, 2), 1), ((2, 1), 2)]).coefficient((2, 1)) == 3
    with pytest.raises(PolynomialError):
        X + GSTAR_X


def test_json_roundtrip(gstar):
    obj = json.loads(json.dumps(GSTAR_X.to_json()))
    assert obj["n"] == 4
    assert [t["lambda"] for t in obj["terms"]] == sorted(t["lambda"] for t in obj["terms"])
    assert PSymFunc.from_json(obj) == GSTAR_X
    assert PSymFunc.from_json(json.dumps(obj)) == GSTAR_X


@pytest.fixture(scope="module")
def sample(small_corpus):
    return small_corpus + random_corpus(30, 6, 606)


def test_specialization_identity(sample):
    for G in sample:
        assert specialize(csf_nbc(G)) == chromatic_poly_dc(G)


def test_low_coefficients_and_homogeneity(sample):
    for G in sample:
        X = csf_nbc(G)
        assert X.coefficient((1,) * G.n) == 1
        if G.n >= 2:
            assert X.coefficient((2,) + (1,) * (G.n - 2)) == -G.m
        assert all(sum(lam) == G.n for lam, _ in X.terms)


@pytest.mark.parametrize("seed", range(20))
def test_order_invariance(seed):
    G = random_corpus(20, 6, 321)[seed]
    base = csf_nbc(G)
    rng = random.Random(seed)
    for _ in range(5):
        assert csf_nbc(G, random_order(G, rng)) == base


@pytest.mark.parametrize("seed", range(20))
def test_monomial_oracle_agrees(seed):
    G = random_corpus(20, 5, 777)[seed]
    P = specialize(csf_nbc(G))
    for t in (1, 2, 3):
        assert csf_eval_monomial_oracle(G, t) == P.eval(t)


def test_relabeling_invariance(gstar):
    assert csf_nbc(relabel(gstar, [3, 1, 4, 2])) == GSTAR_X


# -- trees -------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_classes_against_prufer(n):
    expected = {perm_key(T) for T in prufer_trees(n)}
    reps = trees(n)
    assert all(is_forest(T) and T.m == n - 1 for T in reps)
    assert {perm_key(T) for T in reps} == expected


def test_tree_classes_against_networkx():
    nx = pytest.importorskip("networkx")
    for n in range(2, 10):
        mine = trees(n)
        theirs = list(nx.nonisomorphic_trees(n))
        assert len(mine) == len(theirs)
        for H in theirs:
            G = build_graph(n, [(a + 1, b + 1) for a, b in H.edges()])
            assert sum(is_isomorphic(G, T) for T in mine) == 1


def test_tree_scan_counts():
    rep = tree_scan(9)
    assert rep.passed
    assert [rep.class_counts[n] for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_same_polynomial_different_csf():
    star = build_graph(4, [(1, 2), (1, 3), (1, 4)])
    assert chromatic_poly_dc(star) == chromatic_poly_dc(path(4))
    assert csf_nbc(star) != csf_nbc(path(4))
