import pytest

from chrompoly.arrangement import (Flat, bond_lattice, characteristic_poly, mobius_function,
                                   verify_zaslavsky)
from chrompoly.chromatic import chromatic_poly_dc
from chrompoly.corpus import random_corpus
from chrompoly.errors import BudgetExceeded
from chrompoly.graph import build_graph, complete, cycle, edgeless, path
from chrompoly.orientations import acyclic_orientations
from chrompoly.polynomial import IntPoly


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def block_connected(G, block):
    block = set(block)
    start = min(block)
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in G.adj[v]:
            if w in block and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == block


def brute_flats(G):
    return {Flat(tuple(sorted(tuple(sorted(b)) for b in part)))
            for part in set_partitions(list(G.vertices))
            if all(block_connected(G, b) for b in part)}


@pytest.mark.parametrize("n, bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)])
def test_complete_graph_gives_all_partitions(n, bell):
    L = bond_lattice(complete(n))
    assert len(L) == bell == len(brute_flats(complete(n)))


@pytest.mark.parametrize("seed", range(30))
def test_flats_match_brute_force(seed):
    G = random_corpus(30, 6, 555)[seed]
    L = bond_lattice(G)
    assert set(L.flats) == brute_flats(G)
    assert len(L.flats) == len(set(L.flats))


def test_path_lattice():
    L = bond_lattice(path(3))
    assert {str(S) for S in L.flats} == {"1|2|3", "1|23", "12|3", "123"}
    mu = {str(S): m for S, m in L.mobius.items()}
    assert mu == {"1|2|3": 1, "1|23": -1, "12|3": -1, "123": 1}
    assert characteristic_poly(L) == IntPoly([0, 1, -2, 1])


def test_triangle_lattice():
    L = bond_lattice(complete(3))
    mu = {str(S): m for S, m in L.mobius.items()}
    assert mu["123"] == 2
    assert characteristic_poly(L) == IntPoly([0, 2, -3, 1])


def test_edgeless_lattice():
    L = bond_lattice(edgeless(4))
    assert len(L) == 1
    assert L.mobius == {L.minimum: 1}
    assert characteristic_poly(L) == IntPoly([0, 0, 0, 0, 1])


def test_single_vertex():
    rep = verify_zaslavsky(edgeless(1))
    assert rep.flats == 1 and rep.regions == 1 and rep.value_at_minus_one == -1


def test_flat_ordering_and_refinement():
    L = bond_lattice(cycle(4))
    assert L.minimum.dim == 4
    for i, S in enumerate(L.flats):
        for T in L.below(S):
            assert L.flats.index(T) < i
            assert T.dim > S.dim
    top = L.flats[-1]
    assert top.dim == 1
    assert all(S.refines(top) for S in L.flats)


def test_flat_str_wide_labels():
    assert str(Flat(((1, 10), (2,)))) == "1,10|2"


@pytest.mark.parametrize("seed", range(20))
def test_mobius_resums_to_zero(seed):
    G = random_corpus(20, 6, 808)[seed]
    L = bond_lattice(G)
    mu = mobius_function(L)
    for S in L.flats:
        if S != L.minimum:
            assert mu[S] + sum(mu[T] for T in L.below(S)) == 0


def test_running_example_zaslavsky(gstar):
    rep = verify_zaslavsky(gstar)
    assert rep.passed
    assert rep.regions == 12 == rep.value_at_minus_one
    assert rep.char_poly == chromatic_poly_dc(gstar)


@pytest.mark.parametrize("seed", range(20))
def test_zaslavsky_random(seed):
    G = random_corpus(20, 7, 2718)[seed]
    rep = verify_zaslavsky(G)
    assert rep.regions == acyclic_orientations(G)[0]
    assert rep.char_poly == chromatic_poly_dc(G)


def test_disconnected_lattice_is_product():
    G = build_graph(5, [(1, 2), (2, 3), (1, 3), (4, 5)])
    assert len(bond_lattice(G)) == 5 * 2


def test_lattice_budget():
    with pytest.raises(BudgetExceeded):
        bond_lattice(complete(7), budget=100)
