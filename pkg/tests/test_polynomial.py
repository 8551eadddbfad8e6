import json
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chrompoly.errors import PolynomialError
from chrompoly.polynomial import (IntPoly, T, from_roots, interpolate, is_log_concave,
                                  log_concavity, render)

GSTAR_P = IntPoly([0, -2, 5, -4, 1])
C4_P = IntPoly([0, -3, 6, -4, 1])

polys = st.lists(st.integers(-10**6, 10**6), max_size=8).map(IntPoly)


def brute_colorings(n, edges, t):
    return sum(1 for k in product(range(t), repeat=n) if all(k[a - 1] != k[b - 1] for a, b in edges))


def test_sub_monomials():
    assert T - 1 == IntPoly([-1, 1])


def test_running_example_difference():
    assert T * (T - 1) ** 3 - T * (T - 1) * (T - 2) == C4_P


def test_additive_identity():
    assert GSTAR_P + IntPoly() == GSTAR_P


def test_zero_normalization():
    assert IntPoly([0, 0, 0]) == IntPoly()
    assert IntPoly().degree == -1
    assert GSTAR_P - GSTAR_P == IntPoly()


def test_from_roots_running_example():
    assert from_roots([0, 1, 1, 2]) == GSTAR_P


def test_from_roots_empty_and_double_zero():
    assert from_roots([]) == IntPoly([1])
    assert from_roots([0, 0]) == IntPoly([0, 0, 1])


@given(st.lists(st.integers(-20, 20), max_size=7))
def test_from_roots_vanishes_at_roots(roots):
    p = from_roots(roots)
    assert p.degree == len(roots) and p.leading == 1
    assert all(p.eval(r) == 0 for r in roots)


def test_eval_running_example():
    assert GSTAR_P.eval(-1) == 12
    assert GSTAR_P(0) == 0


def test_eval_matches_brute_force_count():
    edges = [(1, 2), (1, 4), (2, 4), (2, 3)]
    assert GSTAR_P.eval(3) == brute_colorings(4, edges, 3) == 12


def test_eval_big_values_exact():
    p = T ** 40
    assert p.eval(3) == 3**40
    assert (p * p).eval(-2) == 2**80


def test_interpolate_running_example():
    edges = [(1, 2), (1, 4), (2, 4), (2, 3)]
    points = [(t, brute_colorings(4, edges, t)) for t in range(5)]
    assert points == [(0, 0), (1, 0), (2, 0), (3, 12), (4, 72)]
    assert interpolate(points) == GSTAR_P


def test_interpolate_constant():
    assert interpolate([(0, 5)]) == IntPoly([5])


def test_interpolate_cycle():
    edges = [(1, 2), (2, 3), (3, 4), (1, 4)]
    points = [(t, brute_colorings(4, edges, t)) for t in range(5)]
    assert points == [(0, 0), (1, 0), (2, 2), (3, 18), (4, 84)]
    assert interpolate(points) == C4_P


def test_interpolate_rejects_non_integer():
    with pytest.raises(PolynomialError):
        interpolate([(0, 0), (2, 1)])


def test_interpolate_rejects_repeated_abscissa():
    with pytest.raises(PolynomialError):
        interpolate([(1, 0), (1, 1)])


@settings(max_examples=300)
@given(polys, st.lists(st.integers(-50, 50), min_size=12, max_size=12, unique=True))
def test_interpolate_inverts_sampling(p, xs):
    k = max(p.degree, 0) + 1
    assert interpolate([(x, p.eval(x)) for x in xs[:k]]) == p


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == IntPoly()


@given(polys, polys, st.integers(-30, 30))
def test_eval_is_multiplicative(p, q, t):
    assert (p * q).eval(t) == p.eval(t) * q.eval(t)
    assert (p + q).eval(t) == p.eval(t) + q.eval(t)


def test_log_concave_running_example():
    lc = log_concavity(GSTAR_P)
    assert lc.log_concave and lc.alternating


@pytest.mark.parametrize("n", range(0, 15))
def test_pascal_rows_log_concave(n):
    assert is_log_concave(IntPoly(comb(n, k) for k in range(n + 1)))


def test_internal_zero_not_log_concave():
    assert not is_log_concave(IntPoly([1, 0, 1]))


def test_alternation_reported_separately():
    lc = log_concavity(IntPoly([1, 2, 1]))
    assert lc.log_concave and not lc.alternating
    assert log_concavity(IntPoly([0, 0, 1, -3, 3, -1])).alternating
    assert not log_concavity(IntPoly([1, 0, -3, 1])).alternating


def test_render():
    assert render(GSTAR_P) == "t^4 - 4*t^3 + 5*t^2 - 2*t"
    assert render(IntPoly([-1, 1])) == "t - 1"
    assert render(IntPoly([3])) == "3"
    assert render(IntPoly([0, -1])) == "-t"
    assert render(IntPoly()) == "0"


def test_json_roundtrip_and_big_ints():
    big = IntPoly([2**70, -(2**64), 5])
    obj = json.loads(json.dumps(big.to_json()))
    assert obj["coeffs"][0] == str(2**70)
    assert obj["coeffs"][2] == 5
    assert IntPoly.from_json(obj) == big
    assert IntPoly.from_json(json.dumps(GSTAR_P.to_json())) == GSTAR_P
