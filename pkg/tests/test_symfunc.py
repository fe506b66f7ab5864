from fractions import Fraction
from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from weylres.symfunc import (NonSymmetric, SymPolyInt, alternating_sides, complete_h, elementary_e, from_schur,
                             jacobi_trudi, power_substitute, schur_expand, schur_poly,
                             verify_alternating_identity)


def poly(n, d):
    return SymPolyInt(n, d)


def det(m):
    # Leibniz expansion with exact fractions
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction((-1) ** inv)
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def bialternant(shape, point):
    n = len(point)
    lam = list(shape) + [0] * (n - len(shape))
    num = [[x ** (lam[j] + n - 1 - j) for j in range(n)] for x in point]
    den = [[x ** (n - 1 - j) for j in range(n)] for x in point]
    return det(num) / det(den)


def test_complete_h_examples():
    assert complete_h(1, 2) == poly(2, {(1, 0): 1, (0, 1): 1})
    assert complete_h(2, 2) == poly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    h = complete_h(3, 3)
    assert h.at_ones() == comb(5, 2)
    assert len({tuple(sorted(e)) for e in h.coeffs}) == 3


def test_schur_examples():
    assert schur_poly((2, 1), 2) == poly(2, {(2, 1): 1, (1, 2): 1})
    assert schur_poly((1, 1, 1), 2) == SymPolyInt.zero(2)
    for k in range(6):
        assert schur_poly((k,), 3) == complete_h(k, 3)
    with pytest.raises(ValueError):
        schur_poly((1, 2), 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_against_bialternant(n):
    point = [2, 3, 5, 7][:n]
    for a in range(6):
        for b in range(a + 1):
            assert schur_poly((a, b), n).evaluate(point) == bialternant((a, b), point)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_jacobi_trudi(n):
    for a in range(9):
        for b in range(a + 1):
            assert schur_poly((a, b), n) == jacobi_trudi((a, b), n)


def test_power_substitute_examples():
    x_plus_y = poly(2, {(1, 0): 1, (0, 1): 1})
    assert power_substitute(x_plus_y, 2) == poly(2, {(2, 0): 1, (0, 2): 1})
    assert power_substitute(SymPolyInt.one(3), 5) == SymPolyInt.one(3)
    assert power_substitute(schur_poly((2, 1), 2), 2) == poly(2, {(4, 2): 1, (2, 4): 1})


def test_schur_expand_examples():
    assert schur_expand(complete_h(2, 2)) == {(2,): 1}
    assert schur_expand(poly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})) == {(2,): 1, (1, 1): 1}
    assert schur_expand(power_substitute(complete_h(2, 2), 2)) == {(4,): 1, (3, 1): -1, (2, 2): 1}


def test_schur_expand_rejects_non_symmetric():
    with pytest.raises(NonSymmetric):
        schur_expand(poly(2, {(1, 0): 1}))


@given(st.integers(1, 4), st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                                          st.integers(-3, 3), max_size=4))
def test_schur_expand_left_inverse(n, raw):
    coeffs = {(a, b): c for (a, b), c in raw.items() if a >= b}
    f = from_schur(coeffs, n)
    assert from_schur(schur_expand(f), n) == f


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pieri(n):
    h1 = complete_h(1, n)
    for a in range(5):
        for b in range(a + 1):
            shapes = [(a + 1, b)]
            if b + 1 <= a:
                shapes.append((a, b + 1))
            if b:
                shapes.append((a, b, 1))
            want = SymPolyInt.zero(n)
            for lam in shapes:
                want = want + schur_poly(tuple(x for x in lam if x), n)
            assert h1 * schur_poly((a, b), n) == want


def test_alternating_identity_small():
    assert verify_alternating_identity(1, 1)
    lhs, rhs = alternating_sides(1, 2)
    assert lhs == rhs == poly(2, {(2, 0): 1, (0, 2): 1})


def test_alternating_identity_range():
    for k in range(7):
        for n in range(1, 5):
            assert verify_alternating_identity(k, n)


def test_elementary_generating_relation():
    # sum_k (-1)^k e_k h_{m-k} = 0 for m > 0
    for n in range(1, 4):
        for m in range(1, 6):
            total = SymPolyInt.zero(n)
            for k in range(m + 1):
                total = total + elementary_e(k, n) * complete_h(m - k, n) * (-1) ** k
            assert not total
