from math import comb

import pytest
from hypothesis import given, strategies as st

from weylres.arith import lucas
from weylres.bases import TensorWord, index_of, tensor_index
from weylres.checks import hopf_suite
from weylres.hopf import comul_matrix, mul_matrix, partial_t_matrix, shuffle_sign
from weylres.linalg import FpMatrix

kinds = st.sampled_from(["divided", "exterior"])
primes = st.sampled_from([2, 3, 5])


def test_divided_product_example():
    # x * x = 2 x^(2) in D(V), n = 1
    m = mul_matrix("divided", 1, 1, 1, 3)
    assert m.to_dense() == [[2]]
    assert mul_matrix("divided", 1, 1, 1, 2).is_zero()


def test_partial_example_vanishes_mod_2():
    m = partial_t_matrix("divided", 1, 1, 1, 1, 2)
    assert m.shape == (1, 1) and m.is_zero()


def test_partial_zero_is_identity():
    for kind in ("divided", "exterior"):
        m = partial_t_matrix(kind, 3, 2, 2, 0, 5)
        assert m == FpMatrix.identity(m.nrows, 5)


def test_partial_beyond_row_is_zero_map():
    m = partial_t_matrix("divided", 2, 2, 1, 2, 3)
    assert m.nrows == 0


def test_partial_rejects_negative_t():
    with pytest.raises(ValueError):
        partial_t_matrix("divided", 2, 2, 1, -1, 3)


def test_shuffle_sign():
    assert shuffle_sign((1,), (2,)) == 1
    assert shuffle_sign((2,), (1,)) == -1
    assert shuffle_sign((2, 3), (1,)) == 1


def test_comultiplication_divided_coefficients_are_one():
    m = comul_matrix("divided", 2, 3, (2, 1), 5)
    assert set(m.entries().values()) == {1}
    # each x^(e) splits into one tensor per (f <= e, |f| = 2)
    src = index_of("divided", 2, 3, (2, 1))
    assert len(m.column(src)) == 2


@given(kinds, st.integers(1, 3), st.integers(0, 4), st.integers(0, 4), primes)
def test_composition_law(kind, n, a, b, p):
    for t in range(b + 1):
        for s in range(b - t + 1):
            lhs = partial_t_matrix(kind, n, a + t, b - t, s, p) @ partial_t_matrix(kind, n, a, b, t, p)
            assert lhs == partial_t_matrix(kind, n, a, b, s + t, p).scale(lucas(p, s + t, t))


@given(kinds, st.integers(1, 3), st.integers(0, 4), st.integers(0, 5), st.sampled_from([3, 5, 7]))
def test_vanishing_composite(kind, n, a, b, p):
    for t in range(1, min(p, b + 1)):
        if b >= p:
            m = partial_t_matrix(kind, n, a + t, b - t, p - t, p) @ partial_t_matrix(kind, n, a, b, t, p)
            assert m.is_zero()


@given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 4), primes)
def test_exterior_mul_comul_is_binomial(n, a, b, p):
    m = mul_matrix("exterior", n, a, b, p) @ comul_matrix("exterior", n, a + b, (a, b), p)
    assert m == FpMatrix.identity(m.nrows, p).scale(comb(a + b, a))


@given(kinds, st.integers(1, 3), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), primes)
def test_partial_preserves_weight(kind, n, a, b, t, p):
    m = partial_t_matrix(kind, n, a, b, t, p)
    if b < t:
        return
    src = tensor_index(TensorWord.pair(kind, n, a, b)).weights()
    tgt = tensor_index(TensorWord.pair(kind, n, a + t, b - t)).weights()
    assert all(tgt[i] == src[j] for i, j in m.entries())


def test_full_hopf_sweep_passes():
    claims = hopf_suite()
    assert [c.statement_id for c in claims if not c.passed] == []
    assert all(c.values["cases_checked"] > 0 for c in claims)
