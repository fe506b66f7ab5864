from itertools import product
from math import comb

import pytest

from weylres.bases import (TensorWord, divided_basis, exterior_basis, is_partition, ssyt, ssyt_count,
                           tableau_weight, tensor_index, transpose_partition)
from weylres.symfunc import schur_poly


def brute_ssyt_count(shape, n):
    # fill every box with every letter and keep the semistandard fillings
    a, b = shape
    count = 0
    for top in product(range(1, n + 1), repeat=a):
        if any(top[i] > top[i + 1] for i in range(a - 1)):
            continue
        for bot in product(range(1, n + 1), repeat=b):
            if any(bot[i] > bot[i + 1] for i in range(b - 1)):
                continue
            if all(bot[i] > top[i] for i in range(b)):
                count += 1
    return count


def test_divided_basis_examples():
    assert divided_basis(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert divided_basis(1, 5) == ((5,),)
    assert len(divided_basis(3, 4)) == 15


def test_exterior_basis_examples():
    assert exterior_basis(3, 2) == ((1, 2), (1, 3), (2, 3))
    assert exterior_basis(2, 3) == ()
    assert len(exterior_basis(5, 2)) == 10


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_counts(n):
    for a in range(15):
        db = divided_basis(n, a)
        assert len(db) == comb(n + a - 1, n - 1)
        assert len(set(db)) == len(db) and list(db) == sorted(db, reverse=True)
        assert all(sum(e) == a for e in db)
        assert len(exterior_basis(n, a)) == comb(n, a)


def test_tensor_index_examples():
    t = tensor_index(TensorWord((("divided", 1), ("divided", 1)), 2))
    assert t.dim == 4
    assert t.weight(t.index(((1, 0), (0, 1)))) == (1, 1)
    assert tensor_index(TensorWord((("divided", 3), ("divided", 1)), 2)).dim == 8
    assert tensor_index(TensorWord((("exterior", 2), ("exterior", 2)), 3)).dim == 9


def test_tensor_index_roundtrip():
    t = tensor_index(TensorWord.pair("exterior", 4, 2, 1))
    for i in range(t.dim):
        assert t.index(t.element(i)) == i
    assert list(t.elements()) == [t.element(i) for i in range(t.dim)]


def test_ssyt_count_examples():
    assert ssyt_count((3, 1), 2) == 3
    assert ssyt_count((2, 2), 2) == 1
    assert ssyt_count((7,), 1) == 1
    assert ssyt_count((1, 1), 1) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ssyt_count_against_brute_force_and_schur(n):
    for a in range(7):
        for b in range(a + 1):
            want = brute_ssyt_count((a, b), n)
            assert ssyt_count((a, b), n) == want
            assert schur_poly((a, b), n).at_ones() == want


def test_ssyt_weights_and_shapes():
    tabs = list(ssyt((2, 1), 2))
    assert sorted(tableau_weight(t, 2) for t in tabs) == [(1, 2), (2, 1)]


def test_partition_helpers():
    assert is_partition((3, 1)) and is_partition((2, 2, 0)) and not is_partition((1, 2))
    assert not is_partition((2, -1))
    assert transpose_partition((3, 1)) == (2, 1, 1)
    assert transpose_partition(transpose_partition((4, 2))) == (4, 2)
