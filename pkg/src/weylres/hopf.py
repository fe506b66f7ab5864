"""Multiplication, comultiplication and the raising maps on divided/exterior powers.

Exterior signs: multiplying masks S, T (disjoint) gives (-1)^inv(S, T) times
the sorted union, where inv counts pairs i in S, j in T with i > j; the
coproduct of S sums over subsets S1 with the same sign for (S1, S \\ S1).
With this choice m . Delta = binom(a+b, a) on the exterior algebra.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .arith import check_prime, lucas
from .bases import Kind, TensorWord, basis, check_kind, index_of, tensor_index
from .linalg import FpMatrix


def shuffle_sign(s: tuple, t: tuple) -> int:
    inv = sum(1 for i in s for j in t if i > j)
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def divided_splits(g: tuple, a: int) -> tuple[tuple[tuple, tuple], ...]:
    """All (e, f) with e + f = g and |e| = a."""
    out = []

    def rec(i, left, prefix):
        if i == len(g) - 1:
            if 0 <= left <= g[i]:
                e = prefix + (left,)
                out.append((e, tuple(x - y for x, y in zip(g, e))))
            return
        rest = sum(g[i + 1:])
        for ei in range(min(g[i], left), max(0, left - rest) - 1, -1):
            rec(i + 1, left - ei, prefix + (ei,))

    if 0 <= a <= sum(g):
        rec(0, a, ())
    return tuple(out)


@lru_cache(maxsize=None)
def exterior_splits(s: tuple, a: int) -> tuple[tuple[int, tuple, tuple], ...]:
    """All (sign, S1, S2) with S1 an a-subset of S and S2 its complement."""
    out = []
    if 0 <= a <= len(s):
        for s1 in combinations(s, a):
            chosen = set(s1)
            s2 = tuple(x for x in s if x not in chosen)
            out.append((shuffle_sign(s1, s2), s1, s2))
    return tuple(out)


def divided_product(e: tuple, f: tuple, p: int) -> tuple[int, tuple]:
    coef = 1
    for x, y in zip(e, f):
        coef = coef * lucas(p, x + y, x) % p
        if not coef:
            break
    return coef, tuple(x + y for x, y in zip(e, f))


def exterior_product(s: tuple, t: tuple) -> tuple[int, tuple]:
    if set(s) & set(t):
        return 0, ()
    return shuffle_sign(s, t), tuple(sorted(s + t))


def product(kind: Kind, x: tuple, y: tuple, p: int) -> tuple[int, tuple]:
    return divided_product(x, y, p) if kind == "divided" else exterior_product(x, y)


def coproduct(kind: Kind, g: tuple, a: int) -> tuple[tuple[int, tuple, tuple], ...]:
    if kind == "divided":
        return tuple((1, e, f) for e, f in divided_splits(g, a))
    return exterior_splits(g, a)


def mul_matrix(kind: Kind, n: int, a: int, b: int, p: int) -> FpMatrix:
    """m : A_a V (x) A_b V -> A_{a+b} V."""
    check_kind(kind)
    check_prime(p)
    src = tensor_index(TensorWord.pair(kind, n, a, b))
    cols = []
    for x, y in src.elements():
        c, z = product(kind, x, y, p)
        cols.append({index_of(kind, n, a + b, z): c} if c % p else {})
    return FpMatrix.from_columns(len(basis(kind, n, a + b)), cols, p)


def comul_matrix(kind: Kind, n: int, total: int, split: tuple[int, int], p: int) -> FpMatrix:
    """Delta : A_{a+b} V -> A_a V (x) A_b V."""
    check_kind(kind)
    check_prime(p)
    a, b = split
    if a < 0 or b < 0 or a + b != total:
        raise ValueError(f"split {split} does not add up to {total}")
    tgt = tensor_index(TensorWord.pair(kind, n, a, b))
    cols = []
    for g in basis(kind, n, total):
        col = {}
        for c, e, f in coproduct(kind, g, a):
            col[tgt.index((e, f))] = c
        cols.append(col)
    return FpMatrix.from_columns(tgt.dim, cols, p)


@lru_cache(maxsize=None)
def partial_images(kind: Kind, n: int, a: int, b: int, t: int, p: int) -> tuple[dict, ...]:
    """Columns of the raising map A_a (x) A_b -> A_{a+t} (x) A_{b-t}."""
    check_kind(kind)
    src = tensor_index(TensorWord.pair(kind, n, a, b))
    if b - t < 0 or t < 0:
        return tuple({} for _ in range(src.dim))
    tgt = tensor_index(TensorWord.pair(kind, n, a + t, b - t))
    cols = []
    for x, y in src.elements():
        col: dict[int, int] = {}
        for s, y1, y2 in coproduct(kind, y, t):
            c, z = product(kind, x, y1, p)
            c = c * s % p
            if c:
                k = tgt.index((z, y2))
                v = (col.get(k, 0) + c) % p
                if v:
                    col[k] = v
                else:
                    col.pop(k)
        cols.append(col)
    return tuple(cols)


def partial_t_matrix(kind: Kind, n: int, a: int, b: int, t: int, p: int) -> FpMatrix:
    """(m (x) 1) . (1 (x) Delta) : A_a V (x) A_b V -> A_{a+t} V (x) A_{b-t} V.

    When b - t < 0 the target is the zero space and the matrix has no rows.
    """
    check_prime(p)
    if t < 0:
        raise ValueError("t must be nonnegative")
    ntgt = 0 if b - t < 0 else tensor_index(TensorWord.pair(kind, n, a + t, b - t)).dim
    return FpMatrix.from_columns(ntgt, partial_images(kind, n, a, b, t, p), p)
