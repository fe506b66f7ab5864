"""Ordered monomial bases of divided and exterior powers and their tensor products.

A divided-power monomial x_1^(e_1)...x_n^(e_n) is the exponent tuple
``(e_1, ..., e_n)``; an exterior monomial x_{i_1} ^ ... ^ x_{i_a} is the
strictly increasing tuple ``(i_1, ..., i_a)`` with entries in 1..n.  Every
basis is listed in lexicographic order, descending for exponent tuples so
that x_1^(a) comes first, ascending for exterior masks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

Kind = Literal["divided", "exterior"]
KINDS: tuple[Kind, ...] = ("divided", "exterior")

ExponentVector = tuple  # tuple[int, ...] of length n
ExteriorMask = tuple  # strictly increasing tuple[int, ...] in 1..n


def check_kind(kind: str) -> Kind:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind  # type: ignore[return-value]


@lru_cache(maxsize=None)
def divided_basis(n: int, a: int) -> tuple[ExponentVector, ...]:
    """All compositions of a into n nonnegative parts, lex-descending."""
    if n < 1:
        raise ValueError("n must be positive")
    if a < 0:
        return ()
    if n == 1:
        return ((a,),)
    out = []
    for first in range(a, -1, -1):
        for rest in divided_basis(n - 1, a - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def exterior_basis(n: int, a: int) -> tuple[ExteriorMask, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    if a < 0:
        return ()
    return tuple(itertools.combinations(range(1, n + 1), a))


def basis(kind: Kind, n: int, a: int) -> tuple:
    return divided_basis(n, a) if check_kind(kind) == "divided" else exterior_basis(n, a)


def weight_of(kind: Kind, n: int, mono: tuple) -> ExponentVector:
    """Torus weight of a basis monomial."""
    if kind == "divided":
        return mono
    w = [0] * n
    for i in mono:
        w[i - 1] += 1
    return tuple(w)


def add_weights(*ws: ExponentVector) -> ExponentVector:
    return tuple(map(sum, zip(*ws)))


@lru_cache(maxsize=None)
def _index_of(kind: Kind, n: int, a: int) -> dict:
    return {m: i for i, m in enumerate(basis(kind, n, a))}


def index_of(kind: Kind, n: int, a: int, mono: tuple) -> int:
    return _index_of(kind, n, a)[mono]


@dataclass(frozen=True)
class TensorWord:
    """A tensor product A_{a_1}V (x) ... (x) A_{a_k}V of divided/exterior pieces."""

    factors: tuple[tuple[Kind, int], ...]
    n: int

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a tensor word needs at least one factor")
        if self.n < 1:
            raise ValueError("n must be positive")
        for kind, deg in self.factors:
            check_kind(kind)
            if deg < 0:
                raise ValueError(f"negative degree {deg} in tensor word")

    @classmethod
    def pair(cls, kind: Kind, n: int, a: int, b: int) -> TensorWord:
        return cls(((kind, a), (kind, b)), n)


@dataclass(frozen=True)
class TensorBasis:
    """Indexed basis of a TensorWord: lexicographic product of the factor bases."""

    word: TensorWord
    factor_bases: tuple[tuple, ...] = field(init=False)
    strides: tuple[int, ...] = field(init=False)
    dim: int = field(init=False)

    def __post_init__(self):
        fbs = tuple(basis(k, self.word.n, d) for k, d in self.word.factors)
        strides = []
        s = 1
        for fb in reversed(fbs):
            strides.append(s)
            s *= len(fb)
        object.__setattr__(self, "factor_bases", fbs)
        object.__setattr__(self, "strides", tuple(reversed(strides)))
        object.__setattr__(self, "dim", s)

    def __len__(self):
        return self.dim

    def index(self, element: tuple) -> int:
        n = self.word.n
        return sum(index_of(k, n, d, mono) * st
                   for (k, d), mono, st in zip(self.word.factors, element, self.strides))

    def element(self, idx: int) -> tuple:
        if not 0 <= idx < self.dim:
            raise IndexError(idx)
        out = []
        for fb, st in zip(self.factor_bases, self.strides):
            q, idx = divmod(idx, st)
            out.append(fb[q])
        return tuple(out)

    def elements(self):
        return itertools.product(*self.factor_bases)

    def weight(self, idx: int) -> ExponentVector:
        n = self.word.n
        el = self.element(idx)
        return add_weights(*(weight_of(k, n, m) for (k, _), m in zip(self.word.factors, el)))

    def weights(self) -> list[ExponentVector]:
        n = self.word.n
        kinds = [k for k, _ in self.word.factors]
        return [add_weights(*(weight_of(k, n, m) for k, m in zip(kinds, el))) for el in self.elements()]


def tensor_index(word: TensorWord) -> TensorBasis:
    return _tensor_basis(word)


@lru_cache(maxsize=None)
def _tensor_basis(word: TensorWord) -> TensorBasis:
    return TensorBasis(word)


# partitions and tableaux


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(x >= 0 for x in parts) and all(x >= y for x, y in zip(parts, parts[1:]))


def pad(parts, n: int) -> tuple[int, ...]:
    """Pad with zeros to length n (partitions only ever get zero padding)."""
    parts = tuple(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise ValueError(f"{parts} has more than {n} nonzero parts")
        return parts[:n]
    return parts + (0,) * (n - len(parts))


def strip(parts) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def transpose_partition(parts) -> tuple[int, ...]:
    parts = strip(parts)
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > i) for i in range(parts[0]))


def _weak_rows(length: int, lo_bounds: list[int], n: int):
    """Weakly increasing rows of given length, entry k strictly above lo_bounds[k]."""
    def rec(k, prev):
        if k == length:
            yield ()
            return
        start = max(prev, lo_bounds[k] + 1)
        for v in range(start, n + 1):
            for rest in rec(k + 1, v):
                yield (v,) + rest
    return rec(0, 1)


def ssyt(shape, n: int):
    """Semistandard tableaux of a partition shape with entries in 1..n, as tuples of rows."""
    shape = strip(shape)
    if not is_partition(shape):
        return
    if not shape:
        yield ()
        return
    if len(shape) > n:
        return

    def rec(i, above):
        if i == len(shape):
            yield ()
            return
        for row in _weak_rows(shape[i], list(above[:shape[i]]), n):
            for rest in rec(i + 1, row):
                yield (row,) + rest

    yield from rec(0, (0,) * shape[0])


def ssyt_count(shape, n: int) -> int:
    """Number of semistandard tableaux; 0 when shape is not a partition."""
    if not is_partition(shape):
        return 0
    return sum(1 for _ in ssyt(shape, n))


def tableau_weight(tab, n: int) -> ExponentVector:
    w = [0] * n
    for row in tab:
        for v in row:
            w[v - 1] += 1
    return tuple(w)
