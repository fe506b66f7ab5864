"""Symmetric polynomials with integer coefficients in n variables.

Used for formal characters: Schur polynomials, complete and elementary
symmetric polynomials, the substitution x_i -> x_i^q, and expansion in the
Schur basis.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from functools import lru_cache

from .bases import divided_basis, exterior_basis, is_partition, ssyt, strip, tableau_weight


class NonSymmetric(ValueError):
    pass


class SymPolyInt:
    """A polynomial in x_1..x_n with integer coefficients, keyed by exponent tuples.

    Symmetry is not enforced at construction; call ``is_symmetric``.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[tuple, int] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.coeffs: dict[tuple, int] = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != n or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {n} variables")
            if c:
                self.coeffs[e] = self.coeffs.get(e, 0) + c
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    @classmethod
    def zero(cls, n: int) -> SymPolyInt:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> SymPolyInt:
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exps, coeff: int = 1) -> SymPolyInt:
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    def _check(self, other: SymPolyInt):
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: SymPolyInt) -> SymPolyInt:
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return SymPolyInt(self.n, out)

    def __neg__(self) -> SymPolyInt:
        return SymPolyInt(self.n, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: SymPolyInt) -> SymPolyInt:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymPolyInt(self.n, {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymPolyInt(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPolyInt):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def shift(self, exps) -> SymPolyInt:
        """Multiply by the monomial x^exps."""
        exps = tuple(exps)
        return SymPolyInt(self.n, {tuple(x + y for x, y in zip(e, exps)): c for e, c in self.coeffs.items()})

    def evaluate(self, point) -> int:
        total = 0
        for e, c in self.coeffs.items():
            term = c
            for x, k in zip(point, e):
                term *= x ** k
            total += term
        return total

    def at_ones(self) -> int:
        return sum(self.coeffs.values())

    def is_symmetric(self) -> bool:
        for e, c in self.coeffs.items():
            for perm in set(itertools.permutations(e)):
                if self.coeffs.get(perm, 0) != c:
                    return False
        return True

    def degree_set(self) -> set[int]:
        return {sum(e) for e in self.coeffs}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = "xyzwuvst" if self.n <= 8 else None
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = []
            for i, k in enumerate(e):
                if k:
                    v = names[i] if names else f"x{i + 1}"
                    mono.append(v if k == 1 else f"{v}^{k}")
            body = "*".join(mono) or "1"
            terms.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(terms)


def complete_h(k: int, n: int) -> SymPolyInt:
    """Complete homogeneous symmetric polynomial h_k(x_1..x_n); h_k = 0 for k < 0."""
    if k < 0:
        return SymPolyInt.zero(n)
    return SymPolyInt(n, {e: 1 for e in divided_basis(n, k)})


def elementary_e(k: int, n: int) -> SymPolyInt:
    if k < 0 or k > n:
        return SymPolyInt.zero(n)
    out = {}
    for s in exterior_basis(n, k):
        w = [0] * n
        for i in s:
            w[i - 1] = 1
        out[tuple(w)] = 1
    return SymPolyInt(n, out)


@lru_cache(maxsize=None)
def _schur(shape: tuple, n: int) -> SymPolyInt:
    out: dict[tuple, int] = {}
    for tab in ssyt(shape, n):
        w = tableau_weight(tab, n)
        out[w] = out.get(w, 0) + 1
    return SymPolyInt(n, out)


def schur_poly(shape, n: int) -> SymPolyInt:
    """Schur polynomial as the weight generating function of semistandard tableaux."""
    shape = strip(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    return _schur(shape, n)


def jacobi_trudi(shape, n: int) -> SymPolyInt:
    """det(h_{shape_i - i + j}), computed by the Leibniz expansion."""
    shape = strip(shape)
    ell = len(shape)
    if ell == 0:
        return SymPolyInt.one(n)
    hs = {}

    def h(k):
        if k not in hs:
            hs[k] = complete_h(k, n)
        return hs[k]

    total = SymPolyInt.zero(n)
    for perm in itertools.permutations(range(ell)):
        inv = sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
        term = SymPolyInt.one(n)
        for i, j in enumerate(perm):
            term = term * h(shape[i] - i + j)
            if not term:
                break
        if term:
            total = total + (term * (-1 if inv % 2 else 1))
    return total


def power_substitute(f: SymPolyInt, q: int) -> SymPolyInt:
    """f(x_1^q, ..., x_n^q)."""
    if q < 1:
        raise ValueError("exponent must be positive")
    return SymPolyInt(f.n, {tuple(q * x for x in e): c for e, c in f.coeffs.items()})


def schur_expand(f: SymPolyInt) -> dict[tuple, int]:
    """Coefficients c_shape with f = sum c_shape * s_shape.

    Repeatedly peels off the lexicographically largest monomial, which for a
    symmetric polynomial is a dominant weight, i.e. a partition.
    """
    if not f.is_symmetric():
        raise NonSymmetric("polynomial is not symmetric")
    out: dict[tuple, int] = {}
    rest = f
    while rest:
        lead = max(rest.coeffs)
        shape = strip(lead)
        c = rest.coeffs[lead]
        out[shape] = c
        rest = rest - schur_poly(shape, f.n) * c
    return out


def from_schur(coeffs: Mapping[tuple, int], n: int) -> SymPolyInt:
    total = SymPolyInt.zero(n)
    for shape, c in coeffs.items():
        total = total + schur_poly(shape, n) * c
    return total


def alternating_sides(k: int, n: int) -> tuple[SymPolyInt, SymPolyInt]:
    """(h_k(x_1^2, ..., x_n^2), sum_j (-1)^j s_{(2k-j, j)})."""
    lhs = power_substitute(complete_h(k, n), 2)
    rhs = SymPolyInt.zero(n)
    for j in range(k + 1):
        rhs = rhs + schur_poly((2 * k - j, j), n) * (-1) ** j
    return lhs, rhs


def verify_alternating_identity(k: int, n: int) -> bool:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    lhs, rhs = alternating_sides(k, n)
    return lhs == rhs

