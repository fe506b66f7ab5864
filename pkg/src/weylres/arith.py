"""Prime-field scalars and binomial coefficients (exact and mod p)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be a prime >= 2, got {p!r}")
    return p


@dataclass(frozen=True)
class FpScalar:
    """An element of GF(p), stored as its representative in [0, p)."""

    value: int
    modulus: int

    def __post_init__(self):
        check_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FpScalar):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        return int(other)

    def __add__(self, other):
        return FpScalar(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return FpScalar(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return FpScalar(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return FpScalar(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.modulus)

    def inverse(self) -> FpScalar:
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p)")
        return FpScalar(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


def binom_exact(m: int, k: int) -> int:
    """binom(m, k) as a Python integer; zero when k is out of [0, m]."""
    if m < 0:
        raise ValueError(f"binom_exact needs m >= 0, got {m}")
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


@lru_cache(maxsize=None)
def _small_binom_table(p: int) -> tuple[tuple[int, ...], ...]:
    # binom(i, j) mod p for 0 <= j <= i < p
    return tuple(tuple(math.comb(i, j) % p for j in range(i + 1)) for i in range(p))


def lucas(p: int, m: int, k: int) -> int:
    """binom(m, k) mod p as a plain int, by the base-p digit product."""
    if k < 0 or k > m:
        return 0
    table = _small_binom_table(p)
    out = 1
    while m or k:
        mi, ki = m % p, k % p
        if ki > mi:
            return 0
        out = out * table[mi][ki] % p
        m //= p
        k //= p
    return out


def binom_mod_p(p: int, m: int, k: int) -> FpScalar:
    if m < 0:
        raise ValueError(f"binom_mod_p needs m >= 0, got {m}")
    return FpScalar(lucas(check_prime(p), m, k), p)


def base_digits(c: int, p: int) -> list[int]:
    """Base-p digits of c >= 0, least significant first ([] for c == 0)."""
    digits = []
    while c:
        c, rem = divmod(c, p)
        digits.append(rem)
    return digits
