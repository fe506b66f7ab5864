"""Weyl filtration dimension of S(2, r): closed form, digit upper bound, witness complexes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import base_digits, check_prime
from .complexes import ChainComplexRec, build_complex, homology_profile
from .modules import module_character, weyl_factor_multiplicities


def wfd_value(p: int, r: int) -> int:
    check_prime(p)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if p == 2:
        return r // 2 if r % 2 == 0 else r // 4
    return r // p


def upper_bound_twist(p: int, c: int, m: int) -> int:
    """Bound p^(m-1) * c on the m-th Frobenius twist of a two-row Weyl module with c = a - b."""
    check_prime(p)
    if c < 0 or m < 1:
        raise ValueError("need c >= 0 and m >= 1")
    return p ** (m - 1) * c


@dataclass(frozen=True)
class SimpleBound:
    shape: tuple[int, int]
    c: int
    bound: int
    exact: Fraction  # the unfloored digit sum


def simple_module_bound(p: int, r: int, b: int) -> SimpleBound:
    """Digit bound for the simple module of highest weight (r - b, b).

    Generic case: c = sum c_i p^(n_i) contributes c_i p^(n_i - 1) per digit; the
    unit digit gives a Weyl module and contributes nothing.  For p = 2 and r
    odd, c = 1 + 2^(n_1) + ... and each n_i contributes 2^(n_i - 2), with the
    half-integer from n_i = 1 floored away.
    """
    a = r - b
    if a < b or b < 0:
        raise ValueError(f"{(a, b)} is not a partition")
    c = a - b
    digits = base_digits(c, p)
    if p == 2 and r % 2:
        exact = Fraction(c - 1, 4)
        bound = sum(2 ** (i - 2) for i, x in enumerate(digits) if x and i >= 2)
    else:
        exact = Fraction(c, p)
        bound = sum(x * p ** (i - 1) for i, x in enumerate(digits) if x and i >= 1)
    return SimpleBound((a, b), c, bound, exact)


def upper_bound_simple(p: int, r: int) -> int:
    """Maximum of the digit bound over all simple modules of S(2, r)."""
    check_prime(p)
    return max(simple_module_bound(p, r, b).bound for b in range(r // 2 + 1))


@dataclass
class Witness:
    family: str
    r: int
    d: int
    shift: int  # tensor with the one-dimensional K_(s,s)V
    complex: ChainComplexRec
    length: int
    concentrated: bool
    factor_holds: bool

    def as_dict(self) -> dict:
        return {"family": self.family, "r": self.r, "d": self.d, "n": 2, "p": self.complex.p,
                "shift": self.shift, "length": self.length, "shapes": [list(s) for s in self.complex.shapes],
                "concentrated": self.concentrated, "factor_check": self.factor_holds}


def witness_params(p: int, r: int) -> tuple[str, int, int, int]:
    """(family, r, d, shift) of the complex exhibiting the lower bound."""
    check_prime(p)
    if p == 2:
        if r % 2 == 0:
            return "K", r, 1, 0
        return ("M" if r % 4 == 1 else "N"), r, 2, 0
    r1, r0 = divmod(r, p)
    s, t = divmod(r0, 2)
    return "K", p * r1 + t, 1 + t, s


def weyl_factor_check(c: ChainComplexRec, shift: int = 0) -> bool:
    """The top term has a Weyl factor that is not a factor of the term below it.

    ``shift`` tensors every term with K_(s,s)V, a one-dimensional module for
    n = 2, which translates every character by (xy)^s.
    """
    if shift and c.n != 2:
        raise ValueError("a one-dimensional (s, s) shift only makes sense for n = 2")
    sh = (shift, shift)

    def factors(term):
        ch = module_character(term)
        if shift:
            ch = ch.shift(sh)
        return weyl_factor_multiplicities(ch)

    top = factors(c.terms[-1])
    below = factors(c.terms[-2]) if len(c.terms) > 1 else {}
    return any(m > 0 and below.get(lam, 0) == 0 for lam, m in top.items())


def lower_bound_witness(p: int, r: int) -> Witness:
    family, rr, d, s = witness_params(p, r)
    c = build_complex(family, rr, d, 2, p)
    prof = homology_profile(c)
    return Witness(family, rr, d, s, c, c.length, prof.concentrated_in(0), weyl_factor_check(c, s))


@dataclass
class WfdReport:
    p: int
    r: int
    theorem_value: int
    upper_bound: int
    witness: Witness

    @property
    def agree(self) -> bool:
        w = self.witness
        return (w.length == self.theorem_value == self.upper_bound
                and w.concentrated and w.factor_holds)

    def as_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "theorem_value": self.theorem_value,
                "witness_length": self.witness.length, "upper_bound": self.upper_bound,
                "agree": self.agree, "witness": self.witness.as_dict()}


def wfd_report(p: int, r: int) -> WfdReport:
    return WfdReport(p, r, wfd_value(p, r), upper_bound_simple(p, r), lower_bound_witness(p, r))
