"""Sweeps over parameter ranges, each producing claims for a report.

Each suite returns a list of Claim objects; a claim passes when every case
in its sweep passes, and otherwise records the first failing case.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from math import comb

from .arith import binom_exact, lucas
from .bases import KINDS, TensorWord, ssyt_count, tensor_index, transpose_partition
from .complexes import (build_complex, content_profiles, homology_profile, kernel_image_binomial_check,
                        twist_character_check)
from .hopf import comul_matrix, mul_matrix, partial_t_matrix
from .linalg import ComplexError, FpMatrix, kron
from .modules import (CPHypotheses, RelationsNotPreserved, build_module, carter_payne_certificate,
                      hypotheses_exponent, induced_map, module_character)
from .statements import STATEMENTS
from .symfunc import jacobi_trudi, schur_poly, verify_alternating_identity
from .wfd import wfd_report

PRIMES = (2, 3, 5)


@dataclass
class Claim:
    statement_id: str
    passed: bool
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.statement_id not in STATEMENTS:
            raise KeyError(f"unregistered statement id {self.statement_id!r}")

    def as_dict(self) -> dict:
        return {"statement_id": self.statement_id, "pass": self.passed, "values": self.values}


def sweep(statement_id: str, cases: Iterable[tuple[dict, bool]]) -> Claim:
    count = 0
    for params, ok in cases:
        count += 1
        if not ok:
            return Claim(statement_id, False, {"cases_checked": count, "first_counterexample": params})
    return Claim(statement_id, True, {"cases_checked": count})


# Hopf algebra maps


def _words(nmax: int, degmax: int) -> Iterator[tuple[str, int, int, int, int]]:
    for p in PRIMES:
        for kind in KINDS:
            for n in range(1, nmax + 1):
                for total in range(degmax + 1):
                    for b in range(total + 1):
                        yield kind, n, total - b, b, p


def _weights_ok(kind, n, a, b, t, m: FpMatrix) -> bool:
    src = tensor_index(TensorWord.pair(kind, n, a, b)).weights()
    tgt = tensor_index(TensorWord.pair(kind, n, a + t, b - t)).weights() if b >= t else []
    return all(tgt[i] == src[j] for i, j in m.entries())


def hopf_suite(nmax: int = 3, degmax: int = 8, coassoc_degmax: int = 6) -> list[Claim]:
    def composition():
        for kind, n, a, b, p in _words(nmax, degmax):
            for t in range(b + 1):
                pt = partial_t_matrix(kind, n, a, b, t, p)
                for s in range(b - t + 1):
                    lhs = partial_t_matrix(kind, n, a + t, b - t, s, p) @ pt
                    rhs = partial_t_matrix(kind, n, a, b, s + t, p).scale(lucas(p, s + t, t))
                    yield {"kind": kind, "n": n, "a": a, "b": b, "s": s, "t": t, "p": p}, lhs == rhs

    def commuting():
        for kind, n, a, b, p in _words(nmax, degmax):
            for t in range(b + 1):
                for s in range(b - t + 1):
                    st = partial_t_matrix(kind, n, a + t, b - t, s, p) @ partial_t_matrix(kind, n, a, b, t, p)
                    ts = partial_t_matrix(kind, n, a + s, b - s, t, p) @ partial_t_matrix(kind, n, a, b, s, p)
                    yield {"kind": kind, "n": n, "a": a, "b": b, "s": s, "t": t, "p": p}, st == ts

    def vanishing():
        for kind, n, a, b, p in _words(nmax, degmax):
            for t in range(1, p):
                u = p - t
                m1 = partial_t_matrix(kind, n, a + t, b - t, u, p) @ partial_t_matrix(kind, n, a, b, t, p) \
                    if b >= t else None
                m2 = partial_t_matrix(kind, n, a + u, b - u, t, p) @ partial_t_matrix(kind, n, a, b, u, p) \
                    if b >= u else None
                ok = (m1 is None or m1.is_zero()) and (m2 is None or m2.is_zero())
                yield {"kind": kind, "n": n, "a": a, "b": b, "t": t, "p": p}, ok

    def weights():
        for kind, n, a, b, p in _words(nmax, degmax):
            for t in range(b + 1):
                yield ({"kind": kind, "n": n, "a": a, "b": b, "t": t, "p": p},
                       _weights_ok(kind, n, a, b, t, partial_t_matrix(kind, n, a, b, t, p)))

    def _dim(kind, n, a):
        return tensor_index(TensorWord(((kind, a),), n)).dim

    def coassoc():
        for kind, n, total, _, p in _words(nmax, coassoc_degmax):
            for i in range(total + 1):
                for j in range(total - i + 1):
                    k = total - i - j
                    left = kron(comul_matrix(kind, n, i + j, (i, j), p), FpMatrix.identity(_dim(kind, n, k), p)) \
                        @ comul_matrix(kind, n, total, (i + j, k), p)
                    right = kron(FpMatrix.identity(_dim(kind, n, i), p), comul_matrix(kind, n, j + k, (j, k), p)) \
                        @ comul_matrix(kind, n, total, (i, j + k), p)
                    yield {"kind": kind, "n": n, "split": [i, j, k], "p": p}, left == right

    def assoc():
        for kind, n, total, _, p in _words(nmax, coassoc_degmax):
            for i in range(total + 1):
                for j in range(total - i + 1):
                    k = total - i - j
                    left = mul_matrix(kind, n, i + j, k, p) @ kron(mul_matrix(kind, n, i, j, p),
                                                                   FpMatrix.identity(_dim(kind, n, k), p))
                    right = mul_matrix(kind, n, i, j + k, p) @ kron(FpMatrix.identity(_dim(kind, n, i), p),
                                                                    mul_matrix(kind, n, j, k, p))
                    yield {"kind": kind, "n": n, "split": [i, j, k], "p": p}, left == right

    def ext_sign():
        for p in PRIMES:
            for n in range(1, nmax + 2):
                for total in range(n + 1):
                    for a in range(total + 1):
                        m = mul_matrix("exterior", n, a, total - a, p) @ comul_matrix("exterior", n, total,
                                                                                      (a, total - a), p)
                        want = FpMatrix.identity(m.nrows, p).scale(comb(total, a))
                        yield {"n": n, "a": a, "b": total - a, "p": p}, m == want

    return [sweep("hopf.composition_law", composition()),
            sweep("hopf.commuting_square", commuting()),
            sweep("hopf.vanishing_composite", vanishing()),
            sweep("hopf.weight_preservation", weights()),
            sweep("hopf.coassociativity", coassoc()),
            sweep("hopf.associativity", assoc()),
            sweep("hopf.exterior_sign", ext_sign())]


# modules


def _two_row(degmax: int) -> Iterator[tuple[int, int]]:
    for total in range(degmax + 1):
        for b in range(total // 2 + 1):
            yield total - b, b


def schur_dim_formula(n: int, a: int, b: int) -> int:
    return binom_exact(n, a) * binom_exact(n, b) - binom_exact(n, a + 1) * (binom_exact(n, b - 1) if b else 0)


def cp_cases(degmax: int, ns: Iterable[int]) -> Iterator[tuple[CPHypotheses, int]]:
    """Every hypothesis-satisfying (lambda, d, p) with both shapes two-row partitions."""
    ns = tuple(ns)
    for p in PRIMES:
        for a, b in _two_row(degmax):
            for d in range(1, b + 1):
                if a + d < b - d:
                    continue
                e = hypotheses_exponent((a, b), d, p)
                if e is None:
                    continue
                for n in ns:
                    yield CPHypotheses((a, b), d, p, e), n


def modules_suite(nmax: int = 4, degmax: int = 10, schur_nmax: int = 5, schur_rowmax: int = 6,
                  cp_degmax: int = 12, cp_ns: tuple[int, ...] = (2, 3)) -> list[Claim]:
    def weyl_dim():
        for p in PRIMES:
            for n in range(1, nmax + 1):
                for a, b in _two_row(degmax):
                    m = build_module("divided", (a, b), n, p)
                    yield {"shape": [a, b], "n": n, "p": p, "dim": m.dim}, m.dim == ssyt_count((a, b), n)

    def weyl_char():
        for p in PRIMES:
            for n in range(1, nmax + 1):
                for a, b in _two_row(degmax):
                    m = build_module("divided", (a, b), n, p)
                    yield {"shape": [a, b], "n": n, "p": p}, module_character(m) == schur_poly((a, b), n)

    def schur_char():
        for p in PRIMES:
            for n in range(1, schur_nmax + 1):
                for a, b in _two_row(2 * schur_rowmax):
                    if a > schur_rowmax:
                        continue
                    m = build_module("exterior", (a, b), n, p)
                    yield ({"shape": [a, b], "n": n, "p": p},
                           module_character(m) == schur_poly(transpose_partition((a, b)), n))

    def schur_dim():
        for p in PRIMES:
            for n in range(1, schur_nmax + 1):
                for a, b in _two_row(2 * schur_rowmax):
                    if a > schur_rowmax:
                        continue
                    m = build_module("exterior", (a, b), n, p)
                    want = schur_dim_formula(n, a, b)
                    yield {"shape": [a, b], "n": n, "p": p, "dim": m.dim, "formula": want}, m.dim == want

    def cp(kind):
        for h, n in cp_cases(cp_degmax, cp_ns):
            rep = carter_payne_certificate(h, n, kind)
            ok = rep.well_defined and (rep.nonzero == rep.side_condition if kind == "exterior" else rep.nonzero)
            yield {"lambda": list(h.lam), "d": h.d, "p": h.p, "e": h.e, "n": n}, ok

    def composite():
        for p in PRIMES:
            for n in cp_ns:
                for a, b in _two_row(cp_degmax):
                    for d in range(1, p):
                        if (a - b + d + 1) % p or b < p:
                            continue
                        mu, nu = (a + d, b - d), (a + p, b - p)
                        for kind in KINDS:
                            m1 = induced_map(kind, (a, b), mu, d, n, p)
                            m2 = induced_map(kind, mu, nu, p - d, n, p)
                            yield {"kind": kind, "lambda": [a, b], "d": d, "n": n, "p": p}, (m2 @ m1).is_zero()

    def induced_weights():
        for h, n in cp_cases(cp_degmax, cp_ns):
            for kind in KINDS:
                src, tgt = build_module(kind, h.lam, n, h.p), build_module(kind, h.mu, n, h.p)
                try:
                    m = induced_map(kind, h.lam, h.mu, h.d, n, h.p)
                except RelationsNotPreserved:
                    continue
                ok = all(tgt.weights[i] == src.weights[j] for i, j in m.entries())
                yield {"kind": kind, "lambda": list(h.lam), "d": h.d, "p": h.p, "n": n}, ok

    return [sweep("modules.weyl_dimension", weyl_dim()),
            sweep("modules.weyl_character", weyl_char()),
            sweep("modules.schur_dimension_formula", schur_dim()),
            sweep("modules.schur_character", schur_char()),
            sweep("modules.carter_payne_weyl", cp("divided")),
            sweep("modules.carter_payne_schur", cp("exterior")),
            sweep("modules.composite_vanishes", composite()),
            sweep("modules.induced_weights", induced_weights())]


# complexes


def valid_kl(p: int, rmax: int) -> Iterator[tuple[int, int]]:
    for r in range(rmax + 1):
        for d in range(1, p):
            if (r - d + 1) % p == 0:
                yield r, d


def _d_squared_ok(c) -> bool:
    try:
        c.check()
    except ComplexError:
        return False
    return True


def complexes_suite(nmax: int = 4, rmax_p2: int = 12, rmax_n2: int = 20, rmax_mn: int = 21,
                    identity_nmax: int = 12) -> list[Claim]:
    k_conc, k_dim, k_char = [], [], []
    l_conc, l_dim, l_char = [], [], []
    dsq, euler, content = [], [], []
    for n in range(1, nmax + 1):
        for r in range(0, rmax_p2 + 1, 2):
            half = r // 2
            for fam in ("K", "L"):
                params = {"family": fam, "r": r, "d": 1, "n": n, "p": 2}
                c = build_complex(fam, r, 1, n, 2, check=False)
                dsq.append((params, _d_squared_ok(c)))
                try:
                    prof = homology_profile(c)
                except ComplexError:
                    euler.append((params, False))
                    continue
                euler.append((params, True))
                params["profile"] = prof.dims
                cont = content_profiles(c)
                summed = [sum(v[i] for v in cont.values()) for i in range(len(prof.dims))]
                content.append((params, summed == prof.dims))
                if fam == "K":
                    k_conc.append((params, prof.concentrated_in(0)))
                    k_dim.append((params, prof.dims[0] == comb(n + half - 1, n - 1)))
                    k_char.append((params, twist_character_check(c)))
                else:
                    l_conc.append((params, prof.concentrated_in(half)))
                    l_dim.append((params, prof.dims[half] == comb(n, half)))
                    l_char.append((params, twist_character_check(c)))
    n2_conc, n2_ranks = [], []
    for p in (3, 5):
        for r, d in valid_kl(p, rmax_n2):
            c = build_complex("K", r, d, 2, p)
            prof = homology_profile(c)
            params = {"family": "K", "r": r, "d": d, "n": 2, "p": p, "profile": prof.dims}
            n2_conc.append((params, prof.concentrated_in(0)))
            n2_ranks.append((params, kernel_image_binomial_check(c)))
    mn_conc, mn_len = [], []
    for r in range(1, rmax_mn + 1, 2):
        fam = "M" if r % 4 == 1 else "N"
        c = build_complex(fam, r, 2, 2, 2)
        prof = homology_profile(c)
        params = {"family": fam, "r": r, "n": 2, "p": 2, "profile": prof.dims}
        mn_conc.append((params, prof.concentrated_in(0)))
        mn_len.append((params, c.length == r // 4))

    def sum_identity():
        for n in range(identity_nmax + 1):
            for k in range(n + 1):
                lhs = 2 * sum((-1) ** j * comb(n, k + j) * comb(n, k - j) for j in range(k + 1))
                yield {"n": n, "k": k}, lhs == comb(n, k) + comb(n, k) ** 2

    return [sweep("complex.d_squared", dsq), sweep("complex.euler", euler),
            sweep("complex.content_decomposition", content),
            sweep("complex.K.concentration", k_conc + n2_conc),
            sweep("complex.K.h0_dimension", k_dim), sweep("complex.K.h0_character", k_char),
            sweep("complex.L.concentration", l_conc), sweep("complex.L.top_dimension", l_dim),
            sweep("complex.L.top_character", l_char),
            sweep("complex.K.binomial_ranks", n2_ranks),
            sweep("complex.MN.concentration", mn_conc), sweep("complex.MN.length", mn_len),
            sweep("complex.schur_sum_identity", sum_identity())]


def identity_suite(kmax: int = 6, nmax: int = 4, jt_rowmax: int = 8) -> list[Claim]:
    def alternating():
        for k in range(kmax + 1):
            for n in range(1, nmax + 1):
                yield {"k": k, "n": n}, verify_alternating_identity(k, n)

    def jt():
        for n in range(1, nmax + 1):
            for a in range(jt_rowmax + 1):
                for b in range(a + 1):
                    yield {"shape": [a, b], "n": n}, schur_poly((a, b), n) == jacobi_trudi((a, b), n)

    return [sweep("identity.alternating", alternating()), sweep("identity.jacobi_trudi", jt())]


def wfd_suite(rmax: int = 30, primes: tuple[int, ...] = PRIMES) -> list[Claim]:
    reports = [wfd_report(p, r) for p in primes for r in range(rmax + 1)]

    def rows(pred):
        for rep in reports:
            yield {"p": rep.p, "r": rep.r, "theorem_value": rep.theorem_value,
                   "witness_length": rep.witness.length, "upper_bound": rep.upper_bound}, pred(rep)

    return [sweep("wfd.value", rows(lambda rep: rep.witness.length == rep.theorem_value)),
            sweep("wfd.sandwich", rows(lambda rep: rep.witness.length == rep.theorem_value == rep.upper_bound)),
            sweep("wfd.factor_check", rows(lambda rep: rep.witness.factor_holds)),
            sweep("wfd.witness_concentration", rows(lambda rep: rep.witness.concentrated))]


def arith_suite(mmax: int = 60) -> list[Claim]:
    def lucas_cases():
        for p in (2, 3, 5, 7):
            for m in range(mmax + 1):
                for k in range(m + 1):
                    yield {"p": p, "m": m, "k": k}, lucas(p, m, k) == comb(m, k) % p

    def vandermonde():
        for A in range(31):
            for B in range(31):
                for i in range(31):
                    lhs = sum(binom_exact(A, i - s) * binom_exact(B, s) for s in range(i + 1))
                    yield {"A": A, "B": B, "i": i}, lhs == binom_exact(A + B, i)

    return [sweep("arith.lucas", lucas_cases()), sweep("arith.vandermonde", vandermonde())]


SUITES = ("hopf", "modules", "complexes", "identity", "wfd")

SMALL = {
    "hopf": {"nmax": 2, "degmax": 5, "coassoc_degmax": 4},
    "modules": {"nmax": 3, "degmax": 6, "schur_nmax": 3, "schur_rowmax": 4, "cp_degmax": 8},
    "complexes": {"nmax": 3, "rmax_p2": 8, "rmax_n2": 12, "rmax_mn": 13},
    "identity": {"kmax": 4, "nmax": 3, "jt_rowmax": 5},
    "wfd": {"rmax": 15},
}


def run_suite(name: str, **bounds) -> list[Claim]:
    funcs = {"hopf": hopf_suite, "modules": modules_suite, "complexes": complexes_suite,
             "identity": lambda **kw: arith_suite() + identity_suite(**kw), "wfd": wfd_suite}
    return funcs[name](**bounds)
