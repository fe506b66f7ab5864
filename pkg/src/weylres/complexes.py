"""Chain complexes of two-row Weyl/Schur modules with raising-map differentials.

Families (degree 0 is the rightmost term):

* ``K`` / ``L`` with parameters (r, d), 0 < d < p, r - d + 1 = 0 mod p:
  degree 2i holds shape (r - ip, ip), degree 2i+1 holds (r - ip - d, ip + d);
  odd degrees map down by raising d boxes, even degrees by raising p - d.
  ``K`` uses Weyl modules, ``L`` Schur modules.
* ``M`` (p = 2, r = 1 mod 4): degree i holds (r - 2i, 2i), raising 2 boxes.
* ``N`` (p = 2, r = 3 mod 4): degree i holds (r - 2i - 1, 2i + 1), raising 2 boxes.

Terms stop at the first shape that is not a partition.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable
from dataclasses import dataclass, field

from .arith import check_prime, lucas
from .linalg import ComplexError, FpMatrix, homology_dim
from .modules import QuotientModule, build_module, induced_map
from .symfunc import SymPolyInt, complete_h, elementary_e, power_substitute

FAMILIES = ("K", "L", "M", "N")


class ComplexParameterError(ValueError):
    pass


@dataclass
class ChainComplexRec:
    """terms[i] sits in homological degree i; diffs[i] : terms[i] -> terms[i-1].

    diffs[0] is the zero map from terms[0] to the zero space.  ``steps[i]`` is
    the number of boxes raised by diffs[i] (0 for diffs[0]).
    """

    family: str
    params: dict
    terms: list[QuotientModule]
    diffs: list[FpMatrix]
    shapes: list[tuple[int, int]]
    steps: list[int] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    @property
    def n(self) -> int:
        return self.params["n"]

    @property
    def p(self) -> int:
        return self.params["p"]

    def term_dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    def incoming(self, i: int) -> FpMatrix:
        if i + 1 < len(self.terms):
            return self.diffs[i + 1]
        return FpMatrix.zeros(self.terms[i].dim, 0, self.p)

    def check(self) -> None:
        """Raise ComplexError unless d.d = 0 and every differential preserves weight."""
        for i in range(1, len(self.diffs)):
            prev = self.diffs[i - 1]
            if not (prev @ self.diffs[i]).is_zero():
                raise ComplexError(f"{self.family}{self.params}: d{i - 1} . d{i} != 0")
        for i in range(1, len(self.diffs)):
            src, tgt = self.terms[i], self.terms[i - 1]
            for (row, col) in self.diffs[i].entries():
                if tgt.weights[row] != src.weights[col]:
                    raise ComplexError(f"{self.family}{self.params}: d{i} does not preserve weight")


def _kl_shapes(r: int, d: int, p: int) -> list[tuple[tuple[int, int], int]]:
    out = []
    j = 0
    while True:
        i, odd = divmod(j, 2)
        b = i * p + (d if odd else 0)
        shape = (r - b, b)
        if shape[0] < shape[1]:
            break
        step = 0 if j == 0 else (d if odd else p - d)
        out.append((shape, step))
        j += 1
    return out


def family_shapes(family: str, r: int, d: int, p: int) -> list[tuple[tuple[int, int], int]]:
    """[(shape, boxes raised by the outgoing differential)] by degree, after checking parameters."""
    check_prime(p)
    if family not in FAMILIES:
        raise ComplexParameterError(f"family must be one of {FAMILIES}, got {family!r}")
    if r < 0:
        raise ComplexParameterError("r must be nonnegative")
    if family in ("K", "L"):
        if not 0 < d < p:
            raise ComplexParameterError(f"need 0 < d < p, got d={d}, p={p}")
        if (r - d + 1) % p:
            raise ComplexParameterError(
                f"need r - d + 1 = 0 mod p: r - d + 1 = {r - d + 1} is not 0 mod {p}")
        shapes = _kl_shapes(r, d, p)
        assert len(shapes) - 1 == r // p
        return shapes
    if p != 2:
        raise ComplexParameterError(f"family {family} needs p = 2, got p={p}")
    want = 1 if family == "M" else 3
    if r % 4 != want:
        raise ComplexParameterError(f"family {family} needs r = {want} mod 4: r = {r} is {r % 4} mod 4")
    if d != 2:
        raise ComplexParameterError(f"family {family} raises d = 2 boxes, got d={d}")
    offset = 0 if family == "M" else 1
    out = []
    i = 0
    while True:
        b = 2 * i + offset
        shape = (r - b, b)
        if shape[0] < shape[1]:
            break
        out.append((shape, 0 if i == 0 else 2))
        i += 1
    assert len(out) - 1 == r // 4
    return out


def build_complex(family: str, r: int, d: int, n: int, p: int, *, check: bool = True) -> ChainComplexRec:
    shapes = family_shapes(family, r, d, p)
    kind = "exterior" if family == "L" else "divided"
    terms = [build_module(kind, s, n, p) for s, _ in shapes]
    diffs = [FpMatrix.zeros(0, terms[0].dim, p)]
    for i in range(1, len(shapes)):
        (lam, t) = shapes[i]
        mu = shapes[i - 1][0]
        diffs.append(induced_map(kind, lam, mu, t, n, p))
    c = ChainComplexRec(family, {"r": r, "d": d, "n": n, "p": p}, terms, diffs,
                        [s for s, _ in shapes], [t for _, t in shapes])
    if check:
        c.check()
    return c


@dataclass
class HomologyProfile:
    dims: list[int]
    euler: int
    term_dims: list[int]

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.dims) if x]

    def concentrated_in(self, degree: int) -> bool:
        return all(x == 0 for i, x in enumerate(self.dims) if i != degree)


def homology_profile(c: ChainComplexRec) -> HomologyProfile:
    dims = [homology_dim(c.incoming(i), c.diffs[i]) for i in range(len(c.terms))]
    term_dims = c.term_dims()
    euler_terms = sum((-1) ** i * x for i, x in enumerate(term_dims))
    euler = sum((-1) ** i * x for i, x in enumerate(dims))
    if euler != euler_terms:
        raise ComplexError(f"Euler characteristic mismatch: terms {euler_terms}, homology {euler}")
    return HomologyProfile(dims, euler, term_dims)


def _block_rank(m: FpMatrix, rows: list[int], cols: list[int]) -> int:
    if not rows or not cols:
        return 0
    return m.submatrix(rows, cols).rank()


def graded_homology(c: ChainComplexRec, grade: Callable[[tuple], object]) -> dict[object, list[int]]:
    """Homology dims of each graded piece, for a grading by a function of the weight.

    Every differential is weight preserving, so restricting rows and columns
    to one grade gives a subcomplex.
    """
    blocks = []
    keys = set()
    for t in c.terms:
        g = defaultdict(list)
        for k, w in enumerate(t.weights):
            g[grade(w)].append(k)
        blocks.append(g)
        keys.update(g)
    out = {}
    for key in sorted(keys):
        dims = []
        for i, t in enumerate(c.terms):
            here = blocks[i].get(key, [])
            out_rank = _block_rank(c.diffs[i], blocks[i - 1].get(key, []), here) if i > 0 else 0
            in_rank = (_block_rank(c.diffs[i + 1], here, blocks[i + 1].get(key, []))
                       if i + 1 < len(c.terms) else 0)
            dims.append(len(here) - out_rank - in_rank)
        out[key] = dims
    return out


def homology_character(c: ChainComplexRec, degree: int) -> SymPolyInt:
    per_weight = graded_homology(c, lambda w: w)
    return SymPolyInt(c.n, {w: dims[degree] for w, dims in per_weight.items() if dims[degree]})


def content_profiles(c: ChainComplexRec) -> dict[int, list[int]]:
    """Homology dims of the subcomplexes of fixed x_n-content."""
    return graded_homology(c, lambda w: w[-1])


def twist_character_check(c: ChainComplexRec) -> bool:
    """Surviving homology of K_*(r,1) / L_*(r,1) at p = 2 has the twisted character.

    K: char H_0 = h_{r/2}(x_1^2, ..., x_n^2).  L: char H_{r/2} = e_{r/2}(x_1^2, ..., x_n^2).
    """
    if c.family not in ("K", "L") or c.p != 2 or c.params["d"] != 1:
        raise ValueError("twist character check needs family K or L with p = 2, d = 1")
    half = c.params["r"] // 2
    if c.family == "K":
        return homology_character(c, 0) == power_substitute(complete_h(half, c.n), 2)
    return homology_character(c, half) == power_substitute(elementary_e(half, c.n), 2)


def predicted_ranks(c: ChainComplexRec) -> list[tuple[int, int, int]]:
    """For n = 2: (degree, predicted nullity, predicted rank) of each differential.

    For two variables the standard tableau x^(a) y^(b) | y^(c) of shape (A, B)
    has b in [0, A - B], and raising t boxes sends it to binom(b + t, t) times
    a standard tableau, distinct tableaux going to distinct tableaux.
    """
    if c.n != 2:
        raise ValueError("the binomial kernel/image description needs n = 2")
    p = c.p
    out = []
    for i in range(1, len(c.terms)):
        A, B = c.shapes[i]
        t = c.steps[i]
        null = sum(1 for b in range(A - B + 1) if lucas(p, b + t, t) == 0)
        out.append((i, null, A - B + 1 - null))
    return out


def kernel_image_binomial_check(c: ChainComplexRec) -> bool:
    if c.family not in ("K", "M", "N"):
        raise ValueError("binomial kernel/image check applies to Weyl-module families")
    for i, null, rank in predicted_ranks(c):
        actual = c.diffs[i].rank()
        if actual != rank or c.terms[i].dim - actual != null:
            return False
    return True


def build_checked_profile(family: str, r: int, d: int, n: int, p: int) -> tuple[ChainComplexRec, HomologyProfile]:
    c = build_complex(family, r, d, n, p)
    return c, homology_profile(c)
