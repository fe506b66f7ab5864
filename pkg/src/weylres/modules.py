"""Two-row Weyl modules K_(a,b)V and Schur modules L_(a,b)V as explicit quotients.

K_(a,b)V is the cokernel of the box map

    sum_{l < b} D_{a+b-l} (x) D_l  --(Delta (x) 1, then 1 (x) m)-->  D_a (x) D_b

and L_(a,b)V is the same construction on exterior powers.  A quotient is
stored as the reduced row-echelon basis of the relation space inside the
ambient tensor product; its canonical coordinates are the non-pivot
("free") columns.  Relations are weight-homogeneous, so every reduced row
is too, and the free columns list each weight with its multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arith import check_prime
from .bases import Kind, TensorBasis, TensorWord, basis, check_kind, is_partition, tensor_index
from .hopf import coproduct, partial_images, product
from .linalg import FpMatrix, RowSpace, rowspace_of
from .symfunc import SymPolyInt, schur_expand


class RelationsNotPreserved(ValueError):
    """The raising map sends a relation of the source outside the target relations."""

    def __init__(self, witness: dict, residue: dict):
        self.witness = witness
        self.residue = residue
        super().__init__(f"relation {sorted(witness.items())[:6]}... leaves the target relation space")


def _shape(lam) -> tuple[int, int]:
    lam = tuple(lam)
    if len(lam) == 1:
        lam = lam + (0,)
    if len(lam) != 2:
        raise ValueError(f"expected a two-row shape, got {lam}")
    return lam  # type: ignore[return-value]


def box_relations(kind: Kind, lam, n: int, p: int) -> list[dict]:
    """Images in the ambient A_a (x) A_b of all relation generators, one dict per generator."""
    a, b = _shape(lam)
    if not is_partition((a, b)):
        raise ValueError(f"{(a, b)} is not a partition")
    check_kind(kind)
    amb = tensor_index(TensorWord.pair(kind, n, a, b))
    rows = []
    for ell in range(b):
        for x in basis(kind, n, a + b - ell):
            splits = coproduct(kind, x, a)
            for y in basis(kind, n, ell):
                row: dict[int, int] = {}
                for s, x1, x2 in splits:
                    c, z = product(kind, x2, y, p)
                    c = c * s % p
                    if c:
                        k = amb.index((x1, z))
                        v = (row.get(k, 0) + c) % p
                        if v:
                            row[k] = v
                        else:
                            row.pop(k)
                rows.append(row)
    return rows


def box_matrix(kind: Kind, lam, n: int, p: int) -> FpMatrix:
    """Matrix of the box map from the direct sum of relation spaces into A_a (x) A_b."""
    check_prime(p)
    a, b = _shape(lam)
    rows = box_relations(kind, (a, b), n, p)
    amb = tensor_index(TensorWord.pair(kind, n, a, b))
    return FpMatrix.from_columns(amb.dim, rows, p)


@dataclass(frozen=True)
class QuotientModule:
    kind: Kind
    shape: tuple[int, int]
    n: int
    p: int
    ambient: TensorBasis | None
    relations: RowSpace | None
    free_cols: tuple[int, ...]
    weights: tuple[tuple, ...]
    _free_pos: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.free_cols)

    @property
    def is_zero_by_convention(self) -> bool:
        return self.ambient is None

    def project(self, v: dict) -> dict:
        """Coordinates of the coset v + relations in the free-column basis."""
        if self.relations is None:
            return {}
        red = self.relations.reduce(v)
        pos = self._free_pos
        return {pos[j]: x for j, x in red.items()}

    def lift(self, k: int) -> dict:
        """Ambient representative of the k-th quotient basis vector."""
        return {self.free_cols[k]: 1}

    def label(self) -> str:
        letter = "K" if self.kind == "divided" else "L"
        return f"{letter}{self.shape}"


def zero_module(kind: Kind, lam, n: int, p: int) -> QuotientModule:
    return QuotientModule(kind, tuple(lam), n, p, None, None, (), ())


@lru_cache(maxsize=None)
def _build(kind: Kind, a: int, b: int, n: int, p: int) -> QuotientModule:
    if not is_partition((a, b)):
        return zero_module(kind, (a, b), n, p)
    amb = tensor_index(TensorWord.pair(kind, n, a, b))
    rels = rowspace_of(box_relations(kind, (a, b), n, p), amb.dim, p)
    pivots = set(rels.pivot_cols)
    free = tuple(j for j in range(amb.dim) if j not in pivots)
    all_w = amb.weights()
    return QuotientModule(kind, (a, b), n, p, amb, rels, free, tuple(all_w[j] for j in free),
                          {j: k for k, j in enumerate(free)})


def build_module(kind: Kind, lam, n: int, p: int) -> QuotientModule:
    """K_lam V (divided) or L_lam V (exterior); the zero module when lam is not a partition."""
    check_kind(kind)
    check_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    a, b = _shape(lam)
    return _build(kind, a, b, n, p)


def weyl_module(lam, n: int, p: int) -> QuotientModule:
    return build_module("divided", lam, n, p)


def schur_module(lam, n: int, p: int) -> QuotientModule:
    return build_module("exterior", lam, n, p)


def module_character(m: QuotientModule) -> SymPolyInt:
    out: dict[tuple, int] = {}
    for w in m.weights:
        out[w] = out.get(w, 0) + 1
    return SymPolyInt(m.n, out)


@lru_cache(maxsize=None)
def _induced(kind: Kind, a: int, b: int, d: int, n: int, p: int) -> FpMatrix:
    src = _build(kind, a, b, n, p)
    tgt = _build(kind, a + d, b - d, n, p)
    if src.dim == 0 or tgt.dim == 0:
        return FpMatrix.zeros(tgt.dim, src.dim, p)
    images = partial_images(kind, n, a, b, d, p)
    for c in src.relations.pivot_cols:
        row = src.relations.pivot_row(c)
        img: dict[int, int] = {}
        for j, x in row.items():
            for k, y in images[j].items():
                img[k] = (img.get(k, 0) + x * y) % p
        residue = tgt.relations.reduce(img)
        if residue:
            raise RelationsNotPreserved(dict(row), residue)
    cols = [tgt.project(images[f]) for f in src.free_cols]
    return FpMatrix.from_columns(tgt.dim, cols, p)


def induced_map(kind: Kind, lam, mu, d: int, n: int, p: int) -> FpMatrix:
    """Matrix, in quotient coordinates, of the map lam -> mu induced by raising d boxes.

    Raises RelationsNotPreserved when the raising map does not descend.
    """
    check_kind(kind)
    check_prime(p)
    a, b = _shape(lam)
    if d <= 0:
        raise ValueError("d must be positive")
    if _shape(mu) != (a + d, b - d):
        raise ValueError(f"mu must be {(a + d, b - d)} for lam={lam}, d={d}")
    return _induced(kind, a, b, d, n, p)


@dataclass(frozen=True)
class CPHypotheses:
    """Congruence data for a raising map between two-row shapes."""

    lam: tuple[int, int]
    d: int
    p: int
    e: int

    def __post_init__(self):
        object.__setattr__(self, "lam", _shape(self.lam))
        check_prime(self.p)
        if self.d <= 0 or self.e <= 0:
            raise ValueError("d and e must be positive")

    @property
    def mu(self) -> tuple[int, int]:
        a, b = self.lam
        return a + self.d, b - self.d

    def violations(self) -> list[str]:
        a, b = self.lam
        q = self.p ** self.e
        out = []
        if not is_partition(self.lam):
            out.append(f"lambda={self.lam} is not a partition")
        if not is_partition(self.mu):
            out.append(f"mu={self.mu} is not a partition")
        if not self.d < q:
            out.append(f"d={self.d} is not < p^e={q}")
        if (a - b + self.d + 1) % q:
            out.append(f"a-b+d+1={a - b + self.d + 1} is not 0 mod p^e={q}")
        return out

    @property
    def holds(self) -> bool:
        return not self.violations()


def hypotheses_exponent(lam, d: int, p: int) -> int | None:
    """Smallest e with d < p^e and p^e | a-b+d+1, or None."""
    a, b = _shape(lam)
    m = a - b + d + 1
    if m <= 0:
        return None
    e = 1
    while p ** e <= m:
        if d < p ** e and m % p ** e == 0:
            return e
        e += 1
    return None


@dataclass
class CPReport:
    kind: Kind
    n: int
    lam: tuple[int, int]
    mu: tuple[int, int]
    d: int
    p: int
    e: int
    hypotheses_hold: bool
    violations: list[str]
    well_defined: bool
    nonzero: bool
    rank: int
    side_condition: bool
    source_dim: int
    target_dim: int
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind, "n": self.n, "lambda": list(self.lam), "mu": list(self.mu),
            "d": self.d, "p": self.p, "e": self.e,
            "hypotheses_hold": self.hypotheses_hold, "violations": self.violations,
            "well_defined": self.well_defined, "nonzero": self.nonzero, "rank": self.rank,
            "side_condition": self.side_condition,
            "source_dim": self.source_dim, "target_dim": self.target_dim,
        }


def side_condition(kind: Kind, lam, d: int, n: int) -> bool:
    """When the induced map can be nonzero: n >= 2 for Weyl modules, a + d <= n for Schur modules."""
    a, _ = _shape(lam)
    return n >= 2 if kind == "divided" else a + d <= n


def carter_payne_certificate(h: CPHypotheses, n: int, kind: Kind = "divided") -> CPReport:
    check_kind(kind)
    src = build_module(kind, h.lam, n, h.p)
    tgt = build_module(kind, h.mu, n, h.p)
    witness = None
    try:
        mat = _induced(kind, h.lam[0], h.lam[1], h.d, n, h.p)
        well_defined = True
        rank = mat.rank()
    except RelationsNotPreserved as exc:
        well_defined = False
        rank = 0
        witness = exc.witness
    return CPReport(kind, n, h.lam, h.mu, h.d, h.p, h.e, h.holds, h.violations(),
                    well_defined, rank > 0, rank, side_condition(kind, h.lam, h.d, n),
                    src.dim, tgt.dim, witness)


def weyl_factor_multiplicities(char: SymPolyInt, n: int | None = None) -> dict[tuple, int]:
    if n is not None and char.n != n:
        raise ValueError(f"character has {char.n} variables, expected {n}")
    return schur_expand(char)
