"""Exact sparse linear algebra over GF(p).

Matrices follow the column convention: the matrix of a map U -> W has
shape (dim W, dim U) and its j-th column is the image of the j-th basis
vector of U.  Rows are stored sparsely as ``{col: value}`` dicts holding
only nonzero representatives in ``[1, p)``.

For p = 2 the reduction runs on rows packed into Python ints; the dict
path is kept as the reference and both must agree (see the tests).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .arith import check_prime


class ComplexError(ValueError):
    """Two maps that were supposed to compose to zero do not."""


Row = dict  # {col: nonzero value mod p}


def _clean(row: Mapping[int, int], p: int, cols: int) -> Row:
    out = {}
    for j, v in row.items():
        if not 0 <= j < cols:
            raise IndexError(f"column {j} out of range [0, {cols})")
        v %= p
        if v:
            out[j] = v
    return out


class FpMatrix:
    """Immutable sparse matrix over GF(p)."""

    __slots__ = ("nrows", "ncols", "p", "_rows")

    def __init__(self, nrows: int, ncols: int, p: int, rows: Iterable[Mapping[int, int]] | None = None,
                 *, _trusted: bool = False):
        check_prime(p)
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        self.p = p
        if rows is None:
            self._rows = tuple({} for _ in range(nrows))
        elif _trusted:
            self._rows = tuple(rows)
        else:
            self._rows = tuple(_clean(r, p, ncols) for r in rows)
        if len(self._rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(self._rows)}")

    # construction helpers

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> FpMatrix:
        return cls(nrows, ncols, p)

    @classmethod
    def identity(cls, n: int, p: int) -> FpMatrix:
        return cls(n, n, p, ({i: 1} for i in range(n)), _trusted=True)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> FpMatrix:
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged dense matrix")
            rows.append({j: v for j, v in enumerate(r)})
        return cls(len(rows), ncols, p, rows)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, p: int, entries: Mapping[tuple[int, int], int]) -> FpMatrix:
        rows = [{} for _ in range(nrows)]
        for (i, j), v in entries.items():
            if not 0 <= i < nrows:
                raise IndexError(f"row {i} out of range [0, {nrows})")
            rows[i][j] = v
        return cls(nrows, ncols, p, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, int]], p: int) -> FpMatrix:
        """Matrix whose j-th column is the sparse vector ``columns[j]``."""
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                v %= p
                if v:
                    rows[i][j] = v
        return cls(nrows, len(columns), p, rows, _trusted=True)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._rows[i].get(j, 0)

    def row(self, i: int) -> Row:
        return dict(self._rows[i])

    def entries(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for i, r in enumerate(self._rows) for j, v in r.items()}

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def to_dense(self) -> list[list[int]]:
        out = []
        for r in self._rows:
            dense = [0] * self.ncols
            for j, v in r.items():
                dense[j] = v
            out.append(dense)
        return out

    def column(self, j: int) -> Row:
        return {i: r[j] for i, r in enumerate(self._rows) if j in r}

    # arithmetic

    def transpose(self) -> FpMatrix:
        rows = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                rows[j][i] = v
        return FpMatrix(self.ncols, self.nrows, self.p, rows, _trusted=True)

    T = property(transpose)

    def _check_compatible(self, other: FpMatrix):
        if self.p != other.p:
            raise ValueError(f"moduli differ: {self.p} vs {other.p}")

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        self._check_compatible(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.p
        rows = []
        for r in self._rows:
            acc: dict[int, int] = {}
            for k, a in r.items():
                for j, b in other._rows[k].items():
                    acc[j] = (acc.get(j, 0) + a * b) % p
            rows.append({j: v for j, v in acc.items() if v})
        return FpMatrix(self.nrows, other.ncols, p, rows, _trusted=True)

    def scale(self, c: int) -> FpMatrix:
        c %= self.p
        if c == 0:
            return FpMatrix.zeros(self.nrows, self.ncols, self.p)
        return FpMatrix(self.nrows, self.ncols, self.p,
                        ({j: v * c % self.p for j, v in r.items()} for r in self._rows), _trusted=True)

    def __add__(self, other: FpMatrix) -> FpMatrix:
        self._check_compatible(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        p = self.p
        rows = []
        for r, s in zip(self._rows, other._rows):
            acc = dict(r)
            for j, v in s.items():
                acc[j] = (acc.get(j, 0) + v) % p
            rows.append({j: v for j, v in acc.items() if v})
        return FpMatrix(self.nrows, self.ncols, p, rows, _trusted=True)

    def __sub__(self, other: FpMatrix) -> FpMatrix:
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.shape == other.shape and self.p == other.p and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self.p, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> FpMatrix:
        col_pos = {c: k for k, c in enumerate(col_idx)}
        rows = []
        for i in row_idx:
            rows.append({col_pos[j]: v for j, v in self._rows[i].items() if j in col_pos})
        return FpMatrix(len(row_idx), len(col_idx), self.p, rows, _trusted=True)

    def permute_columns(self, perm: Sequence[int]) -> FpMatrix:
        """Column j of the result is column perm[j] of self."""
        inv = {c: k for k, c in enumerate(perm)}
        return FpMatrix(self.nrows, self.ncols, self.p,
                        ({inv[j]: v for j, v in r.items()} for r in self._rows), _trusted=True)

    def permute_rows(self, perm: Sequence[int]) -> FpMatrix:
        return FpMatrix(self.nrows, self.ncols, self.p, (self._rows[i] for i in perm), _trusted=True)

    def rank(self) -> int:
        return len(rref(self).pivot_cols)

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def __repr__(self):
        return f"FpMatrix({self.nrows}x{self.ncols}, p={self.p}, nnz={self.nnz()})"


@dataclass(frozen=True)
class RowSpace:
    """A subspace of GF(p)^cols held as a reduced row-echelon basis."""

    matrix: FpMatrix
    pivot_cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_by_pivot", dict(zip(self.pivot_cols, self.matrix._rows)))

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    @property
    def ncols(self) -> int:
        return self.matrix.ncols

    @property
    def p(self) -> int:
        return self.matrix.p

    def pivot_row(self, col: int) -> Row:
        return self._by_pivot[col]

    def reduce(self, v: Mapping[int, int]) -> Row:
        """Return v minus its component along the pivot rows (zero on every pivot)."""
        p = self.p
        by_pivot = self._by_pivot
        out = {j: x % p for j, x in v.items() if x % p}
        for c in [c for c in out if c in by_pivot]:
            coef = out.get(c, 0)
            if not coef:
                continue
            for j, x in by_pivot[c].items():
                y = (out.get(j, 0) - coef * x) % p
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)


def _as_sparse(v, ncols: int) -> Row:
    if isinstance(v, Mapping):
        for j in v:
            if not 0 <= j < ncols:
                raise ValueError(f"vector index {j} out of range for dimension {ncols}")
        return dict(v)
    if len(v) != ncols:
        raise ValueError(f"vector has length {len(v)}, subspace lives in dimension {ncols}")
    return {j: int(x) for j, x in enumerate(v) if int(x)}


def _rref_sparse(m: FpMatrix) -> tuple[list[int], dict[int, Row]]:
    p = m.p
    pivots: dict[int, Row] = {}
    for src in m._rows:
        if not src:
            continue
        r = dict(src)
        while r:
            c = min(r)
            if c in pivots:
                coef = r[c]
                for j, x in pivots[c].items():
                    y = (r.get(j, 0) - coef * x) % p
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
            else:
                inv = pow(r[c], -1, p)
                if inv != 1:
                    r = {j: x * inv % p for j, x in r.items()}
                pivots[c] = r
                break
    order = sorted(pivots)
    for c in reversed(order):
        r = pivots[c]
        for j in sorted(j for j in r if j != c and j in pivots):
            coef = r.get(j, 0)
            if not coef:
                continue
            for k, x in pivots[j].items():
                y = (r.get(k, 0) - coef * x) % p
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)
    return order, pivots


def _rref_gf2(m: FpMatrix) -> tuple[list[int], dict[int, Row]]:
    pivots: dict[int, int] = {}
    for src in m._rows:
        if not src:
            continue
        x = 0
        for j in src:
            x |= 1 << j
        while x:
            c = (x & -x).bit_length() - 1
            if c in pivots:
                x ^= pivots[c]
            else:
                pivots[c] = x
                break
    mask = 0
    for c in pivots:
        mask |= 1 << c
    order = sorted(pivots)
    for c in reversed(order):
        x = pivots[c]
        other = x & mask & ~(1 << c)
        while other:
            low = other & -other
            x ^= pivots[low.bit_length() - 1]
            other ^= low
        pivots[c] = x
    rows = {}
    for c, x in pivots.items():
        row = {}
        while x:
            low = x & -x
            row[low.bit_length() - 1] = 1
            x ^= low
        rows[c] = row
    return order, rows


def rref(m: FpMatrix, *, packed: bool | None = None) -> RowSpace:
    """Reduced row-echelon basis of the row space of m.

    ``packed`` forces (True) or forbids (False) the bit-packed GF(2) path;
    by default it is used whenever p == 2.
    """
    if packed is None:
        packed = m.p == 2
    if packed and m.p != 2:
        raise ValueError("bit-packed elimination is only defined over GF(2)")
    order, pivots = (_rref_gf2 if packed else _rref_sparse)(m)
    mat = FpMatrix(len(order), m.ncols, m.p, (pivots[c] for c in order), _trusted=True)
    return RowSpace(mat, tuple(order))


def rowspace_of(rows: Iterable[Mapping[int, int]], ncols: int, p: int) -> RowSpace:
    rows = list(rows)
    return rref(FpMatrix(len(rows), ncols, p, rows))


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Rows form a basis of {x : m x = 0}."""
    rs = rref(m)
    p = m.p
    pivot_set = set(rs.pivot_cols)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    vecs = {f: {f: 1} for f in free}
    for c in rs.pivot_cols:
        for j, x in rs.pivot_row(c).items():
            if j != c:
                vecs[j][c] = (-x) % p
    return FpMatrix(len(free), m.ncols, p, (vecs[f] for f in free), _trusted=True)


def subspace_contains(s: RowSpace, v) -> bool:
    return not s.reduce(_as_sparse(v, s.ncols))


def kron(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """Tensor product of matrices, indices ordered lexicographically (a's index first)."""
    if a.p != b.p:
        raise ValueError("moduli differ")
    p = a.p
    rows = []
    for ra in a._rows:
        for rb in b._rows:
            rows.append({ja * b.ncols + jb: x * y % p for ja, x in ra.items() for jb, y in rb.items()})
    return FpMatrix(a.nrows * b.nrows, a.ncols * b.ncols, p, rows, _trusted=True)


def homology_dim(incoming: FpMatrix, outgoing: FpMatrix) -> int:
    """dim ker(outgoing) - dim im(incoming) at the space between the two maps."""
    if incoming.p != outgoing.p:
        raise ComplexError(f"moduli differ: {incoming.p} vs {outgoing.p}")
    if incoming.nrows != outgoing.ncols:
        raise ComplexError(
            f"incoming map lands in dimension {incoming.nrows}, outgoing map starts "
            f"from dimension {outgoing.ncols}")
    if not (outgoing @ incoming).is_zero():
        raise ComplexError("consecutive maps do not compose to zero")
    return outgoing.ncols - outgoing.rank() - incoming.rank()
