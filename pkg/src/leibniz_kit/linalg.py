"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (arbitrary-precision, always in lowest
terms with positive denominator), so every rank, kernel and solution below
is exact: there are no tolerances anywhere in this package.

Matrices are logically dense row-major arrays but store each row as a
{column: nonzero} dict; coboundary matrices of tensor-power complexes are
overwhelmingly sparse and dense row lists were measured to exhaust memory
near the resource cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def as_rational(x) -> Fraction:
    """Coerce int / str / Fraction to Fraction.  Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact scalar, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# dense vectors (plain tuples/lists of Fractions)

def vzero(n: int) -> list[Fraction]:
    return [ZERO] * n


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    return [a + b for a, b in zip(u, v)]


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    return [a - b for a, b in zip(u, v)]


def vscale(c: Fraction, u: Sequence[Fraction]) -> list[Fraction]:
    return [c * a for a in u]


def vaddto(acc: list[Fraction], c: Fraction, u: Sequence[Fraction]) -> None:
    """acc += c*u in place, skipping zero work."""
    if not c:
        return
    for i, a in enumerate(u):
        if a:
            acc[i] += c * a


def viszero(u: Sequence[Fraction]) -> bool:
    return all(not a for a in u)


def veq(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return len(u) == len(v) and all(a == b for a, b in zip(u, v))


class Matrix:
    """Immutable rows x cols matrix of Fractions.

    ``entry(i, j)`` gives the dense view; internally each row is a dict of
    its nonzero entries.  All operations return new matrices.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: list[dict[int, Fraction]]):
        if rows < 0 or cols < 0 or len(data) != rows:
            raise ValueError("inconsistent matrix shape")
        self.rows = rows
        self.cols = cols
        # scrub explicit zeros so equality and sparsity stay canonical
        self._data = [{j: v for j, v in row.items() if v} for row in data]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(map(as_rational, r)) for r in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        data = [{j: v for j, v in enumerate(r) if v} for r in rows]
        return cls(len(rows), cols, data)

    @classmethod
    def from_cols(cls, ncols_ambient: int, cols: Sequence[Sequence]) -> "Matrix":
        """Matrix whose j-th column is cols[j]; ambient length gives the row count."""
        data: list[dict[int, Fraction]] = [{} for _ in range(ncols_ambient)]
        for j, col in enumerate(cols):
            if len(col) != ncols_ambient:
                raise ValueError("column of wrong length")
            for i, v in enumerate(col):
                if v:
                    data[i][j] = as_rational(v)
        return cls(ncols_ambient, len(cols), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [{} for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [{i: ONE} for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._data[i].get(j, ZERO)

    def row_items(self, i: int):
        return self._data[i].items()

    def row_list(self, i: int) -> list[Fraction]:
        out = vzero(self.cols)
        for j, v in self._data[i].items():
            out[j] = v
        return out

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row_list(i) for i in range(self.rows)]

    def column(self, j: int) -> list[Fraction]:
        return [self._data[i].get(j, ZERO) for i in range(self.rows)]

    def mv(self, x: Sequence[Fraction]) -> list[Fraction]:
        if len(x) != self.cols:
            raise ValueError(f"vector length {len(x)} != cols {self.cols}")
        out = vzero(self.rows)
        for i, row in enumerate(self._data):
            s = ZERO
            for j, v in row.items():
                xj = x[j]
                if xj:
                    s += v * xj
            out[i] = s
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        data: list[dict[int, Fraction]] = []
        for row in self._data:
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                for j, b in other._data[k].items():
                    acc[j] = acc.get(j, ZERO) + a * b
            data.append(acc)
        return Matrix(self.rows, other.cols, data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        data = []
        for r1, r2 in zip(self._data, other._data):
            row = dict(r1)
            for j, v in r2.items():
                row[j] = row.get(j, ZERO) + v
            data.append(row)
        return Matrix(self.rows, self.cols, data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scaled(-ONE)

    def __neg__(self) -> "Matrix":
        return self.scaled(-ONE)

    def scaled(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix(self.rows, self.cols,
                      [{j: c * v for j, v in row.items()} for row in self._data])

    def transpose(self) -> "Matrix":
        data: list[dict[int, Fraction]] = [{} for _ in range(self.cols)]
        for i, row in enumerate(self._data):
            for j, v in row.items():
                data[j][i] = v
        return Matrix(self.cols, self.rows, data)

    def is_zero(self) -> bool:
        return all(not row for row in self._data)

    def nnz(self) -> int:
        return sum(len(row) for row in self._data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash((self.rows, self.cols,
                     tuple(tuple(sorted(r.items())) for r in self._data)))

    def __repr__(self) -> str:
        if self.rows * self.cols > 64:
            return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"
        return "Matrix(" + "; ".join(
            " ".join(str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows)) + ")"

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


@dataclass(frozen=True)
class Echelon:
    """Result of row reduction: the RREF matrix, its rank, and pivot columns."""
    matrix: Matrix
    rank: int
    pivot_columns: tuple[int, ...]


def rref(m: Matrix) -> Echelon:
    """Reduced row echelon form by exact Gauss-Jordan elimination.

    Fractions renormalise (gcd) after every arithmetic operation, which keeps
    intermediate entries small without a separate fraction-free pass.
    """
    work = [dict(m._data[i]) for i in range(m.rows)]
    reduced: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for col in range(m.cols):
        pivot_row = None
        for idx, row in enumerate(work):
            if col in row:
                pivot_row = idx
                break
        if pivot_row is None:
            continue
        row = work.pop(pivot_row)
        p = row[col]
        if p != ONE:
            row = {j: v / p for j, v in row.items()}
        for target in work:
            f = target.get(col)
            if f:
                for j, v in row.items():
                    nv = target.get(j, ZERO) - f * v
                    if nv:
                        target[j] = nv
                    else:
                        target.pop(j, None)
        for target in reduced:
            f = target.get(col)
            if f:
                for j, v in row.items():
                    nv = target.get(j, ZERO) - f * v
                    if nv:
                        target[j] = nv
                    else:
                        target.pop(j, None)
        reduced.append(row)
        pivots.append(col)
    data = reduced + [{} for _ in range(m.rows - len(reduced))]
    return Echelon(Matrix(m.rows, m.cols, data), len(reduced), tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim given by a linearly independent basis."""
    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector of wrong length")
        if self.basis and rank(Matrix.from_rows(self.basis)) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        """ambient_dim x dim matrix whose columns are the basis vectors."""
        return Matrix.from_cols(self.ambient_dim, list(self.basis))

    def coordinates_of(self, v: Sequence[Fraction]) -> Optional[list[Fraction]]:
        """Coordinates of v in this basis, or None if v is outside the span."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector of wrong length")
        if self.dim == 0:
            return [] if viszero(v) else None
        return solve(self.basis_matrix(), list(v))

    def contains(self, v: Sequence[Fraction]) -> bool:
        return self.coordinates_of(v) is not None


def span_of_rows(ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> Subspace:
    """Subspace spanned by the given vectors, with a canonical (RREF) basis."""
    vecs = [list(map(as_rational, v)) for v in vectors]
    if not vecs:
        return Subspace(ambient_dim, ())
    ech = rref(Matrix.from_rows(vecs))
    basis = tuple(tuple(ech.matrix.row_list(i)) for i in range(ech.rank))
    return Subspace(ambient_dim, basis)


def kernel_basis(m: Matrix) -> Subspace:
    """Basis of {x : m x = 0}; dimension is cols - rank by rank-nullity."""
    ech = rref(m)
    pivot_set = set(ech.pivot_columns)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = vzero(m.cols)
        v[free] = ONE
        for i, p in enumerate(ech.pivot_columns):
            coef = ech.matrix.entry(i, free)
            if coef:
                v[p] = -coef
        basis.append(tuple(v))
    for v in basis:
        assert viszero(m.mv(v)), "kernel vector failed verification"
    return Subspace(m.cols, tuple(basis))


def solve(m: Matrix, b: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Some x with m x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError(f"rhs length {len(b)} != rows {m.rows}")
    data = [dict(m._data[i]) for i in range(m.rows)]
    for i, v in enumerate(b):
        v = as_rational(v)
        if v:
            data[i][m.cols] = v
    aug = Matrix(m.rows, m.cols + 1, data)
    ech = rref(aug)
    if m.cols in ech.pivot_columns:
        return None
    x = vzero(m.cols)
    for i, p in enumerate(ech.pivot_columns):
        x[p] = ech.matrix.entry(i, m.cols)
    return x
