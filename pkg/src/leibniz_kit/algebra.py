"""Leibniz algebras presented by rational structure constants.

A Leibniz algebra here is a finite-dimensional vector space over Q with a
bilinear bracket [.,.] whose left multiplications are derivations:

    [x, [y, z]] = [[x, y], z] + [y, [x, z]]

The bracket need not be antisymmetric; Lie algebras are the antisymmetric
special case.  Everything is encoded by the tensor c with
[e_i, e_j] = sum_k c[i][j][k] e_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    Matrix,
    Subspace,
    ZERO,
    as_rational,
    kernel_basis,
    rref,
    solve,
    span_of_rows,
    vaddto,
    viszero,
    vzero,
)


def _freeze_tensor3(c, n: int):
    if len(c) != n:
        raise ValueError("structure tensor has wrong outer length")
    out = []
    for plane in c:
        if len(plane) != n:
            raise ValueError("structure tensor has a ragged plane")
        rows = []
        for row in plane:
            if len(row) != n:
                raise ValueError("structure tensor has a ragged row")
            rows.append(tuple(as_rational(v) for v in row))
        out.append(tuple(rows))
    return tuple(out)


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Structure constants c[i][j][k] of [e_i, e_j] = sum_k c[i][j][k] e_k."""

    dim: int
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", _freeze_tensor3(self.c, self.dim))

    @classmethod
    def abelian(cls, n: int) -> "LeibnizAlgebra":
        return cls(n, [[[ZERO] * n for _ in range(n)] for _ in range(n)])

    @classmethod
    def from_brackets(cls, n: int, brackets: dict) -> "LeibnizAlgebra":
        """Build from a sparse {(i, j): {k: coeff}} description; 0-based indices."""
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), val in brackets.items():
            for k, coeff in val.items():
                c[i][j][k] = as_rational(coeff)
        return cls(n, c)

    def bracket_basis(self, i: int, j: int) -> tuple:
        """[e_i, e_j] as a coordinate vector."""
        return self.c[i][j]


@dataclass(frozen=True)
class Witness:
    """A failed identity instance: where it failed and by how much."""
    where: tuple
    defect: tuple
    label: str = ""


@dataclass(frozen=True)
class IdentityReport:
    holds: bool
    witnesses: tuple[Witness, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


def _report(witnesses: list[Witness]) -> IdentityReport:
    return IdentityReport(not witnesses, tuple(witnesses))


def bracket(g: LeibnizAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
    """Bilinear extension of the structure constants to coordinate vectors."""
    n = g.dim
    if len(x) != n or len(y) != n:
        raise ValueError(f"vectors must have length {n}")
    out = vzero(n)
    for i, xi in enumerate(x):
        if not xi:
            continue
        ci = g.c[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            vaddto(out, xi * yj, ci[j])
    return out


def _basis(n: int, i: int) -> list[Fraction]:
    e = vzero(n)
    e[i] = Fraction(1)
    return e


def check_leibniz(g: LeibnizAlgebra) -> IdentityReport:
    """Evaluate [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]] on all basis triples."""
    n = g.dim
    witnesses = []
    for i in range(n):
        ei = _basis(n, i)
        for j in range(n):
            ej = _basis(n, j)
            for k in range(n):
                ek = _basis(n, k)
                defect = bracket(g, ei, bracket(g, ej, ek))
                for t, v in enumerate(bracket(g, bracket(g, ei, ej), ek)):
                    defect[t] -= v
                for t, v in enumerate(bracket(g, ej, bracket(g, ei, ek))):
                    defect[t] -= v
                if not viszero(defect):
                    witnesses.append(Witness((i, j, k), tuple(defect), "leibniz"))
    return _report(witnesses)


def left_multiplication_matrix(g: LeibnizAlgebra) -> Matrix:
    """The n^2 x n matrix of x -> ([x, e_j] for all j), rows indexed by (j, k)."""
    n = g.dim
    data = []
    for j in range(n):
        for k in range(n):
            row = {i: g.c[i][j][k] for i in range(n) if g.c[i][j][k]}
            data.append(row)
    return Matrix(n * n, n, data)


def left_center(g: LeibnizAlgebra) -> Subspace:
    """Z(g) = {x : [x, y] = 0 for all y}, as the kernel of left multiplication."""
    return kernel_basis(left_multiplication_matrix(g))


def derived_subalgebra(g: LeibnizAlgebra) -> Subspace:
    """Span of all brackets [e_i, e_j]."""
    n = g.dim
    return span_of_rows(n, (g.c[i][j] for i in range(n) for j in range(n)))


def is_lie(g: LeibnizAlgebra) -> bool:
    """Antisymmetry of the structure tensor; with the derivation identity this
    already implies Jacobi."""
    n = g.dim
    return all(g.c[i][j][k] == -g.c[j][i][k]
               for i in range(n) for j in range(n) for k in range(n))


def square_in_center_check(g: LeibnizAlgebra) -> IdentityReport:
    """Polarized form of "[x, x] lies in the left center":
    [[e_i,e_j] + [e_j,e_i], e_k] = 0 for all basis triples."""
    n = g.dim
    witnesses = []
    for i in range(n):
        for j in range(n):
            sq = [a + b for a, b in zip(g.c[i][j], g.c[j][i])]
            if viszero(sq):
                continue
            for k in range(n):
                d = bracket(g, sq, _basis(n, k))
                if not viszero(d):
                    witnesses.append(Witness((i, j, k), tuple(d), "square-center"))
    return _report(witnesses)


def quotient_by_left_center(g: LeibnizAlgebra) -> tuple[LeibnizAlgebra, Matrix]:
    """The algebra induced on g / Z(g), plus the projection matrix.

    The complement of Z(g) is spanned by the standard basis vectors whose
    indices avoid the pivot columns of the RREF'd center basis; this makes
    the construction deterministic.  The quotient of a Leibniz algebra by
    its left center is a Lie algebra, which is asserted on the result.
    """
    n = g.dim
    z = left_center(g)
    pivot_set = set()
    if z.dim:
        pivot_set = set(rref(Matrix.from_rows(z.basis)).pivot_columns)
    complement = [i for i in range(n) if i not in pivot_set]
    q = len(complement)

    # change of basis: center vectors first, then the complement basis vectors
    cols = list(z.basis) + [tuple(_basis(n, i)) for i in complement]
    basis_mat = Matrix.from_cols(n, cols)
    ech = rref(basis_mat)
    assert ech.rank == n, "center basis extension failed to span"

    def project(v):
        coords = solve(basis_mat, v)
        assert coords is not None
        return coords[z.dim:]

    c = [[[ZERO] * q for _ in range(q)] for _ in range(q)]
    for a, ia in enumerate(complement):
        for b, ib in enumerate(complement):
            img = project(list(g.c[ia][ib]))
            for k, v in enumerate(img):
                c[a][b][k] = v
    quotient = LeibnizAlgebra(q, c)
    if not is_lie(quotient):
        raise RuntimeError("quotient by the left center is not antisymmetric; "
                           "input violates the Leibniz identity")

    proj_rows = []
    for t in range(q):
        proj_rows.append([ZERO] * n)
    for i in range(n):
        coords = project(_basis(n, i))
        for t in range(q):
            proj_rows[t][i] = coords[t]
    return quotient, Matrix.from_rows(proj_rows)
