"""Skew-symmetrization of a Leibniz algebra and the resulting Lie 2-algebra.

The antisymmetrized bracket <<x,y>> = ([x,y] - [y,x])/2 fails Jacobi in
general; its Jacobiator

    J(x,y,z) = <<x,<<y,z>>>> + <<y,<<z,x>>>> + <<z,<<x,y>>>>

has the closed form ([[z,y],x] + [[x,z],y] + [[y,x],z])/4, always lands in
the left center, and satisfies a ten-term cocycle-style identity.  Feeding
J back in as a ternary homotopy yields a two-term graded algebra
(Z(g) in degree 1, g in degree 0) with unary/binary/ternary operations
l1, l2, l3, verified here against the five standard axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import IdentityReport, LeibnizAlgebra, Witness, _basis, _report, bracket, left_center
from .linalg import (
    HALF,
    Matrix,
    QUARTER,
    as_rational,
    vadd,
    vaddto,
    viszero,
    vsub,
    vzero,
)


def skew_bracket(g: LeibnizAlgebra) -> tuple:
    """Tensor of <<e_i, e_j>> = ([e_i,e_j] - [e_j,e_i]) / 2; antisymmetric."""
    n = g.dim
    return tuple(
        tuple(tuple(HALF * (g.c[i][j][k] - g.c[j][i][k]) for k in range(n))
              for j in range(n))
        for i in range(n))


def apply_bilinear(tensor, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
    """Bilinear extension of a basis-indexed tensor t[i][j] -> vector."""
    n = len(tensor)
    if len(x) != n or len(y) != n:
        raise ValueError(f"vectors must have length {n}")
    out = vzero(len(tensor[0][0]) if n else 0)
    for i, xi in enumerate(x):
        if not xi:
            continue
        ti = tensor[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            vaddto(out, xi * yj, ti[j])
    return out


def jacobiator_direct(g: LeibnizAlgebra, x, y, z) -> list[Fraction]:
    """Cyclic sum of nested skew brackets."""
    s = skew_bracket(g)
    return _jacobiator_direct(s, x, y, z)


def _jacobiator_direct(s, x, y, z) -> list[Fraction]:
    out = apply_bilinear(s, x, apply_bilinear(s, y, z))
    for t, v in enumerate(apply_bilinear(s, y, apply_bilinear(s, z, x))):
        out[t] += v
    for t, v in enumerate(apply_bilinear(s, z, apply_bilinear(s, x, y))):
        out[t] += v
    return out


def jacobiator_closed(g: LeibnizAlgebra, x, y, z) -> list[Fraction]:
    """([[z,y],x] + [[x,z],y] + [[y,x],z]) / 4, equal to the cyclic Jacobiator."""
    out = bracket(g, bracket(g, z, y), x)
    for t, v in enumerate(bracket(g, bracket(g, x, z), y)):
        out[t] += v
    for t, v in enumerate(bracket(g, bracket(g, y, x), z)):
        out[t] += v
    return [QUARTER * v for v in out]


def jacobiator_table(g: LeibnizAlgebra) -> list:
    """J on all basis triples, via the closed form."""
    n = g.dim
    table = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        ei = _basis(n, i)
        for j in range(n):
            ej = _basis(n, j)
            for k in range(n):
                table[i][j][k] = jacobiator_closed(g, ei, ej, _basis(n, k))
    return table


def _apply_trilinear(table, x, y, z):
    n = len(table)
    out = vzero(len(table[0][0][0]) if n else 0)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            cij = xi * yj
            row = table[i][j]
            for k, zk in enumerate(z):
                if zk:
                    vaddto(out, cij * zk, row[k])
    return out


def check_jacobiator_identities(g: LeibnizAlgebra) -> IdentityReport:
    """Exhaustive basis verification of the Jacobiator facts:

    * the cyclic definition agrees with the closed quarter-formula,
    * J is totally antisymmetric,
    * [J(x,y,z), w] = 0 (values lie in the left center),
    * the ten-term identity
        <<x,J(y,z,w)>> - <<y,J(x,z,w)>> + <<z,J(x,y,w)>> - <<w,J(x,y,z)>>
        - J(<<x,y>>,z,w) + J(<<x,z>>,y,w) - J(<<x,w>>,y,z)
        - J(<<y,z>>,x,w) + J(<<y,w>>,x,z) - J(<<z,w>>,x,y)  =  0.
    """
    n = g.dim
    s = skew_bracket(g)
    jt = jacobiator_table(g)
    witnesses: list[Witness] = []

    for i in range(n):
        ei = _basis(n, i)
        for j in range(n):
            ej = _basis(n, j)
            for k in range(n):
                direct = _jacobiator_direct(s, ei, ej, _basis(n, k))
                d = vsub(direct, jt[i][j][k])
                if not viszero(d):
                    witnesses.append(Witness((i, j, k), tuple(d), "direct-vs-closed"))
                # adjacent transpositions generate total antisymmetry
                for perm in ((j, i, k), (i, k, j)):
                    a, b, c = perm
                    d = vadd(jt[i][j][k], jt[a][b][c])
                    if not viszero(d):
                        witnesses.append(Witness(((i, j, k), perm), tuple(d), "antisymmetry"))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                val = jt[i][j][k]
                if viszero(val):
                    continue
                for l in range(n):
                    d = bracket(g, val, _basis(n, l))
                    if not viszero(d):
                        witnesses.append(Witness((i, j, k, l), tuple(d), "center"))

    def j_of(x, y, z):
        return _apply_trilinear(jt, x, y, z)

    basis = [_basis(n, i) for i in range(n)]
    for i in range(n):
        x = basis[i]
        for j in range(n):
            y = basis[j]
            sxy = s[i][j]
            for k in range(n):
                z = basis[k]
                sxz = s[i][k]
                syz = s[j][k]
                for l in range(n):
                    w = basis[l]
                    acc = apply_bilinear(s, x, jt[j][k][l])
                    for t, v in enumerate(apply_bilinear(s, y, jt[i][k][l])):
                        acc[t] -= v
                    for t, v in enumerate(apply_bilinear(s, z, jt[i][j][l])):
                        acc[t] += v
                    for t, v in enumerate(apply_bilinear(s, w, jt[i][j][k])):
                        acc[t] -= v
                    for t, v in enumerate(j_of(sxy, z, w)):
                        acc[t] -= v
                    for t, v in enumerate(j_of(sxz, y, w)):
                        acc[t] += v
                    for t, v in enumerate(j_of(s[i][l], y, z)):
                        acc[t] -= v
                    for t, v in enumerate(j_of(syz, x, w)):
                        acc[t] -= v
                    for t, v in enumerate(j_of(s[j][l], x, z)):
                        acc[t] += v
                    for t, v in enumerate(j_of(s[k][l], x, y)):
                        acc[t] -= v
                    if not viszero(acc):
                        witnesses.append(Witness((i, j, k, l), tuple(acc), "ten-term"))
    return _report(witnesses)


def freeze(x):
    """Recursively tuple-ify nested sequences, coercing leaves to Fraction."""
    if isinstance(x, (list, tuple)):
        return tuple(freeze(v) for v in x)
    return as_rational(x)


@dataclass(frozen=True)
class Lie2Algebra:
    """Two-term graded algebra: degree-1 piece of dim1, degree-0 piece of dim0.

    l1    : dim0 x dim1 matrix (degree -1 map, degree 1 -> degree 0)
    l2_00 : bilinear deg0 x deg0 -> deg0, antisymmetric
    l2_01 : bilinear deg0 x deg1 -> deg1 (the deg1-first variant is its negative)
    l2_11 : bilinear deg1 x deg1 -> deg1, identically zero here (kept explicit)
    l3    : trilinear deg0^3 -> deg1, totally antisymmetric
    """

    dim1: int
    dim0: int
    l1: Matrix
    l2_00: tuple
    l2_01: tuple
    l2_11: tuple
    l3: tuple

    def __post_init__(self):
        if self.l1.shape != (self.dim0, self.dim1):
            raise ValueError("l1 must be dim0 x dim1")
        for field in ("l2_00", "l2_01", "l2_11", "l3"):
            object.__setattr__(self, field, freeze(getattr(self, field)))

    def l2_deg0(self, x, y):
        return apply_bilinear(self.l2_00, x, y) if self.dim0 else []

    def l2_mixed(self, x, a):
        """l2 on (degree 0, degree 1); value in degree 1."""
        if not self.dim0 or not self.dim1:
            return vzero(self.dim1)
        out = vzero(self.dim1)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.l2_01[i]
            for al, aa in enumerate(a):
                if aa:
                    vaddto(out, xi * aa, row[al])
        return out

    def l3_apply(self, x, y, z):
        return _apply_trilinear(self.l3, x, y, z) if self.dim0 else []


@dataclass
class AxiomReport:
    """Outcome of the five two-term homotopy-algebra axioms (a)-(e)."""
    passed: dict
    witnesses: tuple[Witness, ...] = ()

    @property
    def all_pass(self) -> bool:
        return all(self.passed.values())


def build_lie2(g: LeibnizAlgebra) -> Lie2Algebra:
    """Two-term algebra on Z(g) (+) g from the skew bracket and Jacobiator.

    l1 is the inclusion of the left center, l2 on two degree-0 elements is
    the skew bracket, l2 of a degree-0 and a center element is half the
    original bracket (which still lies in the center since Z(g) is an
    ideal), and l3 is the Jacobiator in center coordinates.  Both center
    memberships are established by exact solves; failure means the input
    was not a Leibniz algebra.
    """
    n = g.dim
    z = left_center(g)
    d1 = z.dim
    l1 = z.basis_matrix()

    s = skew_bracket(g)

    def center_coords(v, context):
        coords = z.coordinates_of(v)
        if coords is None:
            raise ValueError(f"{context} is not in the left center; "
                             "input violates the Leibniz identity")
        return tuple(coords)

    l2_01 = []
    for i in range(n):
        ei = _basis(n, i)
        row = []
        for al in range(d1):
            v = [HALF * t for t in bracket(g, ei, list(z.basis[al]))]
            row.append(center_coords(v, f"[e_{i}, z_{al}]/2"))
        l2_01.append(tuple(row))

    jt = jacobiator_table(g)
    l3 = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            for k in range(n):
                row.append(center_coords(jt[i][j][k], f"J(e_{i},e_{j},e_{k})"))
            plane.append(tuple(row))
        l3.append(tuple(plane))

    l2_11 = tuple(tuple(tuple(vzero(d1)) for _ in range(d1)) for _ in range(d1))
    return Lie2Algebra(d1, n, l1, s, tuple(l2_01), l2_11, tuple(l3))


def check_lie2_structure(L: Lie2Algebra) -> IdentityReport:
    """Antisymmetry of l2 on degree 0 and total antisymmetry of l3."""
    witnesses = []
    n = L.dim0
    for i in range(n):
        for j in range(n):
            d = vadd(L.l2_00[i][j], L.l2_00[j][i])
            if not viszero(d):
                witnesses.append(Witness((i, j), tuple(d), "l2-antisymmetry"))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for perm in ((j, i, k), (i, k, j)):
                    a, b, c = perm
                    d = vadd(L.l3[i][j][k], L.l3[a][b][c])
                    if not viszero(d):
                        witnesses.append(Witness(((i, j, k), perm), tuple(d), "l3-antisymmetry"))
    return _report(witnesses)


def verify_lie2(L: Lie2Algebra) -> AxiomReport:
    """Check axioms (a)-(e) on all basis tuples.

    With x,y,z,w of degree 0 and a of degree 1:
      (a) l1 l2(x,a) = l2(x, l1 a)
      (b) l2(l1 a, b) = l2(a, l1 b)
      (c) l2(x,l2(y,z)) + l2(y,l2(z,x)) + l2(z,l2(x,y)) = l1 l3(x,y,z)
      (d) l2(x,l2(y,a)) + l2(y,l2(a,x)) + l2(a,l2(x,y)) = l3(x,y,l1 a)
      (e) the four-element compatibility of l2 and l3, written with explicit
          signs (l2 on a degree-1 slot picks up a sign when flipped):
            l2(l3(x,y,z),w) - l2(l3(x,y,w),z) + l2(l3(x,z,w),y) - l2(l3(y,z,w),x)
          = l3(l2(x,y),z,w) - l3(l2(x,z),y,w) + l3(l2(x,w),y,z)
            + l3(l2(y,z),x,w) - l3(l2(y,w),x,z) + l3(l2(z,w),x,y)
    """
    n0, n1 = L.dim0, L.dim1
    passed = {k: True for k in "abcde"}
    witnesses: list[Witness] = []
    e0 = [_basis(n0, i) for i in range(n0)]
    e1 = [_basis(n1, a) for a in range(n1)]
    incl = [list(L.l1.column(a)) for a in range(n1)]

    def fail(axiom, where, defect):
        passed[axiom] = False
        witnesses.append(Witness(where, tuple(defect), axiom))

    for i in range(n0):
        for a in range(n1):
            lhs = L.l1.mv(L.l2_mixed(e0[i], e1[a]))
            rhs = L.l2_deg0(e0[i], incl[a])
            if not viszero(vsub(lhs, rhs)):
                fail("a", (i, a), vsub(lhs, rhs))

    for a in range(n1):
        for b in range(n1):
            lhs = L.l2_mixed(incl[a], e1[b])
            rhs = [-v for v in L.l2_mixed(incl[b], e1[a])]
            if not viszero(vsub(lhs, rhs)):
                fail("b", (a, b), vsub(lhs, rhs))

    for i in range(n0):
        for j in range(n0):
            for k in range(n0):
                acc = L.l2_deg0(e0[i], L.l2_00[j][k])
                for t, v in enumerate(L.l2_deg0(e0[j], L.l2_00[k][i])):
                    acc[t] += v
                for t, v in enumerate(L.l2_deg0(e0[k], L.l2_00[i][j])):
                    acc[t] += v
                rhs = L.l1.mv(L.l3[i][j][k])
                if not viszero(vsub(acc, rhs)):
                    fail("c", (i, j, k), vsub(acc, rhs))

    for i in range(n0):
        for j in range(n0):
            for a in range(n1):
                acc = L.l2_mixed(e0[i], L.l2_01[j][a])
                for t, v in enumerate(L.l2_mixed(e0[j], L.l2_01[i][a])):
                    acc[t] -= v
                for t, v in enumerate(L.l2_mixed(L.l2_00[i][j], e1[a])):
                    acc[t] -= v
                rhs = L.l3_apply(e0[i], e0[j], incl[a])
                if not viszero(vsub(acc, rhs)):
                    fail("d", (i, j, a), vsub(acc, rhs))

    for i in range(n0):
        for j in range(n0):
            for k in range(n0):
                for l in range(n0):
                    lhs = [-v for v in L.l2_mixed(e0[l], L.l3[i][j][k])]
                    for t, v in enumerate(L.l2_mixed(e0[k], L.l3[i][j][l])):
                        lhs[t] += v
                    for t, v in enumerate(L.l2_mixed(e0[j], L.l3[i][k][l])):
                        lhs[t] -= v
                    for t, v in enumerate(L.l2_mixed(e0[i], L.l3[j][k][l])):
                        lhs[t] += v
                    rhs = L.l3_apply(L.l2_00[i][j], e0[k], e0[l])
                    for t, v in enumerate(L.l3_apply(L.l2_00[i][k], e0[j], e0[l])):
                        rhs[t] -= v
                    for t, v in enumerate(L.l3_apply(L.l2_00[i][l], e0[j], e0[k])):
                        rhs[t] += v
                    for t, v in enumerate(L.l3_apply(L.l2_00[j][k], e0[i], e0[l])):
                        rhs[t] += v
                    for t, v in enumerate(L.l3_apply(L.l2_00[j][l], e0[i], e0[k])):
                        rhs[t] -= v
                    for t, v in enumerate(L.l3_apply(L.l2_00[k][l], e0[i], e0[j])):
                        rhs[t] += v
                    if not viszero(vsub(lhs, rhs)):
                        fail("e", (i, j, k, l), vsub(lhs, rhs))

    return AxiomReport(passed, tuple(witnesses))
