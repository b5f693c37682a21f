"""Representations, cochains, the coboundary complex and the graded bracket.

A representation of a Leibniz algebra g on V is a pair of linear maps
l, r : g -> gl(V) with, for all x, y in g:

    l_[x,y] = [l_x, l_y]      r_[x,y] = [l_x, r_y]      r_y l_x = -r_y r_x

k-cochains are arbitrary multilinear maps on the k-th tensor power of g
with values in V (no antisymmetrization), stored densely on basis tuples
in lexicographic order.  The coboundary is

    d c(x_1..x_{k+1}) = sum_{i<=k} (-1)^{i+1} l_{x_i} c(..^x_i..)
                        + (-1)^{k+1} r_{x_{k+1}} c(x_1..x_k)
                        + sum_{i<j} (-1)^i c(..^x_i.., [x_i,x_j] at slot j, ..)

instantiated literally at k = 0 as d v(x) = -r_x(v).  Cohomology dimensions
come from exact rank-nullity, so every reported Betti number is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import IdentityReport, LeibnizAlgebra, Witness, _report, check_leibniz
from .linalg import (
    HALF,
    Matrix,
    ONE,
    ZERO,
    as_rational,
    commutator,
    rank,
    vadd,
    vaddto,
    viszero,
    vscale,
    vsub,
    vzero,
)

DEFAULT_CAP = 20000


class ResourceCapExceeded(Exception):
    """Raised when a cochain space would outgrow the configured cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"cochain space of dimension {required} exceeds cap {cap}")
        self.required = required
        self.cap = cap


# ---------------------------------------------------------------------------
# representations

@dataclass(frozen=True)
class Representation:
    """Left/right action matrices (one pair per basis element of g) on Q^vdim."""

    algebra: LeibnizAlgebra
    vdim: int
    l: tuple
    r: tuple

    def __post_init__(self):
        n, m = self.algebra.dim, self.vdim
        object.__setattr__(self, "l", tuple(self.l))
        object.__setattr__(self, "r", tuple(self.r))
        if len(self.l) != n or len(self.r) != n:
            raise ValueError("need one l and one r matrix per basis element")
        for mat in (*self.l, *self.r):
            if mat.shape != (m, m):
                raise ValueError(f"action matrices must be {m}x{m}")

    def l_of(self, x: Sequence[Fraction]) -> Matrix:
        """l extended linearly to a coordinate vector."""
        out = Matrix.zeros(self.vdim, self.vdim)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.l[i].scaled(xi)
        return out

    def r_of(self, x: Sequence[Fraction]) -> Matrix:
        out = Matrix.zeros(self.vdim, self.vdim)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.r[i].scaled(xi)
        return out


def _matrix_witness(m: Matrix) -> tuple:
    return tuple(tuple(row) for row in m.to_rows())


def check_representation(rep: Representation) -> IdentityReport:
    """All three compatibility conditions on all basis pairs."""
    g = rep.algebra
    n = g.dim
    witnesses = []
    for i in range(n):
        for j in range(n):
            br = g.c[i][j]
            d1 = rep.l_of(br) - commutator(rep.l[i], rep.l[j])
            if not d1.is_zero():
                witnesses.append(Witness((i, j), _matrix_witness(d1), "l-of-bracket"))
            d2 = rep.r_of(br) - commutator(rep.l[i], rep.r[j])
            if not d2.is_zero():
                witnesses.append(Witness((i, j), _matrix_witness(d2), "r-of-bracket"))
            d3 = rep.r[j] @ rep.l[i] + rep.r[j] @ rep.r[i]
            if not d3.is_zero():
                witnesses.append(Witness((i, j), _matrix_witness(d3), "r-absorbs-l"))
    return _report(witnesses)


def trivial_rep(g: LeibnizAlgebra) -> Representation:
    """(Q, 0, 0)."""
    z = Matrix.zeros(1, 1)
    return Representation(g, 1, (z,) * g.dim, (z,) * g.dim)


def adjoint_rep(g: LeibnizAlgebra) -> Representation:
    """Left and right multiplications of g acting on itself."""
    n = g.dim
    ls, rs = [], []
    for i in range(n):
        ldata = [{} for _ in range(n)]
        rdata = [{} for _ in range(n)]
        for j in range(n):
            for k in range(n):
                if g.c[i][j][k]:
                    ldata[k][j] = g.c[i][j][k]
                if g.c[j][i][k]:
                    rdata[k][j] = g.c[j][i][k]
        ls.append(Matrix(n, n, ldata))
        rs.append(Matrix(n, n, rdata))
    return Representation(g, n, tuple(ls), tuple(rs))


def _require_left_only(rep: Representation, what: str) -> None:
    if any(not m.is_zero() for m in rep.r):
        raise ValueError(f"{what} is defined only for representations with zero right action")


def dual_rep(rep: Representation) -> Representation:
    """Dual of (V, l, 0): acts by negative transposes on V*."""
    _require_left_only(rep, "the dual representation")
    n = rep.algebra.dim
    ls = tuple(-rep.l[i].transpose() for i in range(n))
    zs = (Matrix.zeros(rep.vdim, rep.vdim),) * n
    return Representation(rep.algebra, rep.vdim, ls, zs)


def conjugation_rep(rep: Representation) -> Representation:
    """Commutator action A -> [l_x, A] on the m^2-dimensional matrix space.

    Basis: elementary matrices in row-major order, so a matrix A flattens to
    the vector (A[0][0], A[0][1], ..).
    """
    _require_left_only(rep, "the conjugation representation")
    m = rep.vdim
    m2 = m * m
    ls = []
    for li in rep.l:
        data = [dict() for _ in range(m2)]
        for c in range(m):
            for d in range(m):
                col = c * m + d
                for a in range(m):
                    v = li.entry(a, c)
                    if v:
                        row = a * m + d
                        data[row][col] = data[row].get(col, ZERO) + v
                for b in range(m):
                    v = li.entry(d, b)
                    if v:
                        row = c * m + b
                        data[row][col] = data[row].get(col, ZERO) - v
        ls.append(Matrix(m2, m2, data))
    zs = (Matrix.zeros(m2, m2),) * rep.algebra.dim
    return Representation(rep.algebra, m2, tuple(ls), zs)


def flatten_matrix(mat: Matrix) -> list[Fraction]:
    """Row-major coordinates of a square matrix in the elementary basis."""
    out = vzero(mat.rows * mat.cols)
    for i in range(mat.rows):
        for j, v in mat.row_items(i):
            out[i * mat.cols + j] = v
    return out


# ---------------------------------------------------------------------------
# cochains

def _freeze_values(values, count, m):
    if len(values) != count:
        raise ValueError(f"expected {count} value vectors, got {len(values)}")
    out = []
    for v in values:
        if len(v) != m:
            raise ValueError(f"value vector of length {len(v)}, expected {m}")
        out.append(tuple(as_rational(x) for x in v))
    return tuple(out)


@dataclass(frozen=True)
class Cochain:
    """Multilinear map on k-tuples of g with values in Q^m.

    values[rank(t)] is the image of the basis tuple t, with rank the
    lexicographic position of t among all n^k tuples.
    """

    degree: int
    n: int
    m: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values",
                           _freeze_values(self.values, self.n ** self.degree, self.m))

    @classmethod
    def zero(cls, degree: int, n: int, m: int) -> "Cochain":
        return cls(degree, n, m, tuple(tuple(vzero(m)) for _ in range(n ** degree)))

    def rank_of(self, tup: Sequence[int]) -> int:
        r = 0
        for t in tup:
            r = r * self.n + t
        return r

    def value_at(self, tup: Sequence[int]) -> tuple:
        return self.values[self.rank_of(tup)]

    def evaluate(self, args: Sequence[Sequence[Fraction]]) -> list[Fraction]:
        """Full multilinear extension to coordinate vectors."""
        if len(args) != self.degree:
            raise ValueError(f"need {self.degree} arguments")
        supports = []
        for v in args:
            if len(v) != self.n:
                raise ValueError(f"arguments must have length {self.n}")
            supports.append([(i, x) for i, x in enumerate(v) if x])
        out = vzero(self.m)
        for combo in itertools.product(*supports):
            coeff = ONE
            idx = []
            for i, x in combo:
                coeff *= x
                idx.append(i)
            vaddto(out, coeff, self.value_at(idx))
        return out

    def add(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.degree, self.n, self.m,
                       tuple(vadd(a, b) for a, b in zip(self.values, other.values)))

    def sub(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.degree, self.n, self.m,
                       tuple(vsub(a, b) for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "Cochain":
        c = as_rational(c)
        return Cochain(self.degree, self.n, self.m,
                       tuple(vscale(c, v) for v in self.values))

    def is_zero(self) -> bool:
        return all(viszero(v) for v in self.values)

    def _compatible(self, other: "Cochain") -> None:
        if (self.degree, self.n, self.m) != (other.degree, other.n, other.m):
            raise ValueError("cochain shape mismatch")


def structure_cochain(g: LeibnizAlgebra) -> Cochain:
    """The bracket of g as a 2-cochain with values in g."""
    n = g.dim
    values = [g.c[i][j] for i in range(n) for j in range(n)]
    return Cochain(2, n, n, tuple(values))


def basis_tuples(n: int, k: int):
    return itertools.product(range(n), repeat=k)


# ---------------------------------------------------------------------------
# the coboundary operator

def coboundary(rep: Representation, c: Cochain) -> Cochain:
    """Apply the coboundary formula literally on every basis (k+1)-tuple."""
    g = rep.algebra
    n, m = g.dim, rep.vdim
    if c.n != n or c.m != m:
        raise ValueError("cochain does not match the representation")
    k = c.degree
    values = []
    for S in basis_tuples(n, k + 1):
        acc = vzero(m)
        for i1 in range(1, k + 1):
            sub = S[:i1 - 1] + S[i1:]
            val = c.value_at(sub)
            if not viszero(val):
                sign = ONE if (i1 + 1) % 2 == 0 else -ONE
                vaddto(acc, sign, rep.l[S[i1 - 1]].mv(val))
        head = c.value_at(S[:k])
        if not viszero(head):
            sign = ONE if (k + 1) % 2 == 0 else -ONE
            vaddto(acc, sign, rep.r[S[k]].mv(head))
        for i1 in range(1, k + 1):
            for j1 in range(i1 + 1, k + 2):
                br = g.c[S[i1 - 1]][S[j1 - 1]]
                if viszero(br):
                    continue
                sign = ONE if i1 % 2 == 0 else -ONE
                reduced = S[:i1 - 1] + S[i1:]
                slot = j1 - 2
                for t, w in enumerate(br):
                    if w:
                        arg = reduced[:slot] + (t,) + reduced[slot + 1:]
                        vaddto(acc, sign * w, c.value_at(arg))
        values.append(tuple(acc))
    return Cochain(k + 1, n, m, tuple(values))


def _column_support(mat: Matrix) -> list[list[tuple[int, Fraction]]]:
    cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(mat.cols)]
    for i in range(mat.rows):
        for j, v in mat.row_items(i):
            cols[j].append((i, v))
    return cols


def coboundary_matrix(rep: Representation, k: int,
                      cap: Optional[int] = DEFAULT_CAP) -> Matrix:
    """Matrix of the degree-k coboundary in the lexicographic monomial basis.

    Shape (n^(k+1) m) x (n^k m); column (t, v) collects the contributions of
    the basis cochain supported on tuple t with value e_v.  Refuses to build
    when the target dimension n^(k+1) m exceeds the cap.
    """
    if k < 0:
        raise ValueError("degree must be >= 0")
    g = rep.algebra
    n, m = g.dim, rep.vdim
    out_dim = n ** (k + 1) * m
    if cap is not None and out_dim > cap:
        raise ResourceCapExceeded(out_dim, cap)
    in_dim = n ** k * m
    data: list[dict[int, Fraction]] = [dict() for _ in range(out_dim)]

    lcols = [_column_support(rep.l[s]) for s in range(n)]
    rcols = [_column_support(rep.r[s]) for s in range(n)]
    # structure constants grouped by target index: target -> [(a, b, coeff)]
    by_target: list[list[tuple[int, int, Fraction]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for t, w in enumerate(g.c[a][b]):
                if w:
                    by_target[t].append((a, b, w))

    def rank_of(tup) -> int:
        r = 0
        for t in tup:
            r = r * n + t
        return r

    def add(row: int, col: int, val: Fraction) -> None:
        cur = data[row].get(col, ZERO) + val
        if cur:
            data[row][col] = cur
        else:
            data[row].pop(col, None)

    r_sign = ONE if (k + 1) % 2 == 0 else -ONE
    for T in basis_tuples(n, k):
        base_col = rank_of(T) * m
        for v in range(m):
            col = base_col + v
            for p in range(k):
                sign = ONE if p % 2 == 0 else -ONE
                for s in range(n):
                    support = lcols[s][v]
                    if not support:
                        continue
                    rbase = rank_of(T[:p] + (s,) + T[p:]) * m
                    for w, val in support:
                        add(rbase + w, col, sign * val)
            for s in range(n):
                support = rcols[s][v]
                if not support:
                    continue
                rbase = rank_of(T + (s,)) * m
                for w, val in support:
                    add(rbase + w, col, r_sign * val)
            for j1 in range(2, k + 2):
                slot = j1 - 2
                for a, b, w in by_target[T[slot]]:
                    u = T[:slot] + (b,) + T[slot + 1:]
                    for i1 in range(1, j1):
                        sign = -w if i1 % 2 == 1 else w
                        rbase = rank_of(u[:i1 - 1] + (a,) + u[i1 - 1:]) * m
                        add(rbase + v, col, sign)
    return Matrix(out_dim, in_dim, data)


@dataclass(frozen=True)
class DegreeData:
    k: int
    dim_cochains: int
    rank_d: int
    dim_ker: int
    dim_h: int


@dataclass(frozen=True)
class BettiReport:
    """Per-degree dimensions of a coboundary complex."""
    degrees: tuple[DegreeData, ...]

    def dim_h(self, k: int) -> int:
        return self.degrees[k].dim_h


def betti(rep: Representation, k_max: int,
          cap: Optional[int] = DEFAULT_CAP, *,
          assert_square_zero: bool = False) -> BettiReport:
    """Cohomology dimensions for degrees 0..k_max via exact rank-nullity.

    With assert_square_zero the consecutive coboundary matrices are also
    multiplied out and required to vanish.
    """
    n, m = rep.algebra.dim, rep.vdim
    ranks = []
    prev_mat: Optional[Matrix] = None
    for k in range(k_max + 1):
        mat = coboundary_matrix(rep, k, cap)
        if assert_square_zero and prev_mat is not None:
            if not (mat @ prev_mat).is_zero():
                raise AssertionError(f"coboundary squared is nonzero at degree {k - 1}")
        ranks.append(rank(mat))
        prev_mat = mat
    rows = []
    for k in range(k_max + 1):
        dim_c = n ** k * m
        dim_ker = dim_c - ranks[k]
        prev = ranks[k - 1] if k else 0
        dim_h = dim_ker - prev
        assert dim_h >= 0, "negative cohomology dimension"
        rows.append(DegreeData(k, dim_c, ranks[k], dim_ker, dim_h))
    return BettiReport(tuple(rows))


# ---------------------------------------------------------------------------
# shuffles, the circle product and the graded bracket

def shuffles(k: int, q: int) -> list[tuple[tuple[int, ...], int]]:
    """(k,q)-shuffles of {1..k+q} with signs.

    A shuffle is ascending on its first k slots and on its last q slots; the
    sign comes from the crossing count sum(s_i - i) over the first block.
    """
    total = k + q
    out = []
    for first in itertools.combinations(range(1, total + 1), k):
        chosen = set(first)
        rest = tuple(x for x in range(1, total + 1) if x not in chosen)
        crossings = sum(s - i for i, s in enumerate(first, start=1))
        out.append((first + rest, -1 if crossings % 2 else 1))
    return out


def shuffles_by_filter(k: int, q: int) -> list[tuple[tuple[int, ...], int]]:
    """Reference implementation: filter all permutations, count inversions."""
    total = k + q
    out = []
    for perm in itertools.permutations(range(1, total + 1)):
        if any(perm[i] > perm[i + 1] for i in range(k - 1)):
            continue
        if any(perm[i] > perm[i + 1] for i in range(k, total - 1)):
            continue
        inv = sum(1 for i in range(total) for j in range(i + 1, total)
                  if perm[i] > perm[j])
        out.append((perm, -1 if inv % 2 else 1))
    return out


def circle_product(alpha: Cochain, beta: Cochain) -> Cochain:
    """Insertion product of g-valued cochains.

    For alpha of degree p+1 and beta of degree q+1:

        (alpha o beta)(x_1..x_{p+q+1}) =
            sum_{k=0..p} (-1)^{kq} sum_{shuffles s of (k,q)} sgn(s)
                alpha(x_{s(1)}..x_{s(k)},
                      beta(x_{s(k+1)}..x_{s(k+q)}, x_{k+q+1}),
                      x_{k+q+2}..x_{p+q+1})
    """
    if alpha.m != alpha.n or beta.m != beta.n or alpha.n != beta.n:
        raise ValueError("circle product needs cochains valued in the algebra itself")
    if alpha.degree < 1 or beta.degree < 1:
        raise ValueError("circle product needs degrees >= 1")
    n = alpha.n
    p = alpha.degree - 1
    q = beta.degree - 1
    deg = p + q + 1
    cache = {kk: shuffles(kk, q) for kk in range(p + 1)}
    values = []
    for X in basis_tuples(n, deg):
        acc = vzero(n)
        for kk in range(p + 1):
            ksign = -1 if (kk * q) % 2 else 1
            trailing = X[kk + q + 1:]
            last = X[kk + q]
            for sigma, ssign in cache[kk]:
                sign = ONE if ksign * ssign > 0 else -ONE
                first = tuple(X[s - 1] for s in sigma[:kk])
                beta_args = tuple(X[s - 1] for s in sigma[kk:]) + (last,)
                bval = beta.value_at(beta_args)
                for t, bv in enumerate(bval):
                    if bv:
                        vaddto(acc, sign * bv,
                               alpha.value_at(first + (t,) + trailing))
        values.append(tuple(acc))
    return Cochain(deg, n, n, tuple(values))


def graded_bracket(alpha: Cochain, beta: Cochain) -> Cochain:
    """[alpha, beta] = alpha o beta + (-1)^(pq+1) beta o alpha."""
    p = alpha.degree - 1
    q = beta.degree - 1
    sign = 1 if (p * q + 1) % 2 == 0 else -1
    return circle_product(alpha, beta).add(circle_product(beta, alpha).scale(sign))


# ---------------------------------------------------------------------------
# semidirect products and the Maurer-Cartan identity

def semidirect(g: LeibnizAlgebra, rep: Representation, mode: str) -> LeibnizAlgebra:
    """Leibniz structure on g (+) V:

        mode "lr": [x+u, y+v] = [x,y] + l_x v + r_y u
        mode "l0": [x+u, y+v] = [x,y] + l_x v
    """
    if mode not in ("lr", "l0"):
        raise ValueError("mode must be 'lr' or 'l0'")
    n, m = g.dim, rep.vdim
    total = n + m
    c = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i][j][k] = g.c[i][j][k]
    for i in range(n):
        for b in range(m):
            col = rep.l[i].column(b)
            for w in range(m):
                if col[w]:
                    c[i][n + b][n + w] = col[w]
    if mode == "lr":
        for a in range(m):
            for j in range(n):
                col = rep.r[j].column(a)
                for w in range(m):
                    if col[w]:
                        c[n + a][j][n + w] = col[w]
    out = LeibnizAlgebra(total, c)
    report = check_leibniz(out)
    if not report.holds:
        raise ValueError("semidirect product violates the Leibniz identity; "
                         f"first witness at {report.witnesses[0].where} "
                         "(is the representation valid?)")
    return out


def rbar(g: LeibnizAlgebra, rep: Representation) -> Cochain:
    """The right action as a 2-cochain on g (+) V:  (x+u, y+v) -> r_y u."""
    n, m = g.dim, rep.vdim
    total = n + m
    values = [vzero(total) for _ in range(total * total)]
    for a in range(m):
        for j in range(n):
            col = rep.r[j].column(a)
            vec = vzero(total)
            for w in range(m):
                vec[n + w] = col[w]
            values[(n + a) * total + j] = vec
    return Cochain(2, total, total, tuple(values))


def maurer_cartan_check(g: LeibnizAlgebra, rep: Representation) -> IdentityReport:
    """Verify that the right action deforms the half-product semidirect algebra.

    Checks, exactly and on all basis tuples, that

        d rbar - [rbar, rbar]/2 = 0

    for the coboundary of the adjoint representation of the (l,0)-product,
    and that the (l,0)-bracket plus rbar equals the (l,r)-bracket.
    """
    h0 = semidirect(g, rep, "l0")
    rb = rbar(g, rep)
    defect = coboundary(adjoint_rep(h0), rb).sub(graded_bracket(rb, rb).scale(HALF))
    witnesses = []
    total = h0.dim
    for S in basis_tuples(total, 3):
        val = defect.value_at(S)
        if not viszero(val):
            witnesses.append(Witness(S, tuple(val), "maurer-cartan"))
    hlr = semidirect(g, rep, "lr")
    for i in range(total):
        for j in range(total):
            d = vsub(vadd(h0.c[i][j], rb.value_at((i, j))), hlr.c[i][j])
            if not viszero(d):
                witnesses.append(Witness((i, j), tuple(d), "deformation"))
    return _report(witnesses)


# ---------------------------------------------------------------------------
# cocycles

def cocycle_check(rep: Representation, c: Cochain) -> bool:
    """True iff the coboundary of c vanishes identically."""
    return coboundary(rep, c).is_zero()


def right_action_cochain(rep: Representation) -> Cochain:
    """The right action as a 1-cochain valued in flattened gl(V)."""
    n, m = rep.algebra.dim, rep.vdim
    values = [tuple(flatten_matrix(rep.r[i])) for i in range(n)]
    return Cochain(1, n, m * m, tuple(values))
