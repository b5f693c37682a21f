"""Omni-Lie algebras, graph-induced brackets, naive representations and
their cohomology.

The omni algebra of V = Q^m lives on gl(V) (+) V with the (non-skew)
bracket

    [[A+u, B+v]] = [A, B] + Av,

a Leibniz algebra that plays the role of a general linear object: a naive
representation of g on V is an algebra homomorphism rho: g -> gl(V) (+) V,
equivalently a pair (phi, theta) with

    phi([x,y]) = [phi(x), phi(y)]        theta([x,y]) = phi(x) theta(y).

Cochains valued in the image of rho carry a coboundary built from the omni
bracket; its cohomology is compared degree-by-degree against the classical
complex for the matching representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    IdentityReport,
    LeibnizAlgebra,
    Witness,
    _basis,
    _report,
    check_leibniz,
    derived_subalgebra,
)
from .cohomology import (
    DEFAULT_CAP,
    BettiReport,
    Cochain,
    Matrix,
    Representation,
    adjoint_rep,
    basis_tuples,
    betti,
    check_representation,
    coboundary,
    conjugation_rep,
    flatten_matrix,
    trivial_rep,
)
from .linalg import (
    ONE,
    Subspace,
    as_rational,
    commutator,
    kernel_basis,
    rref,
    vaddto,
    viszero,
    vsub,
    vzero,
)


# ---------------------------------------------------------------------------
# the omni algebra

def omni_bracket(m: int, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
    """[[A+u, B+v]] = [A,B] + Av on flattened coordinates (gl part row-major,
    then the V part).  Iterates only the nonzero matrix entries."""
    m2 = m * m
    if len(x) != m2 + m or len(y) != m2 + m:
        raise ValueError(f"omni vectors must have length {m2 + m}")
    out = vzero(m2 + m)
    for idx in range(m2):
        va = x[idx]
        if not va:
            continue
        a, t = divmod(idx, m)
        row = t * m
        arow = a * m
        for b in range(m):
            vb = y[row + b]
            if vb:
                out[arow + b] += va * vb
        vv = y[m2 + t]
        if vv:
            out[m2 + a] += va * vv
    for idx in range(m2):
        vb = y[idx]
        if not vb:
            continue
        a, t = divmod(idx, m)
        row = t * m
        arow = a * m
        for b in range(m):
            vx = x[row + b]
            if vx:
                out[arow + b] -= vb * vx
    return out


def omni_lie(m: int) -> LeibnizAlgebra:
    """The omni algebra of Q^m as an (m^2+m)-dimensional Leibniz algebra."""
    n = m * m + m
    basis = [_basis(n, p) for p in range(n)]
    c = [[omni_bracket(m, basis[p], basis[q]) for q in range(n)] for p in range(n)]
    out = LeibnizAlgebra(n, c)
    report = check_leibniz(out)
    assert report.holds, "omni bracket failed the Leibniz identity"
    return out


# ---------------------------------------------------------------------------
# graphs of maps V -> gl(V)

@dataclass(frozen=True)
class GraphMap:
    """A linear map phi: V -> gl(V), phi(u) = sum_a u_a phi[a]."""

    vdim: int
    phi: tuple

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(self.phi))
        if len(self.phi) != self.vdim:
            raise ValueError("need one matrix per basis vector of V")
        for mat in self.phi:
            if mat.shape != (self.vdim, self.vdim):
                raise ValueError(f"graph matrices must be {self.vdim}x{self.vdim}")

    def apply(self, u: Sequence[Fraction]) -> Matrix:
        out = Matrix.zeros(self.vdim, self.vdim)
        for a, ua in enumerate(u):
            if ua:
                out = out + self.phi[a].scaled(ua)
        return out


def graph_check(phi: GraphMap) -> IdentityReport:
    """The closure condition [phi(u), phi(v)] = phi(phi(u) v) on basis pairs."""
    m = phi.vdim
    witnesses = []
    for i in range(m):
        for j in range(m):
            rhs = phi.apply(phi.phi[i].column(j))
            d = commutator(phi.phi[i], phi.phi[j]) - rhs
            if not d.is_zero():
                witnesses.append(Witness((i, j), tuple(map(tuple, d.to_rows())), "graph"))
    return _report(witnesses)


def induced_leibniz(phi: GraphMap) -> LeibnizAlgebra:
    """The bracket [u, v] = phi(u) v on V, defined when the graph closes."""
    report = graph_check(phi)
    if not report.holds:
        raise ValueError("graph map fails the closure condition at "
                         f"{report.witnesses[0].where}")
    m = phi.vdim
    c = [[[phi.phi[i].entry(k, j) for k in range(m)] for j in range(m)]
         for i in range(m)]
    out = LeibnizAlgebra(m, c)
    assert check_leibniz(out).holds, "graph-induced bracket failed the Leibniz identity"
    return out


# ---------------------------------------------------------------------------
# naive representations

class NaiveRepresentation:
    """A linear map rho = phi + theta : g -> gl(V) (+) V.

    phi[i] is the gl(V) component and theta[i] the V component of rho(e_i).
    The image subspace is computed once (RREF basis); cochain values are
    stored in its coordinates.
    """

    def __init__(self, algebra: LeibnizAlgebra, vdim: int, phi, theta):
        n = algebra.dim
        phi = tuple(phi)
        theta = tuple(tuple(as_rational(x) for x in t) for t in theta)
        if len(phi) != n or len(theta) != n:
            raise ValueError("need one phi matrix and one theta vector per basis element")
        for mat in phi:
            if mat.shape != (vdim, vdim):
                raise ValueError(f"phi matrices must be {vdim}x{vdim}")
        for t in theta:
            if len(t) != vdim:
                raise ValueError(f"theta vectors must have length {vdim}")
        self.algebra = algebra
        self.vdim = vdim
        self.phi = phi
        self.theta = theta
        self.ambient_dim = vdim * vdim + vdim
        self.rho_vectors = tuple(
            tuple(flatten_matrix(phi[i]) + list(theta[i])) for i in range(n))
        stacked = Matrix.from_rows(self.rho_vectors) if n else Matrix.zeros(0, self.ambient_dim)
        ech = rref(stacked)
        basis = tuple(tuple(ech.matrix.row_list(i)) for i in range(ech.rank))
        self.image = Subspace(self.ambient_dim, basis)
        self._pivots = ech.pivot_columns

    def rho_of(self, x: Sequence[Fraction]) -> list[Fraction]:
        out = vzero(self.ambient_dim)
        for i, xi in enumerate(x):
            if xi:
                vaddto(out, xi, self.rho_vectors[i])
        return out

    def image_coordinates(self, v: Sequence[Fraction]) -> Optional[list[Fraction]]:
        """Coordinates of v in the image basis, or None if v escapes the image.

        The basis is in RREF, so candidate coordinates can be read off the
        pivot positions and then verified.
        """
        coords = [v[p] for p in self._pivots]
        residual = list(v)
        for c, b in zip(coords, self.image.basis):
            if c:
                for t, bt in enumerate(b):
                    if bt:
                        residual[t] -= c * bt
        if not viszero(residual):
            return None
        return coords


def naive_check(rho: NaiveRepresentation) -> IdentityReport:
    """Homomorphism test, both through the component conditions and directly
    against the omni bracket; the two routes must agree."""
    g = rho.algebra
    n = g.dim
    witnesses = []
    for i in range(n):
        for j in range(n):
            br = g.c[i][j]
            phi_br = Matrix.zeros(rho.vdim, rho.vdim)
            for k, w in enumerate(br):
                if w:
                    phi_br = phi_br + rho.phi[k].scaled(w)
            d1 = phi_br - commutator(rho.phi[i], rho.phi[j])
            if not d1.is_zero():
                witnesses.append(Witness((i, j), tuple(map(tuple, d1.to_rows())), "con1"))
            theta_br = vzero(rho.vdim)
            for k, w in enumerate(br):
                if w:
                    vaddto(theta_br, w, rho.theta[k])
            d2 = vsub(theta_br, rho.phi[i].mv(list(rho.theta[j])))
            if not viszero(d2):
                witnesses.append(Witness((i, j), tuple(d2), "con2"))
            rho_br = vzero(rho.ambient_dim)
            for k, w in enumerate(br):
                if w:
                    vaddto(rho_br, w, rho.rho_vectors[k])
            d3 = vsub(rho_br, omni_bracket(rho.vdim, rho.rho_vectors[i],
                                           rho.rho_vectors[j]))
            if not viszero(d3):
                witnesses.append(Witness((i, j), tuple(d3), "hom"))
    return _report(witnesses)


def trivial_naive_space(g: LeibnizAlgebra) -> Subspace:
    """Functionals vanishing on the derived subalgebra: the candidates for
    the V part of a naive representation on Q with zero gl part."""
    derived = derived_subalgebra(g)
    if derived.dim == 0:
        return Subspace(g.dim, tuple(tuple(_basis(g.dim, i)) for i in range(g.dim)))
    return kernel_basis(Matrix.from_rows(derived.basis))


def trivial_naive_rep(g: LeibnizAlgebra, xi: Sequence[Fraction]) -> NaiveRepresentation:
    """The naive representation on Q determined by a functional xi killing [g,g]."""
    zero = Matrix.zeros(1, 1)
    rho = NaiveRepresentation(g, 1, (zero,) * g.dim, tuple((as_rational(x),) for x in xi))
    report = naive_check(rho)
    if not report.holds:
        raise ValueError("functional does not vanish on the derived subalgebra")
    return rho


def adjoint_naive(g: LeibnizAlgebra) -> NaiveRepresentation:
    """rho(x) = (left multiplication by x) + x, acting on g itself."""
    n = g.dim
    rho = NaiveRepresentation(g, n, adjoint_rep(g).l,
                              tuple(tuple(_basis(n, i)) for i in range(n)))
    assert naive_check(rho).holds, "adjoint naive map is not a homomorphism"
    assert rho.image.dim == n
    return rho


def naive_from_rep(rep: Representation) -> NaiveRepresentation:
    """Package a classical representation (V, l, r) as a naive representation
    on the matrix space V* (x) V: the gl part acts by [l_x, .] and the V part
    is the flattened right action."""
    report = check_representation(rep)
    if not report.holds:
        raise ValueError(f"not a representation; first witness {report.witnesses[0].where}")
    n = rep.algebra.dim
    left_only = Representation(rep.algebra, rep.vdim, rep.l,
                               (Matrix.zeros(rep.vdim, rep.vdim),) * n)
    conj = conjugation_rep(left_only)
    theta = tuple(tuple(flatten_matrix(rep.r[i])) for i in range(n))
    rho = NaiveRepresentation(rep.algebra, rep.vdim * rep.vdim, conj.l, theta)
    assert naive_check(rho).holds, "induced naive map is not a homomorphism"
    return rho


# ---------------------------------------------------------------------------
# naive cochains and their coboundary

@dataclass(frozen=True)
class NaiveCochain:
    """A cochain on g valued in the image of a naive representation, stored
    in image coordinates."""

    rep: NaiveRepresentation
    data: Cochain

    def __post_init__(self):
        if self.data.n != self.rep.algebra.dim or self.data.m != self.rep.image.dim:
            raise ValueError("cochain shape does not match the representation image")

    @property
    def degree(self) -> int:
        return self.data.degree

    def ambient_value_at(self, tup) -> list[Fraction]:
        coords = self.data.value_at(tup)
        out = vzero(self.rep.ambient_dim)
        for c, b in zip(coords, self.rep.image.basis):
            vaddto(out, c, b)
        return out


def to_naive_cochain(rho: NaiveRepresentation, ambient_values, degree: int) -> NaiveCochain:
    """Build a naive cochain from ambient gl(V)(+)V value vectors."""
    coords = []
    for v in ambient_values:
        c = rho.image_coordinates(v)
        if c is None:
            raise ValueError("cochain value escapes the image of the representation")
        coords.append(tuple(c))
    return NaiveCochain(rho, Cochain(degree, rho.algebra.dim, rho.image.dim, tuple(coords)))


def image_representation(rho: NaiveRepresentation) -> Representation:
    """The action of g on the image of rho by left/right omni multiplication.

    That this is a representation (which makes the naive coboundary square
    to zero) is re-verified on every instance.
    """
    g = rho.algebra
    n, d, m = g.dim, rho.image.dim, rho.vdim
    ls, rs = [], []
    for i in range(n):
        lcols, rcols = [], []
        for b in rho.image.basis:
            lv = rho.image_coordinates(omni_bracket(m, rho.rho_vectors[i], b))
            rv = rho.image_coordinates(omni_bracket(m, b, rho.rho_vectors[i]))
            if lv is None or rv is None:
                raise ValueError("image of the representation is not closed under "
                                 "the omni bracket; the map is not a homomorphism")
            lcols.append(lv)
            rcols.append(rv)
        ls.append(Matrix.from_cols(d, lcols))
        rs.append(Matrix.from_cols(d, rcols))
    rep = Representation(g, d, tuple(ls), tuple(rs))
    assert check_representation(rep).holds, \
        "omni multiplication on the image is not a representation"
    return rep


def naive_coboundary(rho: NaiveRepresentation, f: NaiveCochain) -> NaiveCochain:
    """The coboundary formula with the omni bracket in place of the actions,
    evaluated on ambient vectors and re-expressed in image coordinates."""
    if f.rep is not rho:
        raise ValueError("cochain belongs to a different representation")
    g = rho.algebra
    n, m = g.dim, rho.vdim
    k = f.degree
    ambient_values = []
    for S in basis_tuples(n, k + 1):
        acc = vzero(rho.ambient_dim)
        for i1 in range(1, k + 1):
            sub = S[:i1 - 1] + S[i1:]
            val = f.ambient_value_at(sub)
            if not viszero(val):
                sign = ONE if (i1 + 1) % 2 == 0 else -ONE
                vaddto(acc, sign, omni_bracket(m, rho.rho_vectors[S[i1 - 1]], val))
        head = f.ambient_value_at(S[:k])
        if not viszero(head):
            sign = ONE if (k + 1) % 2 == 0 else -ONE
            vaddto(acc, sign, omni_bracket(m, head, rho.rho_vectors[S[k]]))
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
                        vaddto(acc, sign * w, f.ambient_value_at(arg))
        ambient_values.append(acc)
    return to_naive_cochain(rho, ambient_values, k + 1)


def naive_betti(rho: NaiveRepresentation, k_max: int,
                cap: Optional[int] = DEFAULT_CAP) -> BettiReport:
    """Cohomology of the naive complex, computed through the induced
    representation on the image; squares of the coboundary matrices are
    asserted to vanish."""
    return betti(image_representation(rho), k_max, cap, assert_square_zero=True)


# ---------------------------------------------------------------------------
# degree-by-degree comparisons

@dataclass(frozen=True)
class ComparisonRow:
    k: int
    dim_naive: int
    dim_classical: int
    equal: bool


@dataclass(frozen=True)
class ComparisonReport:
    """Naive-vs-classical cohomology dimensions.  Degree 0 is reported for
    information only; the headline equality is over degrees >= 1."""

    rows: tuple[ComparisonRow, ...]
    side_checks_ok: bool = True
    notes: tuple[str, ...] = ()

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.rows if r.k >= 1)

    def row(self, k: int) -> ComparisonRow:
        return self.rows[k]


def _rows_from_dims(naive_dims, classical_dims) -> tuple[ComparisonRow, ...]:
    return tuple(ComparisonRow(k, a, b, a == b)
                 for k, (a, b) in enumerate(zip(naive_dims, classical_dims)))


def compare_trivial(g: LeibnizAlgebra, k_max: int,
                    cap: Optional[int] = DEFAULT_CAP) -> ComparisonReport:
    """Naive cohomology of a rank-one naive representation with zero gl part
    against the cohomology of the trivial representation (Q, 0, 0).

    When [g,g] = g the only such naive map is zero and its complex vanishes;
    the classical side is then expected to vanish in degrees >= 1 as well.
    """
    classical = betti(trivial_rep(g), k_max, cap)
    space = trivial_naive_space(g)
    if space.dim == 0:
        naive_dims = [0] * (k_max + 1)
        notes = ("derived subalgebra is all of g; the zero map is the only "
                 "rank-one naive representation and its complex vanishes",)
    else:
        rho = trivial_naive_rep(g, space.basis[0])
        naive = naive_betti(rho, k_max, cap)
        naive_dims = [naive.dim_h(k) for k in range(k_max + 1)]
        notes = ()
    classical_dims = [classical.dim_h(k) for k in range(k_max + 1)]
    return ComparisonReport(_rows_from_dims(naive_dims, classical_dims), True, notes)


def _adjoint_embed(rho: NaiveRepresentation, frak: Cochain) -> NaiveCochain:
    """The correspondence sending a g-valued cochain F to the image-valued
    cochain x -> rho(F(x))."""
    ambient = [rho.rho_of(v) for v in frak.values]
    return to_naive_cochain(rho, ambient, frak.degree)


def compare_adjoint(g: LeibnizAlgebra, k_max: int,
                    cap: Optional[int] = DEFAULT_CAP) -> ComparisonReport:
    """Naive cohomology of the adjoint naive representation against the
    classical adjoint cohomology.

    Besides the dimension comparison, the chain-level correspondence is
    verified on every basis cochain of the degrees involved: embedding a
    g-valued cochain into the image and applying the naive coboundary must
    agree with embedding its classical coboundary.
    """
    rho = adjoint_naive(g)
    arep = adjoint_rep(g)
    side_ok, notes = _verify_adjoint_correspondence(rho, arep, k_max, cap)
    naive = naive_betti(rho, k_max, cap)
    classical = betti(arep, k_max, cap)
    rows = _rows_from_dims([naive.dim_h(k) for k in range(k_max + 1)],
                           [classical.dim_h(k) for k in range(k_max + 1)])
    return ComparisonReport(rows, side_ok, tuple(notes))


def _verify_adjoint_correspondence(rho, arep, k_max, cap):
    n = rho.algebra.dim
    notes = []
    ok = True
    for k in range(min(k_max, 2) + 1):
        if cap is not None and (n ** (k + 1)) * max(rho.image.dim, 1) > cap:
            notes.append(f"correspondence check skipped from degree {k} on (cap)")
            return ok, notes
        count = n ** k
        for pos in range(count):
            for v in range(n):
                values = [tuple(vzero(n)) for _ in range(count)]
                e = vzero(n)
                e[v] = ONE
                values[pos] = tuple(e)
                frak = Cochain(k, n, n, tuple(values))
                lhs = naive_coboundary(rho, _adjoint_embed(rho, frak))
                rhs = _adjoint_embed(rho, coboundary(arep, frak))
                if lhs.data != rhs.data:
                    ok = False
                    notes.append(f"correspondence fails on basis cochain "
                                 f"(degree {k}, tuple #{pos}, value {v})")
    return ok, notes


def tautological_rep(phi: GraphMap) -> NaiveRepresentation:
    """u -> phi(u) + u over the algebra the graph induces on V."""
    g = induced_leibniz(phi)
    m = phi.vdim
    rho = NaiveRepresentation(g, m, phi.phi,
                              tuple(tuple(_basis(m, i)) for i in range(m)))
    assert naive_check(rho).holds, "tautological graph map is not a homomorphism"
    return rho


def graph_rep_cohomology(rho: NaiveRepresentation, phi: GraphMap, k_max: int,
                         cap: Optional[int] = DEFAULT_CAP) -> ComparisonReport:
    """Naive cohomology of a representation landing in a closed graph against
    the classical complex of the induced actions

        l_x u = phi(theta(x)) u          r_x u = phi(u) theta(x).
    """
    if not graph_check(phi).holds:
        raise ValueError("graph map fails the closure condition")
    if phi.vdim != rho.vdim:
        raise ValueError("graph and representation act on different spaces")
    g = rho.algebra
    n, m = g.dim, rho.vdim
    for i in range(n):
        if phi.apply(rho.theta[i]) != rho.phi[i]:
            raise ValueError(f"image of basis element {i} escapes the graph")
    if not naive_check(rho).holds:
        raise ValueError("the map is not a naive representation")
    ls = tuple(phi.apply(rho.theta[i]) for i in range(n))
    rs = []
    for i in range(n):
        cols = [phi.phi[a].mv(list(rho.theta[i])) for a in range(m)]
        rs.append(Matrix.from_cols(m, cols))
    rep = Representation(g, m, ls, tuple(rs))
    report = check_representation(rep)
    if not report.holds:
        raise ValueError("induced actions fail the representation conditions at "
                         f"{report.witnesses[0].where}")
    naive = naive_betti(rho, k_max, cap)
    classical = betti(rep, k_max, cap)
    rows = _rows_from_dims([naive.dim_h(k) for k in range(k_max + 1)],
                           [classical.dim_h(k) for k in range(k_max + 1)])
    return ComparisonReport(rows, True, ())
