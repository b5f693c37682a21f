from __future__ import annotations

from fractions import Fraction

import pytest

from leibniz_kit import (
    Cochain,
    LeibnizAlgebra,
    Matrix,
    NaiveRepresentation,
    adjoint_naive,
    adjoint_rep,
    betti,
    bracket,
    build_lie2,
    check_leibniz,
    coboundary,
    coboundary_matrix,
    compare_adjoint,
    compare_trivial,
    graded_bracket,
    graph_check,
    graph_rep_cohomology,
    image_representation,
    induced_leibniz,
    left_center,
    naive_betti,
    naive_check,
    naive_coboundary,
    naive_from_rep,
    omni_bracket,
    omni_lie,
    structure_cochain,
    tautological_rep,
    to_naive_cochain,
    trivial_naive_rep,
    trivial_naive_space,
    trivial_rep,
    verify_lie2,
)
from leibniz_kit.fixtures import (
    bad_graph,
    bad_representation,
    graph_for,
    heisenberg3,
    l2_algebra,
    sl2,
)
from leibniz_kit.omni import GraphMap, NaiveCochain

F = Fraction
E = lambda n, i: [F(j == i) for j in range(n)]


# ---------------------------------------------------------------------------
# the omni algebra

def test_omni_zero_dim():
    assert omni_lie(0).dim == 0


def test_omni_one_dim_structure():
    # gl(Q) (+) Q: only [a+u, b+v] = av survives
    g = omni_lie(1)
    assert g.dim == 2
    assert g.c[0][1][1] == F(1)
    total = sum(1 for i in range(2) for j in range(2) for k in range(2) if g.c[i][j][k])
    assert total == 1


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_omni_is_leibniz(m):
    assert check_leibniz(omni_lie(m)).holds


@pytest.mark.parametrize("m", [1, 2, 3])
def test_omni_left_center_is_the_vector_part(m):
    g = omni_lie(m)
    z = left_center(g)
    assert z.dim == m
    for v in z.basis:
        assert all(not c for c in v[:m * m])   # no gl component


def test_omni_lie2_passes_axioms():
    for m in (1, 2):
        assert verify_lie2(build_lie2(omni_lie(m))).all_pass


# ---------------------------------------------------------------------------
# graphs

def test_zero_graph_closes():
    phi = GraphMap(2, (Matrix.zeros(2, 2),) * 2)
    assert graph_check(phi).holds
    induced = induced_leibniz(phi)
    assert all(not c for p in induced.c for r in p for c in r)


def test_scalar_multiplication_graph_fails():
    # m = 1, phi(u) = u: commutators vanish but phi(phi(u)v) = uv does not
    phi = GraphMap(1, (Matrix.identity(1),))
    report = graph_check(phi)
    assert not report.holds
    assert report.witnesses[0].where == (0, 0)


def test_bad_graph_fails_at_first_pair():
    report = graph_check(bad_graph())
    assert not report.holds
    assert (0, 0) in {w.where for w in report.witnesses}


def test_left_multiplication_graphs_close(positive_algebras):
    for name, g in positive_algebras.items():
        if g.dim > 4:
            continue
        phi = graph_for(g)
        assert graph_check(phi).holds, name
        assert induced_leibniz(phi).c == g.c, name


def test_induced_leibniz_rejects_bad_graph():
    with pytest.raises(ValueError):
        induced_leibniz(bad_graph())


def test_induced_structure_has_vanishing_self_bracket():
    g = induced_leibniz(graph_for(heisenberg3()))
    alpha = structure_cochain(g)
    assert graded_bracket(alpha, alpha).is_zero()


def test_graph_subalgebra_brackets_match_induced():
    # inside the omni algebra, [[phi(u)+u, phi(v)+v]] = phi([u,v]) + [u,v]
    phi = graph_for(l2_algebra())
    g = induced_leibniz(phi)
    m = phi.vdim
    rho = tautological_rep(phi)
    for i in range(m):
        for j in range(m):
            br = bracket(g, E(m, i), E(m, j))
            expected = rho.rho_of(br)
            got = omni_bracket(m, rho.rho_vectors[i], rho.rho_vectors[j])
            assert got == expected


# ---------------------------------------------------------------------------
# naive representations

def test_zero_naive_rep_passes():
    g = sl2()
    rho = NaiveRepresentation(g, 2, (Matrix.zeros(2, 2),) * 3,
                              ([F(0), F(0)],) * 3)
    assert naive_check(rho).holds
    assert rho.image.dim == 0


def test_adjoint_naive_valid(positive_algebras):
    for name, g in positive_algebras.items():
        rho = adjoint_naive(g)
        assert naive_check(rho).holds, name
        assert rho.image.dim == g.dim, name


def test_left_action_with_zero_theta_is_naive():
    g = l2_algebra()
    rho = NaiveRepresentation(g, 2, adjoint_rep(g).l, ([F(0), F(0)],) * 2)
    assert naive_check(rho).holds


def test_naive_check_three_routes_agree_on_corruption():
    g = l2_algebra()
    good = adjoint_naive(g)
    # corrupt theta: breaks the cocycle condition and the direct test alike
    theta = (list(E(2, 0)), [F(1), F(1)])
    bad = NaiveRepresentation(g, 2, good.phi, theta)
    report = naive_check(bad)
    assert not report.holds
    labels = {w.label for w in report.witnesses}
    assert "con2" in labels and "hom" in labels and "con1" not in labels


def test_trivial_naive_space_values():
    assert trivial_naive_space(LeibnizAlgebra.abelian(3)).dim == 3
    s = trivial_naive_space(l2_algebra())
    assert s.dim == 1
    assert s.contains([F(1), F(0)])
    assert trivial_naive_space(sl2()).dim == 0


def test_trivial_naive_rep_rejects_bad_functional():
    with pytest.raises(ValueError):
        trivial_naive_rep(l2_algebra(), [F(0), F(1)])   # does not kill [g,g]


def test_naive_from_rep_targets_matrix_space():
    rho = naive_from_rep(adjoint_rep(l2_algebra()))
    assert rho.vdim == 4
    assert naive_check(rho).holds
    rho3 = naive_from_rep(adjoint_rep(heisenberg3()))
    assert rho3.vdim == 9
    assert naive_check(rho3).holds


def test_naive_from_rep_zero_rep():
    g = l2_algebra()
    rho = naive_from_rep(trivial_rep(g))
    assert rho.vdim == 1
    assert rho.image.dim == 0


def test_naive_from_rep_rejects_invalid():
    with pytest.raises(ValueError):
        naive_from_rep(bad_representation())


# ---------------------------------------------------------------------------
# the naive coboundary: two routes

def _basis_naive_cochains(rho, degree):
    n, d = rho.algebra.dim, rho.image.dim
    count = n ** degree
    for pos in range(count):
        for t in range(d):
            values = [[F(0)] * d for _ in range(count)]
            values[pos][t] = F(1)
            yield NaiveCochain(rho, Cochain(degree, n, d, tuple(map(tuple, values))))


def test_naive_coboundary_agrees_with_image_representation(small_algebras):
    for name, g in small_algebras.items():
        for rho in (adjoint_naive(g),):
            rep = image_representation(rho)
            for k in range(2):
                for f in _basis_naive_cochains(rho, k):
                    direct = naive_coboundary(rho, f)
                    via_rep = coboundary(rep, f.data)
                    assert direct.data == via_rep, (name, k)


def test_naive_coboundary_trivial_rep_reduces_to_bracket_sum():
    # for a rank-one image with zero gl part the omni brackets vanish and
    # only the structure-constant sum of the coboundary survives
    for g in (l2_algebra(), heisenberg3()):
        space = trivial_naive_space(g)
        rho = trivial_naive_rep(g, space.basis[0])
        rep = image_representation(rho)
        triv = trivial_rep(g)
        for k in range(3):
            assert coboundary_matrix(rep, k) == coboundary_matrix(triv, k)


def test_naive_cochain_shape_checked():
    rho = adjoint_naive(l2_algebra())
    with pytest.raises(ValueError):
        NaiveCochain(rho, Cochain.zero(1, 2, 5))


def test_to_naive_cochain_rejects_values_outside_image():
    rho = adjoint_naive(l2_algebra())
    stray = [F(1)] + [F(0)] * (rho.ambient_dim - 1)
    with pytest.raises(ValueError):
        to_naive_cochain(rho, [stray, stray], 1)


def test_naive_betti_of_zero_rep_is_zero():
    g = sl2()
    rho = NaiveRepresentation(g, 1, (Matrix.zeros(1, 1),) * 3, ([F(0)],) * 3)
    report = naive_betti(rho, 2)
    assert [d.dim_h for d in report.degrees] == [0, 0, 0]


# ---------------------------------------------------------------------------
# the comparison theorems

def test_compare_trivial_small_fixtures(small_algebras):
    for name, g in small_algebras.items():
        report = compare_trivial(g, 3)
        assert report.all_equal, (name, report.rows)


def test_compare_trivial_derived_everything_branch():
    report = compare_trivial(sl2(), 3)
    assert report.all_equal
    assert report.notes  # the zero-complex branch explains itself
    for row in report.rows:
        if row.k >= 1:
            assert row.dim_naive == 0 and row.dim_classical == 0
    # degree 0 is informational: constants survive classically, not naively
    assert report.rows[0].dim_classical == 1
    assert report.rows[0].dim_naive == 0


def test_compare_trivial_choice_independence():
    # two different functionals give the same dimensions
    g = LeibnizAlgebra.abelian(2)
    space = trivial_naive_space(g)
    assert space.dim == 2
    dims = []
    for xi in space.basis:
        rho = trivial_naive_rep(g, xi)
        report = naive_betti(rho, 3)
        dims.append([d.dim_h for d in report.degrees])
    assert dims[0] == dims[1]


def test_compare_adjoint_small_fixtures(small_algebras):
    for name, g in small_algebras.items():
        report = compare_adjoint(g, 2)
        assert report.all_equal, (name, report.rows)
        assert report.side_checks_ok, name


def test_compare_adjoint_degree0_matches_here():
    # with the literal degree-0 instantiation both complexes agree at 0 too
    report = compare_adjoint(l2_algebra(), 2)
    assert report.rows[0].equal


# ---------------------------------------------------------------------------
# graph representations

def test_graph_rep_cohomology_tautological():
    for g in (l2_algebra(), heisenberg3()):
        phi = graph_for(g)
        rho = tautological_rep(phi)
        report = graph_rep_cohomology(rho, phi, 3 if g.dim == 2 else 2)
        assert report.all_equal, report.rows


def test_graph_rep_matches_adjoint_actions():
    # the tautological representation of a left-multiplication graph induces
    # exactly the adjoint actions
    g = l2_algebra()
    phi = graph_for(g)
    rho = tautological_rep(phi)
    ad = adjoint_rep(g)
    n = g.dim
    for i in range(n):
        assert phi.apply(rho.theta[i]) == ad.l[i]
        cols = [phi.phi[a].mv(list(rho.theta[i])) for a in range(n)]
        assert Matrix.from_cols(n, cols) == ad.r[i]


def test_graph_rep_rejects_escaping_image():
    phi = graph_for(l2_algebra())
    g = induced_leibniz(phi)
    # zero gl part but nonzero theta: rho(e_i) is not on the graph
    rho = NaiveRepresentation(g, 2, (Matrix.zeros(2, 2),) * 2,
                              tuple(tuple(E(2, i)) for i in range(2)))
    with pytest.raises(ValueError):
        graph_rep_cohomology(rho, phi, 2)


def test_graph_rep_rejects_bad_graph():
    phi = bad_graph()
    g = l2_algebra()
    rho = NaiveRepresentation(g, 2, (Matrix.zeros(2, 2),) * 2,
                              ([F(0), F(0)],) * 2)
    with pytest.raises(ValueError):
        graph_rep_cohomology(rho, phi, 2)


def test_graph_rep_zero_theta_reduces_to_trivial_branch():
    # theta = 0 forces rho = 0; over sl2 both sides vanish in degrees >= 1
    g = sl2()
    phi = GraphMap(2, (Matrix.zeros(2, 2),) * 2)
    rho = NaiveRepresentation(g, 2, (Matrix.zeros(2, 2),) * 3,
                              ([F(0), F(0)],) * 3)
    report = graph_rep_cohomology(rho, phi, 2)
    assert report.all_equal
    for row in report.rows:
        if row.k >= 1:
            assert row.dim_naive == 0 and row.dim_classical == 0


def test_graph_rep_surjective_quotient_theta():
    # heis3 -> Q^2 (kill the center), phi = 0: a non-injective surjective
    # theta; both complexes coincide with the rank-two trivial complex
    g = heisenberg3()
    phi = GraphMap(2, (Matrix.zeros(2, 2),) * 2)
    theta = (E(2, 0), E(2, 1), [F(0), F(0)])
    rho = NaiveRepresentation(g, 2, (Matrix.zeros(2, 2),) * 3, theta)
    assert naive_check(rho).holds
    assert rho.image.dim == 2
    report = graph_rep_cohomology(rho, phi, 2)
    assert report.all_equal, report.rows


def test_scaled_theta_admissible_only_for_zero_actions():
    # doubling theta on the tautological L2 representation breaks the
    # homomorphism condition (the two sides scale differently) ...
    phi = graph_for(l2_algebra())
    g = induced_leibniz(phi)
    doubled = NaiveRepresentation(g, 2, tuple(m.scaled(2) for m in phi.phi),
                                  tuple(tuple(2 * x for x in E(2, i)) for i in range(2)))
    assert not naive_check(doubled).holds
    with pytest.raises(ValueError):
        graph_rep_cohomology(doubled, phi, 2)
    # ... but stays admissible when the graph is zero and theta kills [g,g]
    h = heisenberg3()
    zero_phi = GraphMap(2, (Matrix.zeros(2, 2),) * 2)
    theta = (E(2, 0), E(2, 1), [F(0), F(0)])
    doubled_theta = tuple(tuple(2 * x for x in t) for t in theta)
    rho2 = NaiveRepresentation(h, 2, (Matrix.zeros(2, 2),) * 3, doubled_theta)
    assert naive_check(rho2).holds
    report = graph_rep_cohomology(rho2, zero_phi, 2)
    assert report.all_equal
