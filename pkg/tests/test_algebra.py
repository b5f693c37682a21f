from __future__ import annotations

from fractions import Fraction

import pytest

from leibniz_kit import (
    LeibnizAlgebra,
    bracket,
    check_leibniz,
    derived_subalgebra,
    is_lie,
    left_center,
    quotient_by_left_center,
    square_in_center_check,
)
from leibniz_kit.fixtures import heisenberg3, l2_algebra, nonleibniz, sl2

F = Fraction
E = lambda n, i: [F(j == i) for j in range(n)]


def test_bracket_abelian():
    g = LeibnizAlgebra.abelian(3)
    assert bracket(g, [F(1), F(2), F(3)], [F(4), F(5), F(6)]) == [F(0)] * 3


def test_bracket_reads_structure_constants():
    g = l2_algebra()
    assert bracket(g, E(2, 0), E(2, 0)) == E(2, 1)          # [e1, e1] = e2
    assert bracket(g, E(2, 0), E(2, 1)) == [F(0), F(0)]
    h = heisenberg3()
    assert bracket(h, E(3, 1), E(3, 0)) == [F(0), F(0), F(-1)]   # [e2, e1] = -e3


def test_bracket_is_bilinear():
    g = heisenberg3()
    x, y = [F(2), F(1), F(0)], [F(-1), F(3), F(5)]
    lhs = bracket(g, x, y)
    expected = [F(0)] * 3
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            for k, c in enumerate(g.c[i][j]):
                expected[k] += xi * yj * c
    assert lhs == expected


def test_bracket_rejects_wrong_length():
    with pytest.raises(ValueError):
        bracket(l2_algebra(), [F(1)], [F(1), F(0)])


def test_check_leibniz_positive(positive_algebras):
    for name, g in positive_algebras.items():
        report = check_leibniz(g)
        assert report.holds, f"{name} unexpectedly fails: {report.witnesses[:3]}"


def test_check_leibniz_negative_witness():
    report = check_leibniz(nonleibniz())
    assert not report.holds
    w = report.witnesses[0]
    # defect of [e1,[e1,e1]] - [[e1,e1],e1] - [e1,[e1,e1]] with [e1,e1] = e1
    assert w.where == (0, 0, 0)
    assert w.defect == (F(-1),)


def test_zero_dimensional_algebra_is_fine():
    g = LeibnizAlgebra.abelian(0)
    assert check_leibniz(g).holds
    assert left_center(g).dim == 0
    assert derived_subalgebra(g).dim == 0
    assert is_lie(g)
    q, proj = quotient_by_left_center(g)
    assert q.dim == 0 and proj.shape == (0, 0)


def test_left_center_abelian_is_everything():
    for n in (1, 2, 3):
        assert left_center(LeibnizAlgebra.abelian(n)).dim == n


def test_left_center_l2_is_span_e2():
    z = left_center(l2_algebra())
    assert z.dim == 1
    assert z.contains(E(2, 1))
    assert not z.contains(E(2, 0))


def test_left_center_sl2_is_zero():
    assert left_center(sl2()).dim == 0


def test_left_center_is_an_ideal(positive_algebras):
    # [z, x] = 0 by definition; [x, z] must land back in the center
    for name, g in positive_algebras.items():
        z = left_center(g)
        for zv in z.basis:
            for i in range(g.dim):
                assert all(not c for c in bracket(g, list(zv), E(g.dim, i)))
                assert z.contains(bracket(g, E(g.dim, i), list(zv))), name


def test_derived_subalgebra():
    assert derived_subalgebra(LeibnizAlgebra.abelian(2)).dim == 0
    d = derived_subalgebra(l2_algebra())
    assert d.dim == 1 and d.contains(E(2, 1))
    assert derived_subalgebra(sl2()).dim == 3


def test_is_lie():
    assert is_lie(heisenberg3())
    assert is_lie(sl2())
    assert not is_lie(l2_algebra())
    assert is_lie(LeibnizAlgebra.abelian(2))


def test_square_in_center(positive_algebras):
    for name, g in positive_algebras.items():
        assert square_in_center_check(g).holds, name


def test_square_in_center_negative():
    assert not square_in_center_check(nonleibniz()).holds


def test_quotient_abelian():
    q, _ = quotient_by_left_center(LeibnizAlgebra.abelian(3))
    assert q.dim == 0


def test_quotient_l2():
    q, proj = quotient_by_left_center(l2_algebra())
    assert q.dim == 1
    assert is_lie(q)
    assert all(not c for row in q.c for v in row for c in v)  # abelian
    # the projection kills the center and is the identity on the complement
    assert proj.mv(E(2, 1)) == [F(0)]
    assert proj.mv(E(2, 0)) == [F(1)]


def test_quotient_sl2_is_itself():
    q, proj = quotient_by_left_center(sl2())
    assert q.dim == 3
    assert q.c == sl2().c
    from leibniz_kit.linalg import Matrix
    assert proj == Matrix.identity(3)


def test_quotient_heis3():
    q, _ = quotient_by_left_center(heisenberg3())
    assert q.dim == 2
    assert is_lie(q)
    assert all(not c for row in q.c for v in row for c in v)


def test_quotient_is_lie_for_all_fixtures(positive_algebras):
    for name, g in positive_algebras.items():
        q, _ = quotient_by_left_center(g)
        assert is_lie(q), name
        assert check_leibniz(q).holds, name
