"""JSON encoding of every value the tool reads or writes.

All scalars are strings "p/q" (or just "p" for integers); matrices and
tensors are row-major nested arrays of such strings.  Every document
carries a "schema": "leibniz-kit/1" marker.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .algebra import LeibnizAlgebra
from .cohomology import BettiReport, Representation
from .lie2 import Lie2Algebra
from .linalg import Matrix
from .omni import ComparisonReport, GraphMap, NaiveRepresentation

SCHEMA = "leibniz-kit/1"

_SCALAR_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class SchemaError(ValueError):
    """Input document does not match the expected schema."""


def scalar_to_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def str_to_scalar(s: Any, where: str = "scalar") -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _SCALAR_RE.match(s):
        raise SchemaError(f"{where}: expected an integer or 'p/q' string, got {s!r}")
    return Fraction(s)


def _expect(data: Any, key: str, where: str) -> Any:
    if not isinstance(data, dict):
        raise SchemaError(f"{where}: expected an object")
    if key not in data:
        raise SchemaError(f"{where}: missing key {key!r}")
    return data[key]


def _expect_schema(data: Any, where: str) -> None:
    found = _expect(data, "schema", where)
    if found != SCHEMA:
        raise SchemaError(f"{where}: unsupported schema {found!r} (expected {SCHEMA!r})")


def _expect_dim(data: Any, key: str, where: str) -> int:
    v = _expect(data, key, where)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise SchemaError(f"{where}: {key} must be a nonnegative integer")
    return v


def _expect_list(v: Any, length: int, where: str) -> list:
    if not isinstance(v, list) or len(v) != length:
        raise SchemaError(f"{where}: expected a list of length {length}")
    return v


def vector_to_json(v) -> list[str]:
    return [scalar_to_str(x) for x in v]


def vector_from_json(v: Any, length: int, where: str) -> list[Fraction]:
    return [str_to_scalar(x, f"{where}[{i}]")
            for i, x in enumerate(_expect_list(v, length, where))]


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [vector_to_json(m.row_list(i)) for i in range(m.rows)]


def matrix_from_json(data: Any, rows: int, cols: int, where: str) -> Matrix:
    out = [vector_from_json(row, cols, f"{where}[{i}]")
           for i, row in enumerate(_expect_list(data, rows, where))]
    return Matrix.from_rows(out) if rows else Matrix.zeros(0, cols)


def tensor3_to_json(c) -> list:
    return [[vector_to_json(row) for row in plane] for plane in c]


# ---------------------------------------------------------------------------
# algebras

def algebra_to_json(g: LeibnizAlgebra) -> dict:
    return {"schema": SCHEMA, "dim": g.dim, "c": tensor3_to_json(g.c)}


def algebra_from_json(data: Any) -> LeibnizAlgebra:
    where = "algebra"
    _expect_schema(data, where)
    n = _expect_dim(data, "dim", where)
    raw = _expect_list(_expect(data, "c", where), n, f"{where}.c")
    c = []
    for i, plane in enumerate(raw):
        plane = _expect_list(plane, n, f"{where}.c[{i}]")
        c.append([vector_from_json(row, n, f"{where}.c[{i}][{j}]")
                  for j, row in enumerate(plane)])
    return LeibnizAlgebra(n, c)


# ---------------------------------------------------------------------------
# representations

def representation_to_json(rep: Representation) -> dict:
    return {"schema": SCHEMA, "vdim": rep.vdim,
            "l": [matrix_to_json(m) for m in rep.l],
            "r": [matrix_to_json(m) for m in rep.r]}


def representation_from_json(g: LeibnizAlgebra, data: Any) -> Representation:
    where = "representation"
    _expect_schema(data, where)
    m = _expect_dim(data, "vdim", where)
    ls = [matrix_from_json(mat, m, m, f"{where}.l[{i}]")
          for i, mat in enumerate(_expect_list(_expect(data, "l", where), g.dim, f"{where}.l"))]
    rs = [matrix_from_json(mat, m, m, f"{where}.r[{i}]")
          for i, mat in enumerate(_expect_list(_expect(data, "r", where), g.dim, f"{where}.r"))]
    return Representation(g, m, tuple(ls), tuple(rs))


# ---------------------------------------------------------------------------
# naive representations and graph maps

def naive_to_json(rho: NaiveRepresentation) -> dict:
    return {"schema": SCHEMA, "vdim": rho.vdim,
            "phi": [matrix_to_json(m) for m in rho.phi],
            "theta": [vector_to_json(t) for t in rho.theta]}


def naive_from_json(g: LeibnizAlgebra, data: Any) -> NaiveRepresentation:
    where = "naive representation"
    _expect_schema(data, where)
    m = _expect_dim(data, "vdim", where)
    phi = [matrix_from_json(mat, m, m, f"{where}.phi[{i}]")
           for i, mat in enumerate(_expect_list(_expect(data, "phi", where), g.dim, f"{where}.phi"))]
    theta = [vector_from_json(t, m, f"{where}.theta[{i}]")
             for i, t in enumerate(_expect_list(_expect(data, "theta", where), g.dim, f"{where}.theta"))]
    return NaiveRepresentation(g, m, tuple(phi), tuple(theta))


def graph_to_json(phi: GraphMap) -> dict:
    return {"schema": SCHEMA, "vdim": phi.vdim,
            "phi": [matrix_to_json(m) for m in phi.phi]}


def graph_from_json(data: Any) -> GraphMap:
    where = "graph map"
    _expect_schema(data, where)
    m = _expect_dim(data, "vdim", where)
    mats = [matrix_from_json(mat, m, m, f"{where}.phi[{i}]")
            for i, mat in enumerate(_expect_list(_expect(data, "phi", where), m, f"{where}.phi"))]
    return GraphMap(m, tuple(mats))


# ---------------------------------------------------------------------------
# two-term algebras and reports

def lie2_to_json(L: Lie2Algebra) -> dict:
    return {
        "schema": SCHEMA,
        "dim1": L.dim1,
        "dim0": L.dim0,
        "l1": matrix_to_json(L.l1),
        "l2_00": tensor3_to_json(L.l2_00),
        "l2_01": tensor3_to_json(L.l2_01),
        "l3": [[[vector_to_json(v) for v in row] for row in plane] for plane in L.l3],
    }


def betti_to_json(report: BettiReport) -> dict:
    return {"schema": SCHEMA,
            "degrees": [{"k": d.k, "dim_C": d.dim_cochains, "rank_d": d.rank_d,
                         "dim_ker": d.dim_ker, "dim_H": d.dim_h}
                        for d in report.degrees]}


def comparison_to_json(report: ComparisonReport) -> dict:
    return {"schema": SCHEMA,
            "degrees": [{"k": r.k, "dim_naive": r.dim_naive,
                         "dim_classical": r.dim_classical, "equal": r.equal,
                         **({"informational": True} if r.k == 0 else {})}
                        for r in report.rows],
            "all_equal_from_degree_1": report.all_equal,
            "side_checks_ok": report.side_checks_ok,
            "notes": list(report.notes)}
