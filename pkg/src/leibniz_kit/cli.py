"""Command-line front end.

Commands read algebra/representation/graph JSON from files or stdin ("-"),
print human-readable summaries (or machine reports with --json), and emit
algebra JSON on stdout where the result is itself an algebra, so commands
compose in pipelines:

    leibniz-kit omni --dim 2 | leibniz-kit check -

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 malformed
input, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import fixtures as fixture_corpus
from .algebra import (
    check_leibniz,
    derived_subalgebra,
    is_lie,
    left_center,
    square_in_center_check,
)
from .cohomology import (
    DEFAULT_CAP,
    ResourceCapExceeded,
    adjoint_rep,
    betti,
    check_representation,
    maurer_cartan_check,
    semidirect,
    trivial_rep,
)
from .lie2 import build_lie2, check_jacobiator_identities, verify_lie2
from .omni import (
    adjoint_naive,
    compare_adjoint,
    compare_trivial,
    graph_check,
    induced_leibniz,
    naive_betti,
    naive_from_rep,
    omni_lie,
    trivial_naive_rep,
    trivial_naive_space,
)
from .serialize import (
    SCHEMA,
    SchemaError,
    algebra_from_json,
    algebra_to_json,
    betti_to_json,
    comparison_to_json,
    graph_from_json,
    lie2_to_json,
    representation_from_json,
    scalar_to_str,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

CAP_ENV_VAR = "LEIBNIZ_KIT_CAP"


def _cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError:
        raise SchemaError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}")
    if value <= 0:
        raise SchemaError(f"{CAP_ENV_VAR} must be positive")
    return value


class _Run:
    """Collects inputs, results and timing for the final report."""

    def __init__(self, args):
        self.command = args.command
        self.json_mode = getattr(args, "json", False)
        self.inputs: list[dict] = []
        self.results: dict = {}
        self.started = time.perf_counter()
        self.failures: list[str] = []

    def read_document(self, source: str, what: str) -> dict:
        if source == "-":
            raw = sys.stdin.buffer.read()
            label = "<stdin>"
        else:
            try:
                with open(source, "rb") as fh:
                    raw = fh.read()
            except OSError as exc:
                raise SchemaError(f"cannot read {what} from {source}: {exc}")
            label = source
        self.inputs.append({"source": label,
                            "sha256": hashlib.sha256(raw).hexdigest()})
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise SchemaError(f"{label}: not valid JSON ({exc})")

    def say(self, line: str) -> None:
        if not self.json_mode:
            print(line)

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def finish(self, payload=None) -> int:
        status = "fail" if self.failures else "pass"
        code = EXIT_CHECK_FAILED if self.failures else EXIT_OK
        if self.json_mode:
            report = {
                "schema": SCHEMA,
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "failures": self.failures,
                "elapsed_s": round(time.perf_counter() - self.started, 6),
                "status": status,
            }
            print(json.dumps(report, indent=1))
        else:
            for message in self.failures:
                print(f"FAILED: {message}")
            if payload is not None:
                print(json.dumps(payload, indent=1))
        if not self.json_mode and not self.failures and payload is None:
            print("ok")
        return code


def _format_defect(defect) -> str:
    if defect and isinstance(defect[0], tuple):
        return "[" + "; ".join(_format_defect(row) for row in defect) + "]"
    return "(" + ", ".join(scalar_to_str(x) for x in defect) + ")"


def _witness_lines(report, limit: int = 5) -> list[str]:
    lines = []
    for w in report.witnesses[:limit]:
        lines.append(f"  witness {w.label or 'defect'} at {w.where}: "
                     f"{_format_defect(w.defect)}")
    if len(report.witnesses) > limit:
        lines.append(f"  ... and {len(report.witnesses) - limit} more")
    return lines


def _basis_strings(space) -> list[list[str]]:
    return [[scalar_to_str(x) for x in v] for v in space.basis]


def cmd_check(args) -> int:
    run = _Run(args)
    g = algebra_from_json(run.read_document(args.algebra, "algebra"))
    leib = check_leibniz(g)
    run.results["dim"] = g.dim
    run.results["leibniz"] = leib.holds
    run.say(f"dimension: {g.dim}")
    run.say(f"Leibniz identity: {'ok' if leib.holds else 'FAILED'}")
    if not leib.holds:
        for line in _witness_lines(leib):
            run.say(line)
        run.fail(f"Leibniz identity fails on {len(leib.witnesses)} basis triples; "
                 f"first witness at {leib.witnesses[0].where}")
    z = left_center(g)
    run.results["left_center_dim"] = z.dim
    run.results["left_center_basis"] = _basis_strings(z)
    basis_note = ""
    if z.dim:
        basis_note = ", basis " + " ".join(
            "(" + ", ".join(v) + ")" for v in _basis_strings(z))
    run.say(f"left center: dim {z.dim}{basis_note}")
    der = derived_subalgebra(g)
    run.results["derived_dim"] = der.dim
    run.say(f"derived subalgebra: dim {der.dim}")
    sq = square_in_center_check(g)
    run.results["squares_in_left_center"] = sq.holds
    run.say(f"squares in left center: {'ok' if sq.holds else 'FAILED'}")
    if not sq.holds:
        run.fail("some square [x,x] acts nontrivially on the left")
    lie = is_lie(g)
    run.results["lie"] = lie
    run.say(f"Lie algebra: {'yes' if lie else 'no'}")
    return run.finish()


def cmd_lie2(args) -> int:
    run = _Run(args)
    g = algebra_from_json(run.read_document(args.algebra, "algebra"))
    leib = check_leibniz(g)
    if not leib.holds:
        run.fail("input is not a Leibniz algebra")
        return run.finish()
    jac = check_jacobiator_identities(g)
    run.results["jacobiator_identities"] = jac.holds
    run.say(f"Jacobiator identities: {'ok' if jac.holds else 'FAILED'}")
    if not jac.holds:
        for line in _witness_lines(jac):
            run.say(line)
        run.fail("Jacobiator identities failed")
    L = build_lie2(g)
    axioms = verify_lie2(L)
    run.results["dim1"] = L.dim1
    run.results["dim0"] = L.dim0
    run.results["axioms"] = dict(axioms.passed)
    run.results["lie2"] = lie2_to_json(L)
    run.say(f"graded pieces: degree 1 of dim {L.dim1}, degree 0 of dim {L.dim0}")
    for name in "abcde":
        run.say(f"axiom ({name}): {'ok' if axioms.passed[name] else 'FAILED'}")
    if not axioms.all_pass:
        failed = [name for name in "abcde" if not axioms.passed[name]]
        run.fail(f"axioms failed: {', '.join(failed)}")
    return run.finish(run.results["lie2"] if args.emit else None)


def _resolve_representation(run, args, g):
    if args.rep == "trivial":
        return trivial_rep(g), "trivial"
    if args.rep == "adjoint":
        return adjoint_rep(g), "adjoint"
    doc = run.read_document(args.rep, "representation")
    return representation_from_json(g, doc), args.rep


def _betti_table(run, label, report):
    run.say(f"{label}:")
    run.say("  k  dim_C  rank_d  dim_ker  dim_H")
    for d in report.degrees:
        run.say(f"  {d.k}  {d.dim_cochains:5d}  {d.rank_d:6d}  "
                f"{d.dim_ker:7d}  {d.dim_h:5d}")


def cmd_cohomology(args) -> int:
    run = _Run(args)
    cap = _cap()
    g = algebra_from_json(run.read_document(args.algebra, "algebra"))
    rep, rep_label = _resolve_representation(run, args, g)
    rep_report = check_representation(rep)
    if not rep_report.holds:
        run.fail(f"input is not a representation; first witness at "
                 f"{rep_report.witnesses[0].where}")
        return run.finish()
    k_max = args.max_degree
    run.results["rep"] = rep_label
    run.results["max_degree"] = k_max

    if args.compare:
        if rep_label == "trivial":
            comparison = compare_trivial(g, k_max, cap)
        elif rep_label == "adjoint":
            comparison = compare_adjoint(g, k_max, cap)
        else:
            raise SchemaError("--compare supports only --rep trivial or adjoint")
        run.results["comparison"] = comparison_to_json(comparison)
        run.say("naive vs classical cohomology:")
        run.say("  k  naive  classical  equal")
        for row in comparison.rows:
            marker = " (informational)" if row.k == 0 else ""
            run.say(f"  {row.k}  {row.dim_naive:5d}  {row.dim_classical:9d}  "
                    f"{str(row.equal).lower()}{marker}")
        for note in comparison.notes:
            run.say(f"  note: {note}")
        if not comparison.all_equal:
            run.fail("dimensions differ in some degree >= 1")
        if not comparison.side_checks_ok:
            run.fail("chain-level correspondence check failed")
        return run.finish()

    if args.naive:
        if rep_label == "trivial":
            space = trivial_naive_space(g)
            if space.dim == 0:
                run.results["naive"] = {"zero_complex": True}
                run.say("derived subalgebra is all of g: the naive complex is zero")
                return run.finish()
            rho = trivial_naive_rep(g, space.basis[0])
        elif rep_label == "adjoint":
            rho = adjoint_naive(g)
        else:
            rho = naive_from_rep(rep)
        report = naive_betti(rho, k_max, cap)
        run.results["naive_betti"] = betti_to_json(report)
        _betti_table(run, "naive cohomology", report)
        return run.finish()

    report = betti(rep, k_max, cap)
    run.results["betti"] = betti_to_json(report)
    _betti_table(run, f"cohomology ({rep_label})", report)
    return run.finish()


def cmd_mc(args) -> int:
    run = _Run(args)
    g = algebra_from_json(run.read_document(args.algebra, "algebra"))
    rep = representation_from_json(g, run.read_document(args.representation,
                                                        "representation"))
    rep_report = check_representation(rep)
    if not rep_report.holds:
        run.fail(f"input is not a representation; first witness at "
                 f"{rep_report.witnesses[0].where}")
        return run.finish()
    report = maurer_cartan_check(g, rep)
    run.results["maurer_cartan"] = report.holds
    run.say(f"Maurer-Cartan identity: {'ok' if report.holds else 'FAILED'}")
    if not report.holds:
        for line in _witness_lines(report):
            run.say(line)
        run.fail("Maurer-Cartan identity failed")
    return run.finish()


def cmd_semidirect(args) -> int:
    run = _Run(args)
    g = algebra_from_json(run.read_document(args.algebra, "algebra"))
    rep = representation_from_json(g, run.read_document(args.representation,
                                                        "representation"))
    rep_report = check_representation(rep)
    if not rep_report.holds:
        print(f"FAILED: input is not a representation; first witness at "
              f"{rep_report.witnesses[0].where}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    out = semidirect(g, rep, args.mode)
    print(json.dumps(algebra_to_json(out), indent=1))
    return EXIT_OK


def cmd_omni(args) -> int:
    out = omni_lie(args.dim)
    print(json.dumps(algebra_to_json(out), indent=1))
    return EXIT_OK


def cmd_graph(args) -> int:
    run = _Run(args)
    phi = graph_from_json(run.read_document(args.graph, "graph map"))
    report = graph_check(phi)
    run.results["closes"] = report.holds
    if args.emit_algebra and not args.json:
        # keep stdout pure JSON so the command stays pipeable
        if not report.holds:
            print("FAILED: graph map does not close; first witness at "
                  f"{report.witnesses[0].where}", file=sys.stderr)
            return EXIT_CHECK_FAILED
        print(json.dumps(algebra_to_json(induced_leibniz(phi)), indent=1))
        return EXIT_OK
    run.say(f"graph closure [phi(u), phi(v)] = phi(phi(u) v): "
            f"{'ok' if report.holds else 'FAILED'}")
    if not report.holds:
        for line in _witness_lines(report):
            run.say(line)
        run.fail("graph map does not close")
        return run.finish()
    if args.emit_algebra:
        run.results["induced_algebra"] = algebra_to_json(induced_leibniz(phi))
    return run.finish()


def cmd_fixtures(args) -> int:
    if args.list or not args.dest:
        for name in sorted(fixture_corpus.corpus()):
            print(name)
        return EXIT_OK
    written = fixture_corpus.write_corpus(args.dest)
    for path in written:
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibniz-kit",
        description="Exact calculator for Leibniz algebras: structure checks, "
                    "two-term graded algebras, cohomology, omni algebras and "
                    "naive representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="print a machine-readable run report")

    p = sub.add_parser("check", help="validate an algebra file")
    p.add_argument("algebra", help="algebra JSON file, or - for stdin")
    add_json(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("lie2", help="build and verify the two-term graded algebra")
    p.add_argument("algebra")
    p.add_argument("--emit", action="store_true",
                   help="also print the constructed algebra as JSON")
    add_json(p)
    p.set_defaults(handler=cmd_lie2)

    p = sub.add_parser("cohomology", help="Betti numbers and theorem comparisons")
    p.add_argument("algebra")
    p.add_argument("--rep", default="trivial",
                   help="'trivial', 'adjoint', or a representation JSON file")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--naive", action="store_true",
                   help="compute the naive complex instead of the classical one")
    p.add_argument("--compare", action="store_true",
                   help="compare naive and classical dimensions degree by degree")
    add_json(p)
    p.set_defaults(handler=cmd_cohomology)

    p = sub.add_parser("mc", help="check the Maurer-Cartan identity for the right action")
    p.add_argument("algebra")
    p.add_argument("representation")
    add_json(p)
    p.set_defaults(handler=cmd_mc)

    p = sub.add_parser("semidirect", help="emit a semidirect product algebra")
    p.add_argument("algebra")
    p.add_argument("representation")
    p.add_argument("--mode", choices=("lr", "l0"), default="lr")
    p.set_defaults(handler=cmd_semidirect)

    p = sub.add_parser("omni", help="emit the omni algebra of Q^m")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(handler=cmd_omni)

    p = sub.add_parser("graph", help="check closure of a map V -> gl(V)")
    p.add_argument("graph")
    p.add_argument("--emit-algebra", action="store_true",
                   help="print the induced algebra when the graph closes")
    add_json(p)
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("fixtures", help="list or export the built-in corpus")
    p.add_argument("--list", action="store_true")
    p.add_argument("--dest", help="directory to write the corpus into")
    p.set_defaults(handler=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc} (override with {CAP_ENV_VAR})", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except SchemaError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
