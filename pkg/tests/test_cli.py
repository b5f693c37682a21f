from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

from leibniz_kit.cli import main

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"


def run_cli(*args, stdin: bytes = b"", env_extra=None):
    import os
    env = dict(os.environ)
    env.update(env_extra or {})
    return subprocess.run([sys.executable, "-m", "leibniz_kit", *args],
                          input=stdin, capture_output=True, env=env)


def test_check_passes_on_fixture(capsys):
    assert main(["check", str(FIXTURES / "abelian2.json")]) == 0
    out = capsys.readouterr().out
    assert "Leibniz identity: ok" in out
    assert "left center: dim 2" in out
    assert "Lie algebra: yes" in out


def test_check_l2_summary(capsys):
    assert main(["check", str(FIXTURES / "L2.json")]) == 0
    out = capsys.readouterr().out
    assert "left center: dim 1" in out
    assert "derived subalgebra: dim 1" in out
    assert "Lie algebra: no" in out


def test_check_fails_on_negative(capsys):
    assert main(["check", str(FIXTURES / "nonleibniz.json")]) == 1
    out = capsys.readouterr().out
    assert "witness" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["check", str(bad)]) == 2
    missing = tmp_path / "missing.json"
    assert main(["check", str(missing)]) == 2


def test_schema_error_exit_code(tmp_path):
    doc = tmp_path / "wrong.json"
    doc.write_text(json.dumps({"schema": "leibniz-kit/1", "dim": 2, "c": []}),
                   encoding="utf-8")
    assert main(["check", str(doc)]) == 2


def test_resource_cap_exit_code():
    result = run_cli("cohomology", str(FIXTURES / "omni2.json"),
                     "--rep", "adjoint", "--max-degree", "3",
                     env_extra={"LEIBNIZ_KIT_CAP": "100"})
    assert result.returncode == 3
    assert b"resource cap" in result.stderr
    assert b"7776" in result.stderr or b"dimension" in result.stderr


def test_lie2_command(capsys):
    assert main(["lie2", str(FIXTURES / "heis3.json")]) == 0
    out = capsys.readouterr().out
    assert "axiom (e): ok" in out


def test_lie2_rejects_non_leibniz(capsys):
    assert main(["lie2", str(FIXTURES / "nonleibniz.json")]) == 1


def test_cohomology_table(capsys):
    assert main(["cohomology", str(FIXTURES / "abelian2.json"),
                 "--rep", "trivial", "--max-degree", "3"]) == 0
    out = capsys.readouterr().out
    rows = [line.split() for line in out.splitlines() if line.strip() and
            line.strip()[0].isdigit()]
    assert [r[-1] for r in rows] == ["1", "2", "4", "8"]


def test_cohomology_compare(capsys):
    assert main(["cohomology", str(FIXTURES / "L2.json"),
                 "--rep", "adjoint", "--compare", "--max-degree", "2"]) == 0
    out = capsys.readouterr().out
    assert "informational" in out
    assert "false" not in out


def test_cohomology_compare_trivial_sl2(capsys):
    assert main(["cohomology", str(FIXTURES / "sl2.json"),
                 "--rep", "trivial", "--compare", "--max-degree", "3"]) == 0


def test_cohomology_naive(capsys):
    assert main(["cohomology", str(FIXTURES / "L2.json"),
                 "--rep", "adjoint", "--naive", "--max-degree", "2"]) == 0
    out = capsys.readouterr().out
    assert "naive cohomology" in out


def test_cohomology_rep_file(capsys):
    assert main(["cohomology", str(FIXTURES / "heis3.json"),
                 "--rep", str(FIXTURES / "rep_adjoint_heis3.json"),
                 "--max-degree", "2"]) == 0


def test_cohomology_rejects_bad_rep(capsys):
    assert main(["cohomology", str(FIXTURES / "L2.json"),
                 "--rep", str(FIXTURES / "rep_bad_L2.json"),
                 "--max-degree", "1"]) == 1


def test_mc_command(capsys):
    assert main(["mc", str(FIXTURES / "L2.json"),
                 str(FIXTURES / "rep_adjoint_L2.json")]) == 0
    out = capsys.readouterr().out
    assert "Maurer-Cartan identity: ok" in out


def test_graph_command(capsys):
    assert main(["graph", str(FIXTURES / "graph_L2.json")]) == 0
    assert main(["graph", str(FIXTURES / "graph_bad.json")]) == 1


def test_json_report_structure(capsys):
    assert main(["check", str(FIXTURES / "L2.json"), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == "leibniz-kit/1"
    assert report["command"] == "check"
    assert report["status"] == "pass"
    assert report["results"]["left_center_dim"] == 1
    assert len(report["inputs"]) == 1
    assert len(report["inputs"][0]["sha256"]) == 64


def test_pipeline_omni_check():
    emitted = run_cli("omni", "--dim", "2")
    assert emitted.returncode == 0
    checked = run_cli("check", "-", stdin=emitted.stdout)
    assert checked.returncode == 0
    assert b"Leibniz identity: ok" in checked.stdout
    assert b"left center: dim 2" in checked.stdout


def test_pipeline_semidirect_check():
    emitted = run_cli("semidirect", str(FIXTURES / "heis3.json"),
                      str(FIXTURES / "rep_adjoint_heis3.json"), "--mode", "l0")
    assert emitted.returncode == 0
    checked = run_cli("check", "-", stdin=emitted.stdout)
    assert checked.returncode == 0
    assert b"Leibniz identity: ok" in checked.stdout


def test_pipeline_graph_emit():
    emitted = run_cli("graph", str(FIXTURES / "graph_heis3.json"), "--emit-algebra")
    assert emitted.returncode == 0
    checked = run_cli("check", "-", stdin=emitted.stdout)
    assert checked.returncode == 0
    bad = run_cli("graph", str(FIXTURES / "graph_bad.json"), "--emit-algebra")
    assert bad.returncode == 1
    assert bad.stdout == b""
    assert b"does not close" in bad.stderr


def test_emitted_algebras_reparse(tmp_path, capsys):
    # everything the CLI emits must re-parse and pass the checker
    for args in (["omni", "--dim", "1"], ["omni", "--dim", "2"],
                 ["semidirect", str(FIXTURES / "L2.json"),
                  str(FIXTURES / "rep_adjoint_L2.json"), "--mode", "lr"]):
        result = run_cli(*args)
        assert result.returncode == 0
        doc = tmp_path / "emitted.json"
        doc.write_bytes(result.stdout)
        assert main(["check", str(doc)]) == 0
        capsys.readouterr()


def test_semidirect_rejects_bad_rep():
    result = run_cli("semidirect", str(FIXTURES / "L2.json"),
                     str(FIXTURES / "rep_bad_L2.json"), "--mode", "lr")
    assert result.returncode == 1


def test_fixtures_list(capsys):
    assert main(["fixtures", "--list"]) == 0
    out = capsys.readouterr().out.split()
    assert "L2.json" in out and "omni2.json" in out


def test_fixtures_export(tmp_path, capsys):
    assert main(["fixtures", "--dest", str(tmp_path / "out")]) == 0
    capsys.readouterr()
    assert (tmp_path / "out" / "heis3.json").exists()


def test_compare_with_file_rep_is_input_error(capsys):
    assert main(["cohomology", str(FIXTURES / "L2.json"),
                 "--rep", str(FIXTURES / "rep_adjoint_L2.json"),
                 "--compare"]) == 2
