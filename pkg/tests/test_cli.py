import json
import subprocess
import sys

import pytest

from divtower.cli import EXIT_CONFIG, EXIT_FAIL, EXIT_OK, claim_level, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tree_levels(capsys):
    code, _, err = run(capsys, "tree", "-n", "0")
    assert code == EXIT_CONFIG and "at least 1" in err
    code, out, _ = run(capsys, "tree", "-n", "1")
    assert code == EXIT_OK and len(out.strip().splitlines()) == 2 + 1 + 3
    code, out, _ = run(capsys, "tree", "-n", "2")
    lines = out.strip().splitlines()
    assert len(lines) == 2 + 1 + 3 + 6
    assert lines[3].split()[:2] == ["1:0", "⟨(1,0)⟩"] and lines[3].split()[-1] == "1:1"


def test_tree_report(tmp_path, capsys):
    path = tmp_path / "tree.json"
    run(capsys, "tree", "-n", "1", "--out", str(path))
    report = json.loads(path.read_text())
    assert [v["vertex"] for v in report["vertices"]] == ["0:", "1:0", "1:1", "1:2"]


def test_decorate(capsys, tmp_path):
    path = tmp_path / "dec.json"
    code, out, _ = run(capsys, "decorate", "--alphas", "0,1,3", "-n", "2", "--out", str(path))
    assert code == EXIT_OK
    assert "certificate: holds on 3 quadratics" in out
    report = json.loads(path.read_text())
    assert [e["over_K1"] for e in report["degrees"]] == [1, 4]


def test_decorate_paper_literal_reports_defect(capsys):
    code, out, _ = run(capsys, "decorate", "--variant", "paper-literal", "-n", "2")
    assert code == EXIT_FAIL and "repeated root below 1:1" in out


def test_config_errors(capsys):
    code, _, err = run(capsys, "decorate", "--alphas", "0,0,1")
    assert code == EXIT_CONFIG and "Weierstrass roots must be distinct" in err
    code, _, err = run(capsys, "verify", "--claims", "nope")
    assert code == EXIT_CONFIG and "unknown claim" in err
    code, _, err = run(capsys, "tree", "--alphas", "1,2")
    assert code == EXIT_CONFIG and "three rationals" in err
    code, _, err = run(capsys, "tree", "--alphas", "1,x,2")
    assert code == EXIT_CONFIG


def test_bad_choice_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--convention", "other"])
    assert exc.value.code == 2


def test_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == EXIT_OK and len(out.split()) == 19


def test_claim_levels():
    assert claim_level("k2prime-pairwise", 5) == 2
    assert claim_level("division-index", 2) == 3
    assert claim_level("scalar-stabilizer", 6) == 3
    assert claim_level("prime-in-division", 3) == 3


def test_verify_report_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, out, _ = run(capsys, "verify", "--claims", "k2prime-pairwise,relative-kernel,chain-is-decoration",
                           "--alphas", "1,3,8", "--out", str(p))
        assert code == EXIT_OK and "3 passed, 0 failed" in out
    first, second = (json.loads(p.read_text()) for p in paths)
    first["config"].pop("output"), second["config"].pop("output")
    assert first == second
    report = first
    assert [c["claim"] for c in report["claims"]] == ["chain-is-decoration", "k2prime-pairwise", "relative-kernel"]
    assert all("runtime_s" not in c for c in report["claims"])


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "k2prime-pairwise", "--zeta-level", "1",
                       "--convention", "corrected")
    assert code == EXIT_FAIL and "FAILED" in out


def test_chain_and_torsion(capsys):
    code, out, _ = run(capsys, "chain", "-n", "2", "--labeled")
    assert code == EXIT_OK and "kernel checks: 9/9 hold" in out
    code, out, _ = run(capsys, "torsion", "-n", "2")
    assert code == EXIT_OK and out.strip().splitlines()[-1].split()[-2:] == ["8", "8"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "divtower", "tree", "-n", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "1:2" in proc.stdout
