import json
import re
import shutil
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from tautilt.algebra import load_algebra
from tautilt.cli import main

FIX = Path(str(resources.files("tautilt") / "fixtures"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rigid_ex53(capsys):
    code, out, _ = run(capsys, "rigid", FIX / "ex53.alg", "--module", "I3")
    assert code == 0
    assert out.startswith("not τ-rigid; witness map provided; common summand P(2)")


def test_rigid_json(capsys):
    code, out, _ = run(capsys, "rigid", FIX / "ex53.alg", "-m", "tau I3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["tau_rigid"] is True and data["witness"] is None


def test_tau_tilting_ex51(capsys):
    code, out, _ = run(capsys, "tau-tilting", FIX / "ex51.alg")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "7 τ-tilting modules" and len(lines) == 8


def test_bad_file_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("vertices two\n")
    code, _, err = run(capsys, "info", bad)
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "info", tmp_path / "missing.alg")
    assert code == 2 and "cannot read" in err


def test_invalid_selector_exits_2(capsys):
    code, _, err = run(capsys, "tau", FIX / "ex53.alg", "--module", "Q7")
    assert code == 2 and "selector" in err
    code, _, err = run(capsys, "tau", FIX / "ex53.alg", "--module", "S9")
    assert code == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["rigid"])
    assert exc.value.code == 2


def test_dim_vector_selector(capsys):
    code, out, _ = run(capsys, "tau", FIX / "ex53.alg", "--module", "0,1,1,1@2", "--power", "2")
    assert code == 0 and "= S(2)" in out
    code, out, _ = run(capsys, "tau", FIX / "ex53.alg", "--module", "0111@1")
    assert code == 0 and out.startswith("tau P(4) = 0")


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("17/17 claims pass")


def test_verify_paper_negative_control(capsys, tmp_path):
    for f in FIX.iterdir():
        shutil.copy(f, tmp_path / f.name)
    alg = tmp_path / "ex53.alg"
    alg.write_text(alg.read_text().replace("arrow a3 4 2", "arrow a3 2 4"))
    code, out, _ = run(capsys, "verify-paper", "--fixtures", tmp_path)
    assert code == 1
    assert re.search(r"FAIL\s+ex53\s+presentation-I3", out)


def test_dot_round_trip(capsys):
    a = load_algebra(FIX / "ex53.alg")
    code, out, _ = run(capsys, "info", FIX / "ex53.alg", "--format", "dot")
    assert code == 0
    assert len(re.findall(r"^\s+v\d+ \[", out, re.M)) == a.n
    assert len(re.findall(r"->", out)) == len(a.arrows)
    code, out, _ = run(capsys, "separated", FIX / "ex53.alg", "--format", "dot")
    assert len(re.findall(r"^\s+v\d+ \[", out, re.M)) == 2 * a.n


def test_indecomposables_dot_has_tau_edges(capsys):
    code, out, _ = run(capsys, "indecomposables", FIX / "ex51.alg", "--format", "dot")
    assert code == 0 and out.count("[label=\"tau\"") == 4


def test_indecomposables_text(capsys):
    code, out, _ = run(capsys, "indecomposables", FIX / "ex53.alg")
    assert out.splitlines()[0] == "14 indecomposables"


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", FIX / "ex52.alg", "--vertex", "1")
    assert code == 0 and out.startswith("case 1")
    code, _, err = run(capsys, "construct", FIX / "ex52.alg", "--vertex", "4")
    assert code == 2 and "projective" in err


def test_corpus_reproducible(capsys, tmp_path):
    _, first, _ = run(capsys, "corpus", "--seed", "11", "--count", "20")
    _, second, _ = run(capsys, "corpus", "--seed", "11", "--count", "20")
    assert first == second
    _, other, _ = run(capsys, "corpus", "--seed", "12", "--count", "20")
    assert other != first


def test_corpus_files_parse(capsys, tmp_path):
    code, _, _ = run(capsys, "corpus", "--seed", "3", "--count", "200", "--out", tmp_path)
    files = sorted(tmp_path.glob("*.alg"))
    assert code == 0 and len(files) == 200
    for f in files:
        a = load_algebra(f)
        assert a.quiver.is_connected() and a.n <= 5 and len(a.arrows) <= 7


def test_corpus_trivial(capsys):
    code, out, _ = run(capsys, "corpus", "--seed", "1", "--max-vertices", "1", "--max-arrows", "0", "--count", "1")
    assert "vertices 1" in out and "arrow" not in out


def test_hunt_cli(capsys, tmp_path):
    kron = tmp_path / "kron.alg"
    kron.write_text("vertices 1\narrow x 1 1\narrow y 1 1\nrelations rad2\n")
    code, out, _ = run(capsys, "hunt", kron, "--dim-bound", "8")
    assert code == 0 and "non-rigid indecomposable found" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", FIX / "ex52.alg", "--format", "json")
    prof = json.loads(out)["profile"]
    assert prof["gldim"] == 2 and prof["rep_finite"] is True


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tautilt", "verify-paper"], capture_output=True, text=True)
    assert res.returncode == 0
