import json
import subprocess
import sys

import pytest

from boxkite import render
from boxkite.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_product(capsys):
    assert run(capsys, "product", "7", "12") == (0, "+11\n")
    assert run(capsys, "product", "-7", "12") == (0, "-11\n")
    assert run(capsys, "product", "10", "13")[1] == "-7\n"


def test_census_tail(capsys):
    code, out = run(capsys, "census", "--n", "5")
    assert code == 0 and out.rstrip().endswith("total box-kites: 77")


def test_default_n_is_five(capsys):
    code, out = run(capsys, "tone-row", "--s", "3")
    assert code == 0 and out.startswith("N=5 S=3") and len(out.splitlines()) == 15


def test_table_csv(capsys, tmp_path):
    csv, ppm = tmp_path / "out.csv", tmp_path / "out.ppm"
    code, out = run(capsys, "table", "--n", "4", "--s", "1", "--csv", str(csv), "--ppm", str(ppm), "--cell-px", "3")
    assert code == 0 and "24 filled cells" in out
    assert render.parse_delimited(csv.read_text()).filled == 24
    assert render.read_pixmap(ppm.read_bytes()).shape == (18, 18, 3)


def test_table_palette_and_png(capsys, tmp_path):
    pal = tmp_path / "p.txt"
    pal.write_text("background=10,10,10\n")
    png = tmp_path / "t.png"
    code, _ = run(capsys, "table", "--n", "4", "--s", "2", "--png", str(png), "--palette", str(pal), "--quiet")
    assert code == 0 and png.read_bytes()[:4] == b"\x89PNG"


def test_boxkites_report(capsys):
    code, out = run(capsys, "boxkites", "--n", "4", "--s", "1")
    assert code == 0
    assert "A=(3,10) B=(6,15) C=(5,12) D=(4,13) E=(7,14) F=(2,11)" in out
    assert "zigzag   ABC" in out and "edges AB,BC,CA = ---" in out
    assert out.rstrip().endswith("N=4 S=1: 1 box-kites")


def test_twist(capsys):
    code, out = run(capsys, "twist", "--n", "4", "--s", "3", "--strut", "be")
    assert code == 0
    assert "reversed edge DF" in out
    assert out.count("S'=6") == 4 and out.count("S'=5") == 4 and "NONZERO" not in out


def test_lanyards(capsys):
    code, out = run(capsys, "lanyards", "--n", "4", "--s", "1", "--kind", "chain", "--count-only")
    assert code == 0 and out.rstrip().endswith("total: 32")
    code, out = run(capsys, "lanyards", "--n", "4", "--s", "1", "--kind", "sail")
    assert code == 0 and " -> " in out


def test_verify_sedenions(capsys):
    code, out = run(capsys, "verify", "--n", "4")
    assert code == 0
    assert "FAIL" not in out and out.rstrip().endswith("0 failed")


def test_verify_single_strut(capsys):
    code, out = run(capsys, "verify", "--n", "5", "--s", "9")
    assert code == 0 and "box-kites N=5 S=9  (3 box-kites)" in out


@pytest.mark.parametrize("argv", [
    ["tone-row", "--n", "4", "--s", "8"],
    ["table", "--n", "3", "--s", "1"],
    ["boxkites", "--n", "4"],
    ["twist", "--n", "4", "--s", "1", "--strut", "ab"],
    ["lanyards", "--n", "4", "--s", "1", "--kind", "helix"],
    ["product", "x", "1"],
    ["census", "--n", "9"],
    ["similarity", "--coarse-n", "4", "--coarse-s", "7", "--fine-n", "5", "--fine-s", "4"],
    ["table", "--n", "4", "--s", "1", "--cell-px", "0"],
    [],
])
def test_argument_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_similarity_json(capsys, tmp_path):
    out_json, out_png = tmp_path / "r.json", tmp_path / "r.png"
    code, out = run(capsys, "similarity", "--json", str(out_json), "--png", str(out_png))
    assert code == 0 and "overall 784/784 = 1.000" in out
    data = json.loads(out_json.read_text())
    assert data["match_ratio"] == 1.0 and len(data["residue"]) == 112
    assert out_png.exists()


def test_report_directory(capsys, tmp_path):
    code, out = run(capsys, "report", "--n", "4", "--out", str(tmp_path / "rep"))
    assert code == 0
    names = sorted(p.name for p in (tmp_path / "rep").iterdir())
    assert "census_N004.csv" in names and "N004S007.ppm" in names
    assert "similarity_N004S007_N005S015.json" in names
    assert "similarity_N005S015_N006S015.png" in names


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "boxkite", "table", "--n", "5", "--s", "13"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and b"72 filled cells" in first
