import json

import pytest

from bvtk import core, render
from bvtk import families as F
from bvtk.cli import main


@pytest.fixture()
def gj_file(tmp_path):
    path = tmp_path / "gj.json"
    assert main(["family", "gj", "--levels", "5", "-o", str(path)]) == 0
    return str(path)


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_family_round_trip(gj_file):
    assert core.load(gj_file) == F.gj(5)


def test_family_params(tmp_path, capsys):
    code, out = run(capsys, ["family", "odometer", "--radices", "2,5"])
    assert code == 0 and core.loads(out).levels[2][0].in_edges == (0,) * 5
    code, out = run(capsys, ["family", "kite-det", "--profile", "2,2,1", "--levels", "5"])
    assert core.loads(out).widths == [1, 2, 2, 1, 1, 1]


def test_validate(gj_file, capsys):
    code, out = run(capsys, ["validate", gj_file])
    assert code == 0 and json.loads(out)["width_profile"] == [1, 2, 4, 6, 8, 10]


def test_orbit(gj_file, capsys):
    code, out = run(capsys, ["orbit", "--spec", "prefix=1,1;suffix=const:1", "--k", "2",
                             "--window=0..3", "--dots", "3", gj_file])
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert [r[0] for r in rows] == ["0", "1", "2", "3"]
    assert [r[2] for r in rows] == ["0", "1", "2", "3"]
    assert rows[0][1] == "v1_1.v2_1"


def test_blocks_and_coding(gj_file, capsys):
    _, out = run(capsys, ["blocks", "--vertex", "v2_3", "--k", "1", gj_file])
    assert out.split() == ["v1_1", "v1_2"]
    _, out = run(capsys, ["coding", "--vertex", "v3_3", "--j", "2", gj_file])
    assert out.split() == ["v2_1", "v2_3", "v2_2", "v2_4"]


def test_pair(gj_file, capsys):
    x, y = F.mc_pair(F.gj(5), 2)
    d = F.gj(5)
    code, out = run(capsys, ["pair", "--x", x.text(d), "--y", y.text(d), "--k", "2", gj_file])
    data = json.loads(out)
    assert data["same_k_coding"] and data["k_equivalent"]
    assert data["depth"]["k"] == 2 and data["long_cuts"]["gaps"] == []


def test_morphism(gj_file, capsys):
    assert run(capsys, ["morphism", "ptm", "--length", "8"])[1].strip() == "abbabaab"
    assert run(capsys, ["morphism", "tau", "--j", "4", "--apply", "ED"])[1].strip() == "EEDEEEEDEEEE"
    out = json.loads(run(capsys, ["morphism", "desub", "--j", "4", "EEDEEEEDEEEE"])[1])
    assert out["result"] == "unique" and out["upper"] == "ED"
    out = json.loads(run(capsys, ["morphism", "desub", "--j", "4", "EEDEEE"])[1])
    assert out == {"result": "ambiguous", "count": 2}
    t = run(capsys, ["morphism", "tilde", "--n", "5", gj_file])[1].strip()
    assert t.replace("0", "") == "abbabaab"


def test_classify_sne_telcheck(gj_file, capsys):
    code, out = run(capsys, ["classify", "--max-depth", "2", "--prefix-len", "2", gj_file])
    assert code == 0 and "W0_evidence" in json.loads(out)["flags"]
    code, out = run(capsys, ["sne", "--max-k", "2", gj_file])
    assert json.loads(out)["pairs"]["1"] > 0
    d = F.gj(5)
    x, y = F.mc_pair(d, 2)
    code, out = run(capsys, ["telcheck", "--levels", "0,1,3,5", "--pair", x.text(d), y.text(d),
                             "--k", "2", "--j", "3", gj_file])
    assert code == 0 and json.loads(out)["ok"]


def test_render(gj_file, capsys):
    _, out = run(capsys, ["render", "--dot", gj_file])
    assert out.startswith("digraph") and '[label="2"]' in out
    _, out = run(capsys, ["render", "--array", "--spec", "prefix=1,1;suffix=const:1",
                          "--rows", "2", "--window=0..7", gj_file])
    lines = out.splitlines()
    assert lines[0].endswith("|" * 8)
    assert lines[2].split()[-1].startswith("|")
    assert lines[-1].strip() == "^"


def test_errors_are_reported(gj_file, capsys):
    code = main(["blocks", "--vertex", "zzz", "--k", "1", gj_file])
    assert code == 2 and "error" in capsys.readouterr().err


def test_symbol_array_marks_block_starts():
    d = F.odometer("single", [2, 2, 2])
    x = core.PathSpec(core.extremal_path_into(d, (3, 0), "min"))
    text = render.symbol_array(d, x, 3, (0, 7))
    rows = text.splitlines()
    # two parallel edges at every level, including the root's
    assert rows[0][4:] == "|" * 8
    assert rows[1][4:] == "| | | | "
    assert rows[2][4:] == "|   |   "
    assert rows[3][4:] == "|       "
    assert rows[4][4:] == "^       "
