import json

import pytest

from hfw.cli import main

from helpers import DATA

F7 = str(DATA / "figure7.hd")
F7R = str(DATA / "figure7.rules")
S = str(DATA / "s1xs2.hd")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_validate(capsys):
    code, out = run(capsys, "validate", F7, "--json")
    assert code == 0
    assert json.loads(out) == {"diagram": "figure7", "violations": [], "generator_count": 6}


def test_validate_bad(tmp_path, capsys):
    bad = tmp_path / "bad.hd"
    bad.write_text((DATA / "sphere.hd").read_text().replace("basepoints : D0", "basepoints :"))
    assert run(capsys, "validate", bad)[0] == 1
    missing = tmp_path / "none.hd"
    assert run(capsys, "validate", missing)[0] == 2


def test_gens(capsys):
    assert run(capsys, "gens", F7, "--count-only") == (0, "6\n")
    code, out = run(capsys, "gens", F7, "--json")
    assert len(json.loads(out)["generators"]) == 6


def test_periodic_and_admissible(capsys):
    code, out = run(capsys, "periodic", S, "--json")
    assert json.loads(out)["rank"] == 1
    assert run(capsys, "admissible", S)[0] == 0


def test_spinc(capsys):
    code, out = run(capsys, "spinc", F7, "--base", "x,u", "--path", DATA / "figure7.path", "--json")
    assert code == 0 and json.loads(out)["classes"] == {"()": ["(x u)", "(y u)", "(t v)", "(t w)", "(s v)", "(s w)"]}


def test_complex(capsys, tmp_path):
    code, out = run(capsys, "complex", S, "--spinc", "0", "--basepoints", "annulus", "--json")
    assert code == 0 and json.loads(out)["matrix"]["entries"] == [[0, 1, [[0], [1]]]]
    assert run(capsys, "complex", F7)[0] == 2
    target = tmp_path / "out.json"
    assert run(capsys, "complex", F7, "--rules", F7R, "--json", target)[0] == 0
    assert json.loads(target.read_text())["rank"] == 0


def test_homology(capsys):
    code, out = run(capsys, "homology", F7, "--rules", F7R, "--json")
    assert json.loads(out)["homology"]["()"]["f2_dimension"] == 2
    code, out = run(capsys, "homology", S)
    assert "F2[t,t^-1]/(1 + t)" in out


def test_reduce(capsys):
    code, out = run(capsys, "reduce", F7, "--z1", "D0,D1,D2,D3", "--z2", "D0,D1,D2", "--spinc", "", "--rules", F7R,
                    "--json")
    assert code == 0 and json.loads(out)["agree"]


@pytest.mark.parametrize("which", ["star", "s6", "lemma61"])
def test_replicate(capsys, which):
    code, out = run(capsys, "replicate", which, "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_replicate_genus_three_family(capsys):
    assert run(capsys, "replicate", "lemma41", "--n", "2")[0] == 0
    assert run(capsys, "replicate", "lemma41", "--n", "7")[0] == 2
    assert run(capsys, "replicate", "lemma41")[0] == 2


def test_replicate_missing_fragment_data(capsys, tmp_path):
    assert run(capsys, "replicate", "lemma61", "--data", tmp_path / "nope.json")[0] == 2
