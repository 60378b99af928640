import json

import pytest

from cutcomplex.cli import main
from cutcomplex.complex import loads_complex
from cutcomplex.cutgen import total_cut_complex
from cutcomplex.graph import cycle, dumps_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_to_stdout_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--graph", "cycle:6", "--k", "2")
    assert code == 0
    assert loads_complex(out) == total_cut_complex(cycle(6), 2)
    target = tmp_path / "c.txt"
    code, _, err = run(capsys, "build", "--graph", "cycle:6", "--k", "2", "--variant", "cut", "--out", str(target))
    assert code == 0 and "wrote 9 facet(s)" in err
    assert loads_complex(target.read_text()) == total_cut_complex(cycle(6), 2)


def test_graph_file_input(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(dumps_graph(cycle(7)))
    code, out, _ = run(capsys, "homology", "--graph", str(path), "--k", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["betti"]["1"] == 1 and data["n"] == 7


def test_homology_with_smith_form(capsys):
    code, out, _ = run(capsys, "homology", "--graph", "prism:3", "--k", "2", "--snf")
    assert code == 0
    assert "b2=2" in out and "agrees" in out


def test_homology_void(capsys):
    code, out, _ = run(capsys, "homology", "--graph", "kn:4", "--k", "2")
    assert code == 0 and out.strip() == "void complex"


def test_morse_preset(capsys):
    code, out, _ = run(capsys, "morse", "--graph", "grid:3,3", "--k", "2", "--schedule", "preset",
                       "--verify-acyclic", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["critical_per_dim"] == {"5": 4}
    assert data["acyclic_verified"] is True
    assert data["certificate"] == "wedge of 4 sphere(s) S^5"


def test_morse_explicit_schedule(capsys):
    code, out, _ = run(capsys, "morse", "--graph", "cycle:8", "--k", "2", "--schedule", "0,1,2,3,4,5")
    assert code == 0 and "S^4" in out


@pytest.mark.parametrize("prop,needle", [
    ("vd", "vertex decomposable: False"),
    ("shelling", "not shellable"),
    ("obstruction", "dimension(s) 0"),
    ("contractible", "no contractibility certificate"),
])
def test_check(capsys, prop, needle):
    code, out, _ = run(capsys, "check", "--graph", "kmn:2,2", "--k", "2", "--property", prop)
    assert code == 0 and needle in out


def test_check_shelling_cap(capsys):
    code, _, err = run(capsys, "check", "--graph", "cycle:9", "--k", "2", "--property", "shelling",
                       "--facet-cap", "4")
    assert code == 3 and "cap" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "prism")
    assert code == 0 and out.startswith("prism: 5 pass, 0 fail")
    code, out, _ = run(capsys, "verify", "--suite", "cycles", "--ranges", "n=6..7", "--json")
    assert code == 0 and json.loads(out)[0]["fail"] == 0
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_all_capped(capsys, monkeypatch):
    monkeypatch.setenv("CUTCOMPLEX_FACE_CAP", "10")
    code, out, _ = run(capsys, "verify", "--suite", "prism", "--ranges", "n=5")
    assert code == 3 and "CAP" in out


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--conjecture", "squared_cycle", "--ranges", "k=2;n=6..9")
    assert code == 0 and "MISMATCH" not in out and "other branch" in out


def test_table(capsys, tmp_path):
    code, out, _ = run(capsys, "table", "--family", "G2n", "--kmax", "3", "--nmax", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["k,2,3,4", "1,β_2=1,β_4=1,β_6=1", "2,β_0=1,β_2=2,β_4=3", "3,void,β_0=1,β_2=3"]
    target = tmp_path / "t.md"
    code, _, _ = run(capsys, "table", "--family", "G3n", "--kmax", "2", "--nmax", "3", "--format", "md",
                     "--out", str(target))
    assert code == 0 and "β_7=1" in target.read_text()


@pytest.mark.parametrize("argv", [
    ["homology", "--graph", "nonsense:3", "--k", "2"],
    ["homology", "--graph", "cycle:5", "--k", "0"],
    ["build", "--graph", "cycle:5", "--k", "1", "--variant", "cut"],
    ["morse", "--graph", "cycle:5", "--k", "2", "--schedule", "a,b"],
    ["morse", "--graph", "cycle:5", "--k", "2", "--schedule", "0,0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_bad_graph_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n")
    code, _, err = run(capsys, "homology", "--graph", str(path), "--k", "2")
    assert code == 2
