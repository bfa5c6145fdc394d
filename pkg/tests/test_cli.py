import io
import json

import pytest

from vslinks import cli


def run(argv):
    out = io.StringIO()
    code = cli.run(argv, out)
    return code, out.getvalue()


def test_matrix_word():
    assert run(["matrix", "n=2 t1"]) == (0, "[[s, 1-s], [1+s, -s]]\n")
    assert run(["matrix", "", "--n", "3"]) == (0, "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]\n")


def test_matrix_diagram_file(tmp_path):
    from vslinks.diagram import dump_diagram, from_braid_word

    f = tmp_path / "d.json"
    f.write_text(dump_diagram(from_braid_word("n=2 t1 s1 t1")))
    assert run(["matrix", str(f)]) == (0, "[[2s, 1-2s], [1+2s, -2s]]\n")


def test_parse_error_exit_code(capsys):
    code, _ = run(["matrix", "n=2 t1 x3"])
    assert code == 2
    assert "character 7" in capsys.readouterr().err


def test_rho_burau_permrep_linking():
    assert run(["rho", "s2 t1 s1 t2 s2 s1 t1 s2 t2 s2"])[1] == "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]\n"
    assert run(["burau", "n=2 t1"])[1] == "[[0, 1], [1, 0]]\n"
    assert run(["permrep", "f2 t1 f1 t2 f2 f1 t1 f2 t2 f2"])[1] == "(3, 1, 2)\n"
    assert run(["permrep", "n=2 t1"])[0] == 2
    code, out = run(["linking", "n=2 t1"])
    assert code == 0 and out.splitlines()[:2] == ["lk = 0", "lk_v = 1 (mod 2)"]


def test_vfb_make_and_check(tmp_path):
    code, out = run(["vfb", "make", "trivial:2"])
    assert code == 0 and json.loads(out)["order"] == 2
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"order": 2, "star": [[1, 1], [0, 0]], "circ": [[0, 0], [1, 1]]}))
    code, out = run(["vfb", "check", str(f)])
    assert code == 1 and "axiom 3" in out
    assert run(["vfb", "check", "linear:2"])[0] == 0


def test_colorings_and_statesum(tmp_path):
    vfb = tmp_path / "trivial2.json"
    vfb.write_text(run(["vfb", "make", "trivial:2"])[1])
    assert run(["colorings", "n=2 f1 t1", "--vfb", str(vfb)]) == (0, "4\n")
    code, out = run(["colorings", "n=2 f1 t1", "--vfb", "constant:1,0", "--list"])
    assert out == "0\n"
    phi = tmp_path / "phi.json"
    phi.write_text(json.dumps({"coeff": "Z", "table": [[0, 1], [-1, 0]]}))
    assert run(["statesum", "n=2 f1 t1", "--vfb", str(vfb), "--cocycle", str(phi)]) == (
        0, "1*[-1] + 2*[0] + 1*[1]\n")
    phi.write_text(json.dumps({"coeff": "Z", "table": [[1, 0], [0, 0]]}))
    assert run(["statesum", "n=2 f1 t1", "--vfb", str(vfb), "--cocycle", str(phi)])[0] == 2


def test_homology_and_cocycles():
    code, out = run(["homology", "--vfb", "trivial:1", "--max-degree", "2"])
    assert out == "H_0 = 0\nH_1 = Z\nH_2 = Z2\n"
    code, out = run(["homology", "--vfb", "trivial:1", "--complex", "sf", "--max-degree", "2", "--coeff", "Z3"])
    assert out == "H_0 = 0\nH_1 = Z3\nH_2 = Z3\n"
    assert run(["homology", "--vfb", "trivial:1", "--cohomology"])[1].startswith("H^0")
    code, out = run(["cocycles", "--vfb", "trivial:2"])
    assert json.loads(out) == [{"coeff": "Z", "table": [[0, -1], [1, 0]]}]
    assert run(["cocycles", "--vfb", "trivial:2", "--coeff", "Z4"])[0] == 2


@pytest.mark.parametrize("target", ["matrix", "vc", "statesum"])
def test_fuzz_passes_and_is_stable(target):
    a = run(["fuzz", "--target", target, "--trials", "20", "--seed", "3"])
    b = run(["fuzz", "--target", target, "--trials", "20", "--seed", "3"])
    assert a == b and a[0] == 0


def test_fuzz_requires_seed():
    with pytest.raises(SystemExit):
        cli.run(["fuzz", "--target", "matrix"])


def test_fuzz_reports_minimal_trace(monkeypatch):
    # an "invariant" that counts letters breaks on the first length-changing step
    monkeypatch.setattr(cli, "_fuzz_target", lambda target, args: ((lambda w: len(w)), "t"))
    code, out = run(["fuzz", "--target", "matrix", "--trials", "50", "--seed", "1"])
    lines = out.splitlines()
    assert code == 1 and lines[0].startswith("FAIL")
    steps = [line for line in lines if line.startswith("  ")]
    assert len(steps) == 1
