import json
import subprocess

import pytest

from gpoly.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_examples(capsys, graphs_dir):
    code, out, _ = run(capsys, "compute", "ubar", graphs_dir / "triangle.el")
    assert code == 0
    assert out == "z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]\n"
    code, out, _ = run(capsys, "compute", "ext-polychromate", graphs_dir / "path2.el")
    assert out == "x2[1,0]^3 + x2[1,0]*x2[2,0] + 2*x2[1,0]*x2[2,1] + x2[3,2]\n"
    code, out, _ = run(capsys, "compute", "v-function", graphs_dir / "loop1.el")
    assert (code, out) == (0, "yk[1]\n")


def test_compute_json_and_truncate(capsys, graphs_dir):
    code, out, _ = run(capsys, "compute", "tutte", graphs_dir / "triangle.el", "--format", "json")
    assert code == 0
    assert json.loads(out)[0] == {"coeff": "1", "vars": [["X", [], 2]]}
    code, out, _ = run(capsys, "compute", "ybar", graphs_dir / "triangle.el", "--format", "json")
    assert json.loads(out)["basis"] == "p"
    code, out, _ = run(capsys, "compute", "chromatic-symmetric", graphs_dir / "path2.el", "--truncate", "3")
    assert "6*x[1]*x[2]*x[3]" in out and "x[4]" not in out


def test_compare(capsys, graphs_dir):
    assert run(capsys, "compare", "u", graphs_dir / "G1.el", graphs_dir / "G2.el")[:2] == (0, "EQUAL\n")
    code, out, _ = run(capsys, "compare", "ubar", graphs_dir / "G1.el", graphs_dir / "G2.el")
    assert code == 1
    assert out == "DIFFER z[1,0]*z[2,1]: 1 vs 2\n"


def test_exit_codes(capsys, tmp_path, graphs_dir):
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n1 9\n")
    code, _, err = run(capsys, "compute", "u", bad)
    assert code == 2 and "line 2" in err
    assert run(capsys, "compute", "u", tmp_path / "missing.el")[0] == 2

    big = tmp_path / "big.el"
    big.write_text("2 27\n" + "1 2\n" * 27)
    code, _, err = run(capsys, "compute", "ubar", big)
    assert code == 3 and "--force" in err

    code, _, err = run(capsys, "compute", "stability", graphs_dir / "G1.el")
    assert code == 4


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "recurrence", "--max-edges", "3", "--max-vertices", "3")
    assert code == 0 and out.startswith("PASS recurrence")
    code, out, _ = run(capsys, "verify", "equivalence-chain", "--max-vertices", "4")
    assert code == 0 and out.startswith("PASS equivalence-chain")


def test_verify_failure_is_reported(capsys, monkeypatch):
    from gpoly import verify
    from gpoly.multigraph import Multigraph

    def broken(**kwargs):
        run_ = verify._Runner("recurrence")
        run_.check("deliberate mismatch", 1, 2, Multigraph(2, ((0, 1),)))
        return run_.result

    monkeypatch.setitem(verify.SUITES, "recurrence", broken)
    code, out, _ = run(capsys, "verify", "recurrence")
    assert code == 1
    assert "FAIL recurrence" in out and "2 1\n1 2" in out and "expected: 1" in out


def test_search_files(capsys, tmp_path, graphs_dir):
    code, out, err = run(capsys, "search", "--graphs", graphs_dir / "G1.el", graphs_dir / "G2.el")
    assert code == 0 and "counterexamples: 1" in out and "elapsed" in err and "elapsed" not in out
    code, out, _ = run(capsys, "search", "--graphs", graphs_dir / "G1.el", graphs_dir / "G2.el", "--loopless")
    assert "counterexamples: 0" in out and "skipped: 2" in out

    g6 = tmp_path / "graphs.g6"
    g6.write_text("Bw\n!!\nBg\n")
    assert run(capsys, "search", "--graphs", g6)[0] == 2
    report = tmp_path / "report.json"
    code, out, err = run(capsys, "search", "--graphs", g6, "--lenient", "--report", report)
    assert code == 0 and "graphs_processed: 2" in out and ":2:" in err
    assert json.loads(report.read_text())["stats"]["graphs_processed"] == 2


def test_convert(capsys, tmp_path, graphs_dir):
    code, ubar_text, _ = run(capsys, "compute", "ubar", graphs_dir / "triangle.el")
    src = tmp_path / "ubar.txt"
    src.write_text(ubar_text)
    code, out, _ = run(capsys, "convert", "--from", "ubar", "--to", "ybar-m", src)
    assert out == "mbar[(3,3)] + 3*mbar[(2,1),(1,0)] + mbar[(1,0),(1,0),(1,0)]\n"
    code, out, _ = run(capsys, "convert", "--from", "ubar", "--to", "ext-polychromate", src)
    assert out == "x2[1,0]^3 + 3*x2[1,0]*x2[2,1] + x2[3,3]\n"
    code, out, _ = run(capsys, "convert", "--from", "ubar", "--to", "ybar-p", src, "--format", "json")
    yjson = tmp_path / "y.json"
    yjson.write_text(out)
    code, out, _ = run(capsys, "convert", "--from", "ybar-p", "--to", "ubar", yjson)
    assert out == ubar_text

    code, u_json, _ = run(capsys, "compute", "u", graphs_dir / "path2.el", "--format", "json")
    ufile = tmp_path / "u.json"
    ufile.write_text(u_json)
    code, out, _ = run(capsys, "convert", "--from", "u", "--to", "polychromate", ufile)
    assert out == run(capsys, "compute", "polychromate", graphs_dir / "path2.el")[1]
    assert run(capsys, "convert", "--from", "u", "--to", "ubar", ufile)[0] == 2


def _cli(gpoly_cmd, *argv):
    return subprocess.run(gpoly_cmd + [str(a) for a in argv], capture_output=True, text=True, timeout=300)


def test_subprocess_exit_codes(gpoly_cmd, graphs_dir, tmp_path):
    assert _cli(gpoly_cmd, "compare", "ubar", graphs_dir / "brylawski1.el", graphs_dir / "brylawski2.el").stdout == "EQUAL\n"
    assert _cli(gpoly_cmd, "compare", "ubar", graphs_dir / "G1.el", graphs_dir / "G2.el").returncode == 1
    bad = tmp_path / "bad.el"
    bad.write_text("x\n")
    assert _cli(gpoly_cmd, "compute", "u", bad).returncode == 2
    assert _cli(gpoly_cmd, "compute", "two-polymatroid", graphs_dir / "loop1.el").returncode == 4


def test_output_is_deterministic(gpoly_cmd, graphs_dir):
    a = _cli(gpoly_cmd, "search", "--enumerate", "4", "--format", "json")
    b = _cli(gpoly_cmd, "search", "--enumerate", "4", "--format", "json", "--jobs", "2")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    c = _cli(gpoly_cmd, "compute", "ext-polychromate", graphs_dir / "brylawski1.el", "--jobs", "2")
    d = _cli(gpoly_cmd, "compute", "ext-polychromate", graphs_dir / "brylawski1.el")
    assert c.stdout == d.stdout and c.stdout
