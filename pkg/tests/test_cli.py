import json
import subprocess
import sys

from threecircles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_isolate_text(capsys):
    code, out, _ = run(capsys, "isolate", "-p", "2/9,-1,1", "-l", "0", "-r", "1")
    assert code == 0
    assert "interval (0, 1/2)\ninterval (1/2, 1)" in out
    code, out, _ = run(capsys, "isolate", "-p", "1,0,1", "-l", "-1", "-r", "1")
    assert code == 0 and out.startswith("no roots")
    code, out, _ = run(capsys, "isolate", "-p", "0,1", "-l", "-1", "-r", "1")
    assert "interval (-1, 1)" in out


def test_isolate_json(capsys):
    code, out, _ = run(capsys, "isolate", "-p", "2/9,-1,1", "-l", "0", "-r", "1", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"command", "inputs", "result", "seed", "version"}
    assert doc["result"]["intervals"] == [["0", "1/2"], ["1/2", "1"]]


def test_isolate_endpoint_and_squarefree(capsys):
    # (X-1)^2 (X - 1/2) (X + 1): root 1 is an endpoint, -1 outside
    poly = "-1/2,3/2,-1/2,-3/2,1"
    # an interior double root is refused without --squarefree-auto; (X - 1/2)^2 (X + 1)
    code, out, err = run(capsys, "isolate", "-p", "1/4,-3/4,0,1", "-l", "0", "-r", "1")
    assert code == 1 and "squarefree" in err
    code, out, _ = run(capsys, "isolate", "-p", poly, "-l", "0", "-r", "1")
    assert code == 0 and "endpoint 1 is a root (multiplicity 2), excluded" in out
    code, out, _ = run(capsys, "isolate", "-p", poly, "-l", "0", "-r", "1", "--squarefree-auto",
                       "--format", "json")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["endpoint_roots"] == {"1": 2}
    assert len(res["intervals"]) + len(res["exact_roots"]) == 1
    assert {"factor": "-1,1", "multiplicity": 2} in res["multiplicities"]
    code, out, _ = run(capsys, "isolate", "-p", "0,-1,1", "-l", "0", "-r", "1")
    assert code == 0 and "no roots" in out and "endpoint 0" in out


def test_isolate_depth_exhausted(capsys):
    # roots 1/3 and 1/3 + 1/1048576
    code, out, err = run(capsys, "isolate", "-p", "1048579/9437184,-2097155/3145728,1",
                         "-l", "0", "-r", "1", "--max-depth", "3")
    assert code == 2 and "depth" in err


def test_parse_errors(capsys):
    assert run(capsys, "isolate", "-p", "1.5", "-l", "0", "-r", "1")[0] == 1
    assert run(capsys, "isolate", "-p", "1,1", "-l", "1", "-r", "0")[0] == 1
    assert run(capsys, "mobius", "-p", "1,1")[0] == 1
    assert run(capsys, "nonsense")[0] == 1


def test_mobius_and_bernstein(capsys):
    assert run(capsys, "mobius", "-p", "1,0,1", "-l", "-1", "-r", "1")[1] == "2,0,2\n"
    assert run(capsys, "bernstein", "-p", "1", "-l", "0", "-r", "1", "-n", "2")[1] == "1,1,1\n"
    assert run(capsys, "bernstein", "-p", "1,0,1", "-l", "-1", "-r", "1", "-n", "2")[1] == "2,0,2\n"
    # (X+1)^2 ((2/(X+1))^2 - 1) = 3 - 2X - X^2
    assert run(capsys, "mobius", "-p", "-1,0,1", "-l", "0", "-r", "2")[1] == "3,-2,-1\n"
    assert run(capsys, "mobius", "--poly", "-1,0,1", "-l", "-1/2", "-r", "2")[0] == 0


def test_check_normal(capsys):
    code, out, _ = run(capsys, "check-normal", "-p", "1,3,1")
    assert out == "normal: yes\n"
    code, out, _ = run(capsys, "check-normal", "-p", "1,0,1")
    assert out == "normal: no (condition 4 fails at index 1)\n"


def test_check_campaign(capsys):
    code, out, _ = run(capsys, "check", "three-circles-1", "--trials", "50", "--seed", "42")
    assert code == 0 and "failures 0" in out
    code, out, _ = run(capsys, "check", "bernq-oracle", "--trials", "20", "--format", "json")
    doc = json.loads(out)
    assert doc["result"]["failures"] == [] and len(doc["result"]["records"]) == 20
    assert all("seed" in rec for rec in doc["result"]["records"])


def test_check_seed_from_env(capsys, monkeypatch):
    monkeypatch.setenv("THREECIRCLES_SEED", "17")
    _, out, _ = run(capsys, "check", "normal-closure", "--trials", "5", "--format", "json")
    assert json.loads(out)["seed"] == 17
    monkeypatch.setenv("THREECIRCLES_SEED", "x")
    assert run(capsys, "check", "normal-closure", "--trials", "5")[0] == 1


def test_check_deterministic(capsys):
    args = ["check", "obreshkoff", "--p", "1", "--q", "2", "--k", "2", "--trials", "30",
            "--seed", "5", "--format", "json"]
    a = run(capsys, *args)[1]
    b = run(capsys, *args)[1]
    c = run(capsys, *args, "--jobs", "2")[1]
    assert a == b == c


def test_check_generator_exhausted(capsys, monkeypatch):
    import threecircles.certcheck as cc
    monkeypatch.setattr(cc, "GENERATOR_BUDGET", 0)
    assert run(capsys, "check", "three-circles-1", "--trials", "2")[0] == 3


def test_check_bad_obreshkoff_counts(capsys):
    assert run(capsys, "check", "obreshkoff", "--p", "2", "--q", "1", "--trials", "1")[0] == 1


def test_plot(tmp_path, capsys):
    roots = tmp_path / "roots.txt"
    roots.write_text("real 1/3\nreal 2/3\n")
    out = tmp_path / "fig.svg"
    code = run(capsys, "plot", "-l", "0", "-r", "1", "--roots", str(roots), "--out", str(out))[0]
    assert code == 0
    svg = out.read_text()
    assert svg.startswith("<svg") and svg.count('class="root"') == 2
    assert svg.count("<path") == 3
    out2 = tmp_path / "fig2.svg"
    run(capsys, "plot", "-l", "0", "-r", "1", "--roots", str(roots), "--out", str(out2))
    assert out2.read_text() == svg
    assert run(capsys, "plot", "-l", "0", "-r", "1", "--out", str(tmp_path / "nodir" / "x.svg"))[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "threecircles", "mobius", "-p", "0,1", "-l", "-1",
                           "-r", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1,-1\n"
