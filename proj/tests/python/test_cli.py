import json
import os
import subprocess

import pytest

CLI = os.environ.get("QUIVERMOD_CLI", "quivermod")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


@pytest.fixture
def conifold(tmp_path):
    path = tmp_path / "conifold.quiver"
    path.write_text(run("builtin", "determinantal", "2").stdout)
    return path


def write_rep(tmp_path, name, scalars):
    arrows = {a: [[str(s)]] for a, s in zip(["a", "c", "k1", "k2"], scalars)}
    path = tmp_path / name
    path.write_text(json.dumps({"format_version": 1, "dim": [1, 1], "arrows": arrows}))
    return path


def test_validate(conifold):
    r = run("validate", str(conifold))
    assert r.returncode == 0


def test_stability_with_witness(conifold, tmp_path):
    rep = write_rep(tmp_path, "r.json", [0, 0, 1, 1])
    r = run("--json", "stability", str(conifold), "--rep", str(rep), "--theta-from-file")
    assert r.returncode == 0
    verdict = json.loads(r.stdout)
    assert verdict["status"] == "unstable"
    assert verdict["witness"]["theta_value"] == "-1"


def test_moduli_from_stdin(conifold):
    r = run("moduli", "-", stdin=conifold.read_text())
    assert r.returncode == 0
    atlas = json.loads(r.stdout)
    assert len(atlas["charts"]) == 2
    assert atlas["lattice_rank"] == "3"
    again = run("moduli", "-", stdin=conifold.read_text())
    assert again.stdout == r.stdout


def test_fan_of_preprojective(tmp_path):
    path = tmp_path / "pp.quiver"
    path.write_text(run("builtin", "preprojective-a", "3").stdout)
    r = run("--json", "fan", str(path))
    assert r.returncode == 0
    assert len(json.loads(r.stdout)["rays"]) == 5


def test_errors_and_exit_codes(tmp_path):
    bad = tmp_path / "bad.quiver"
    bad.write_text("quiver q\nvertices 2\narrow a: 0 -> 1\nrelation a*a\n")
    r = run("validate", str(bad))
    assert r.returncode == 2
    assert r.stderr.startswith("error[NONCOMPOSABLE_TERM]")
    assert "line 4" in r.stderr

    loop = tmp_path / "loop.quiver"
    loop.write_text("quiver loop\nvertices 1\narrow x: 0 -> 0\nrelation x*x\n")
    r = run("moduli", str(loop))
    assert r.returncode == 1
    assert r.stderr.startswith("error[NON_TORIC_RELATIONS]")

    assert run("builtin", "determinantal", "0").returncode == 2
    assert run("no-such-command").returncode == 2


def test_non_thin_rep_uses_its_own_framing(conifold, tmp_path):
    rep = tmp_path / "fat.json"
    rep.write_text(json.dumps({"format_version": 1, "dim": [1, 2],
                               "arrows": {"a": [["1"], ["0"]], "c": [["0"], ["1"]], "k1": [["1", "0"]]}}))
    r = run("--json", "stability", str(conifold), "--rep", str(rep))
    assert r.returncode == 0
    verdict = json.loads(r.stdout)
    assert verdict["theta"] == ["-2", "1"]
    assert verdict["status"] == "stable"
    assert verdict["exhaustive"]
