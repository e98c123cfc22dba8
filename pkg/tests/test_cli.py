import json
import subprocess
import sys

import pytest

from hyperfields import named
from hyperfields.catalog import serialize, to_json
from hyperfields.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "5")
    assert code == 0
    assert out.splitlines()[0] == "27 classes"
    assert "C4 with -1 = a^2: 9" in out
    assert "\nX  C2,2" in out


def test_enumerate_json_and_out(tmp_path, capsys):
    path = tmp_path / "o4.json"
    code, out, _ = run(capsys, "enumerate", "--order", "4", "--format", "json", "--out", str(path))
    assert code == 0 and out.strip() == "7 classes"
    doc = json.loads(path.read_text())
    assert doc["count"] == 7
    assert sorted(c["name"] for c in doc["classes"]) == sorted(
        ["F4", "F2^u4", "K^u4", "F2^uu4", "F2^uu4_r", "K^uu4", "K^uu4_r"])


def test_enumerate_restricted_and_naive(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "5", "--group", "product:2,2", "--neg", "4")
    assert code == 0 and out.startswith("6 classes")
    code, out, _ = run(capsys, "enumerate", "--order", "3", "--naive")
    assert code == 0 and out.startswith("5 classes")


def test_enumerate_usage_errors(capsys):
    assert run(capsys, "enumerate", "--order", "5", "--naive")[0] == 2
    assert run(capsys, "enumerate", "--order", "5", "--neg", "3")[0] == 2
    assert run(capsys, "enumerate", "--order", "5", "--group", "cyclic:4", "--neg", "2")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["enumerate"])
    assert info.value.code == 2


def test_enumerate_is_deterministic(capsys):
    first = run(capsys, "enumerate", "--order", "5", "--format", "json")[1]
    second = run(capsys, "enumerate", "--order", "5", "--format", "json", "--workers", "2")[1]
    assert first == second


def test_verify_fixture_and_files(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "K")
    assert code == 0 and out.rstrip().endswith("verified")
    code, out, _ = run(capsys, "verify", "F5,2-case11-table")
    assert code == 1 and "header:" in out
    code, out, _ = run(capsys, "verify", "F5,2-case14-table")
    assert code == 1 and "commutativity: witness" in out
    good = tmp_path / "m.txt"
    good.write_text(serialize(named("M")))
    assert run(capsys, "verify", str(good))[0] == 0
    bad = tmp_path / "bad.json"
    bad.write_text(to_json(named("F5,3-case14.2-table")))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and "associativity: witness" in out


def test_verify_io_errors(tmp_path, capsys):
    assert run(capsys, "verify", str(tmp_path / "missing.txt"))[0] == 2
    broken = tmp_path / "broken.txt"
    broken.write_text("hyperfield 1\nelements 0 1\n")
    code, _, err = run(capsys, "verify", str(broken))
    assert code == 2 and "line" in err


def test_classify(tmp_path, capsys):
    paths = []
    for name in ("F4-case6-table", "Y"):
        p = tmp_path / f"{len(paths)}.txt"
        p.write_text(serialize(named(name)))
        paths.append(str(p))
    code, out, _ = run(capsys, "classify", *paths)
    assert code == 0
    lines = out.splitlines()
    assert ": K^u4 " in lines[0] and ": Y " in lines[1]
    bad = tmp_path / "bad.txt"
    bad.write_text(serialize(named("F5,2-case14-table")))
    assert run(capsys, "classify", paths[0], str(bad))[0] == 1


def test_hom(capsys):
    code, out, _ = run(capsys, "hom", "--from", "F2", "--to", "K", "--kind", "weak")
    assert code == 0 and out.startswith("1 weak homomorphisms")
    code, out, _ = run(capsys, "hom", "--from", "F2", "--to", "K", "--kind", "strong")
    assert out.startswith("0 strong")
    code, out, _ = run(capsys, "hom", "--from", "F3", "--to", "S", "--injective")
    assert out.startswith("0 injective weak")


def test_lattice(tmp_path, capsys):
    path = tmp_path / "l.dot"
    code, out, _ = run(capsys, "lattice", "--max-order", "4", "--dot", str(path))
    assert code == 0
    dot = path.read_text()
    assert dot.startswith('digraph "extensions" {')
    assert '"F2" -> "F4" [style=solid, kind=strong];' in dot
    assert '"F2" -> "K" [style=dashed, kind=weak];' in dot
    again = tmp_path / "l2.dot"
    run(capsys, "lattice", "--max-order", "4", "--dot", str(again))
    assert again.read_text() == dot


def test_show(capsys):
    code, out, _ = run(capsys, "show", "K")
    assert code == 0
    assert "1 | {1} | {0,1}" in out
    assert run(capsys, "show", "nope")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperfields", "enumerate", "--order", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("5 classes")
