import json
import subprocess
import sys

import pytest

from brace_forge.cli import main
from brace_forge.corpus import dumps

Z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]
B212 = {"n": 4, "add": Z4, "circ": [[(a + b + 2 * a * b) % 4 for b in range(4)] for a in range(4)]}
BROKEN = {"n": 4, "add": Z4, "circ": [[0, 1, 2, 3], [1, 3, 0, 2], [2, 0, 3, 1], [3, 2, 1, 0]]}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate(tmp_path, capsys):
    code, out = run(capsys, "validate", write(tmp_path, "b.json", B212))
    assert code == 0 and json.loads(out) == {"valid": True, "kind": "brace", "n": 4}
    code, out = run(capsys, "validate", write(tmp_path, "x.json", BROKEN))
    res = json.loads(out)
    assert code == 1 and not res["valid"] and res["error"] == "BraceAxiomViolation"
    assert res["witness"][:3] == [1, 1, 1]
    code, _ = run(capsys, "validate", write(tmp_path, "m.json", "{not json"))
    assert code == 3
    code, _ = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 3
    code, _ = run(capsys, "validate", write(tmp_path, "s.json", {"n": 2}))
    assert code == 3


def test_invariants(tmp_path, capsys):
    code, out = run(capsys, "invariants", write(tmp_path, "b.json", B212))
    res = json.loads(out)
    assert code == 0
    assert (res["Ann"], res["Aprime"], res["Fix"], res["Ker"]) == ([0, 2], [0, 2], [0, 2], [0, 2])
    assert list(res)[:4] == ["n", "Ann", "Aprime", "Fix"]
    code, out = run(capsys, "make", "--family", "trivial", "--group", "S3")
    path = write(tmp_path, "s3.json", out)
    res = json.loads(run(capsys, "invariants", path)[1])
    assert res["Ann"] == [0] and res["Aprime"] == [0, 4, 5]
    code, out = run(capsys, "make", "--family", "trivial", "--group", "Z2")
    res = json.loads(run(capsys, "invariants", write(tmp_path, "z2.json", out))[1])
    assert res["Ann"] == res["Fix"] == res["Ker"] == [0, 1] and res["Aprime"] == [0]


def test_make_radical(capsys):
    code, out = run(capsys, "make", "--family", "radical", "--p", "2", "--n", "2", "--r", "1")
    assert code == 0 and json.loads(out) == B212
    code, _ = run(capsys, "make", "--family", "radical", "--p", "2")
    assert code == 3
    code, _ = run(capsys, "make", "--family", "radical", "--p", "4", "--n", "2", "--r", "1")
    assert code == 1


def test_lambda_group_and_char_degrees(tmp_path, capsys):
    out_path = str(tmp_path / "lam.json")
    code, _ = run(capsys, "lambda-group", write(tmp_path, "b.json", B212), "--out", out_path)
    assert code == 0
    code, out = run(capsys, "char-degrees", out_path)
    assert code == 0 and json.loads(out)["degrees"] == [[1, 8], [2, 2]]
    code, out = run(capsys, "char-degrees", str(tmp_path / "b.json"))
    assert json.loads(out)["degrees"] == [[1, 8], [2, 2]]


def test_ird(tmp_path, capsys):
    code, out = run(capsys, "ird", write(tmp_path, "b.json", B212))
    assert code == 0 and json.loads(out) == {"ird": [1, 2], "ird_circ": [1]}


def test_isoclinic(tmp_path, capsys):
    p = write(tmp_path, "b.json", B212)
    code, out = run(capsys, "isoclinic", p, p)
    res = json.loads(out)
    assert code == 0 and res["isoclinic"]
    assert res["certificate"]["xi1"] == [0, 1]
    assert res["certificate"]["xi2"] == {"domain": [0, 2], "image": [0, 2]}
    g = write(tmp_path, "g.json", {"n": 4, "table": Z4})
    code, _ = run(capsys, "isoclinic", p, g)
    assert code == 3


def test_regular_check(tmp_path, capsys):
    code, out = run(capsys, "regular-check", write(tmp_path, "b.json", B212))
    assert code == 0 and json.loads(out)["holds"]


def test_verify_selected_family(capsys):
    code, out = run(capsys, "verify-paper", "--select", "radical:2,2,1", "--no-fixtures")
    assert code == 0 and json.loads(out) == {"holds": True, "braces": ["radical:2,2,1"], "fixtures": 0}


def test_verify_rejects_broken_extra(tmp_path, capsys):
    code, out = run(capsys, "verify-paper", "--select", "none", "--no-fixtures", "--extra", write(tmp_path, "x.json", BROKEN))
    assert code == 1 and json.loads(out)["error"] == "BraceAxiomViolation"


def test_size_cap_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("BRACE_FORGE_CAP", "8")
    code, out = run(capsys, "char-degrees", write(tmp_path, "b.json", B212))
    assert code == 1 and json.loads(out)["error"] == "SizeBound"


def test_human_output(tmp_path, capsys):
    code, out = run(capsys, "--human", "validate", write(tmp_path, "b.json", B212))
    assert code == 0 and out.splitlines() == ["valid: True", "kind: brace", "n: 4"]


def test_output_is_byte_identical_across_processes(tmp_path):
    p = write(tmp_path, "b.json", B212)
    cmd = [sys.executable, "-m", "brace_forge", "invariants", p]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")


@pytest.mark.slow
def test_verify_default_corpus_exits_zero(capsys):
    code, out = run(capsys, "verify-paper")
    res = json.loads(out)
    assert code == 0 and res["holds"] and len(res["braces"]) == 12 and res["fixtures"] == 23
