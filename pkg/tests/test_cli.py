import json

import pytest

from kgdf.cli import main
from kgdf.poly import LaurentPoly2

TREFOIL_DK = "2a^2 - a^4 + a^5 z - a^3 z + a^2 z^2 - a^4 z^2"


@pytest.fixture
def knot_file(tmp_path):
    p = tmp_path / "knots.txt"
    p.write_text("unknot:\nleft_trefoil: O1- U2- O3- U1- O2- U3-\n"
                 "trefoil_u: U1- O2- U3- O1- U2- O3-\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys, knot_file):
    code, out, _ = run(capsys, "invariants", "--input", knot_file, "--max-order", "2", "--format", "json")
    assert code == 0
    recs = {r["name"]: r for r in json.loads(out)}
    assert recs["unknot"]["DK"] == "1"
    assert all(t["value"] == ([1, 1] if (t["k"], t["l"]) == (0, 0) else [0, 1]) for t in recs["unknot"]["p"])
    tref = recs["left_trefoil"]
    assert LaurentPoly2.parse(tref["DK"]) == LaurentPoly2.parse(TREFOIL_DK)
    p = {(t["k"], t["l"]): t["value"] for t in tref["p"]}
    assert p[(1, 1)] == [2, 1] and p[(2, 0)] == [-4, 1]
    assert tref["Jones_from_DK"] == tref["Jones_from_HOMFLY"]


def test_invariants_text_is_deterministic(capsys, knot_file):
    _, first, _ = run(capsys, "invariants", "--input", knot_file)
    _, second, _ = run(capsys, "invariants", "--input", knot_file)
    assert first == second and "p[1,1] = 2" in first


def test_gdf_and_pair(capsys, tmp_path, knot_file):
    out_path = tmp_path / "a20.json"
    code, _, _ = run(capsys, "gdf", "--k", "2", "--l", "0", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["collapsed"]["unsigned"] is True
    assert doc["collapsed"]["terms"] == [{"key": "F1 H2 H1 F2", "coeff": [-4, 1]}]
    code, out, _ = run(capsys, "pair", "--gdf", str(out_path), "--input", knot_file)
    assert code == 0
    assert out.splitlines() == ["unknot 0", "left_trefoil -4", "trefoil_u -4"]


def test_gdf_empty_and_model(capsys):
    code, out, _ = run(capsys, "gdf", "--k", "0", "--l", "3")
    assert code == 0 and json.loads(out)["gdf"]["terms"] == []
    code, out, _ = run(capsys, "gdf", "--model", "homfly", "--order", "2")
    assert json.loads(out)["collapsed"]["terms"] == [{"key": "F1 H2 H1 F2", "coeff": [-48, 1]}]


def test_gdf_strict_collapse_failure(capsys):
    code, _, err = run(capsys, "gdf", "--k", "3", "--l", "0", "--strict")
    assert code == 1 and "F1 H2 H1 F2" in err


def test_gdf_input_errors(capsys):
    assert run(capsys, "gdf", "--k", "2")[0] == 2
    assert run(capsys, "gdf", "--k", "5", "--l", "0")[0] == 2
    assert run(capsys, "gdf", "--model", "kauffman")[0] == 2


def test_verify_identities(capsys, knot_file):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--input", knot_file,
                       "--knot", "left_trefoil", "--workers", "1")
    assert code == 0
    line = next(ln for ln in out.splitlines() if "order3-relation" in ln)
    assert line == "CHECK order3-relation left_trefoil PASS 0 -1,2,-1"


def test_verify_failure_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("t: O1- U2- O3- U1- O2- U3- | DK=1\n")
    code, out, _ = run(capsys, "verify", "--suite", "state-model", "--input", str(p), "--workers", "1")
    assert code == 1 and "CHECK expected-DK t FAIL" in out


def test_state_trace(capsys, knot_file):
    code, out, _ = run(capsys, "state-trace", "--input", knot_file, "--knot", "trefoil_u",
                       "--state", "inf,0,inf")
    assert code == 0
    assert out.splitlines()[-1] == "c=2 valid=true weight=-a^3 z^3"
    code, out, _ = run(capsys, "state-trace", "--input", knot_file, "--knot", "left_trefoil",
                       "--state", "phi,phi,phi")
    assert out.splitlines()[-1] == "c=1 valid=true weight=a^2"
    assert all("n=0" in ln for ln in out.splitlines()[:-1])
    code, out, _ = run(capsys, "state-trace", "--input", knot_file, "--knot", "left_trefoil",
                       "--state", "0,phi,phi")
    assert out.splitlines()[-1].endswith("valid=false weight=0")


def test_input_errors(capsys, tmp_path, knot_file):
    assert run(capsys, "state-trace", "--input", knot_file, "--knot", "left_trefoil", "--state", "0,0")[0] == 2
    assert run(capsys, "state-trace", "--input", knot_file, "--knot", "left_trefoil", "--state", "x,0,0")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("k: O1+ U2+\n")
    assert run(capsys, "invariants", "--input", str(bad))[0] == 2
    assert run(capsys, "invariants", "--input", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "invariants", "--input", knot_file, "--knot", "nope")[0] == 2
    assert run(capsys, "pair", "--gdf", str(bad), "--input", knot_file)[0] == 2
    assert run(capsys, "bogus")[0] == 2
