import csv
import io
import json
import subprocess
import sys

import pytest

from cyclocode.cli import main

SCHEMA_KEYS = {"spec", "method", "distribution", "min_distance", "lower_bound",
               "griesmer_optimal", "dual_distance", "verdict", "ms"}
SPEC_KEYS = {"p", "e", "k", "e1", "e2", "q", "n", "dim", "d"}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_weights_both(capsys):
    code, out, _ = run(capsys, "weights", "-p", "2", "-e", "2", "-k", "3", "--e1", "1",
                       "--e2", "1", "--method", "both", "--dual", "--enumerator")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == SCHEMA_KEYS | {"enumerator"}
    assert set(rep["spec"]) == SPEC_KEYS
    assert rep["distribution"] == [{"w": 0, "count": 1}, {"w": 47, "count": 189},
                                   {"w": 48, "count": 63}, {"w": 63, "count": 3}]
    assert rep["griesmer_optimal"] is True and rep["verdict"] == "match"
    assert rep["dual_distance"] == 3 and rep["min_distance"] == rep["lower_bound"] == 47
    assert rep["enumerator"] == "1+189z^47+63z^48+3z^63"
    assert json.loads(json.dumps(rep)) == rep


def test_weights_theory_six_weights(capsys):
    code, out, _ = run(capsys, "weights", "-p", "5", "-k", "5", "--e1", "1", "--e2", "1",
                       "--method", "theory")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == SCHEMA_KEYS and rep["verdict"] is None
    assert len([e for e in rep["distribution"] if e["w"]]) == 6
    ws = [e["w"] for e in rep["distribution"]]
    assert ws == sorted(ws)


def test_weights_deterministic(capsys):
    args = ("weights", "-p", "3", "-k", "3", "--e1", "1", "--e2", "1", "--method", "both")
    a = json.loads(run(capsys, *args)[1])
    b = json.loads(run(capsys, *args)[1])
    a.pop("ms"), b.pop("ms")
    assert json.dumps(a) == json.dumps(b)


def test_weights_d5_exit_1(capsys):
    code, _, err = run(capsys, "weights", "-p", "11", "-k", "2", "--e1", "3", "--e2", "1",
                       "--method", "theory")
    assert code == 1 and "open problem" in err


def test_weights_brute_for_d5(capsys):
    code, out, _ = run(capsys, "weights", "-p", "11", "-k", "2", "--e1", "3", "--e2", "1",
                       "--method", "brute")
    assert code == 0 and json.loads(out)["spec"]["d"] == 5


def test_weights_validation_exit_1(capsys):
    code, _, err = run(capsys, "weights", "-p", "2", "-e", "2", "-k", "3", "--e1", "1",
                       "--e2", "21")
    assert code == 1 and "gcd((q^k-1)/(q-1), e2)" in err
    code, _, err = run(capsys, "weights", "-p", "6", "-k", "3", "--e1", "1", "--e2", "1")
    assert code == 1 and "not prime" in err


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["weights", "-p", "2"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1


def test_weights_mismatch_exit_2(capsys, monkeypatch):
    import cyclocode.cli as cli
    from cyclocode.code import WeightDistribution
    real = cli.weight_distribution_brute

    def broken(spec, workers=1):
        d = real(spec, workers).as_dict()
        d[14] -= 1
        d[15] = 1
        return WeightDistribution.from_counts(d)

    monkeypatch.setattr(cli, "weight_distribution_brute", broken)
    code, out, _ = run(capsys, "weights", "-p", "3", "-k", "3", "--e1", "1", "--e2", "1")
    assert code == 2 and json.loads(out)["verdict"].startswith("mismatch")


def test_verify_default(capsys):
    code, out, _ = run(capsys, "verify", "--dual")
    assert code == 0
    lines = out.strip().splitlines()
    golden = [l for l in lines if l.split()[1].startswith("golden-")]
    assert len(golden) == 9 and all(l.startswith("PASS") for l in golden)
    assert sum("dual distance 3" in l for l in golden) == 2


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--sweep", "q=3,k=3,e-max=6")
    assert code == 0
    assert sum(l.startswith("PASS sweep") for l in out.splitlines()) > 10


def test_verify_failure_exit_2(capsys, monkeypatch):
    import cyclocode.cli as cli
    monkeypatch.setattr(cli, "property_suite", lambda: [("fake", False, "boom")])
    code, out, _ = run(capsys, "verify")
    assert code == 2 and "FAIL fake: boom" in out


def test_jacobi(capsys):
    code, out, _ = run(capsys, "jacobi", "-q", "7")
    assert code == 0 and "A=1 B=1" in out
    code, out, _ = run(capsys, "jacobi", "-q", "19")
    assert code == 0 and "A=7" in out
    code, out, _ = run(capsys, "jacobi", "-q", "13")
    assert "m=3 n=2" in out
    code, _, _ = run(capsys, "jacobi", "-q", "5")
    assert code == 1


def test_gauss(capsys):
    code, out, _ = run(capsys, "gauss", "-p", "5", "--order", "2")
    assert code == 0 and "exact=sqrt(5)" in out and "check=ok" in out
    code, out, _ = run(capsys, "gauss", "-p", "7")
    assert code == 0 and len(out.splitlines()) == 3
    code, _, err = run(capsys, "gauss", "-p", "5", "--order", "3")
    assert code == 1 and "does not divide" in err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_table_17(capsys):
    code, out, _ = run(capsys, "table", "17", "-p", "3", "-e", "2")
    assert code == 0
    assert out.splitlines()[0] == "table,row,weight,frequency,merge"
    rows = parse_csv(out)
    counts = {}
    for r in rows:
        counts[int(r["weight"])] = counts.get(int(r["weight"]), 0) + int(r["frequency"])
    assert counts == {0: 1, 620: 1456, 648: 728, 656: 4368, 728: 8}
    assert sum(bool(r["merge"]) for r in rows) == 3


def test_table_1(capsys):
    code, out, _ = run(capsys, "table", "1", "-p", "2", "-e", "2", "-k", "3")
    rows = parse_csv(out)
    assert code == 0
    assert [(int(r["weight"]), int(r["frequency"])) for r in rows if r["row"] != "zero"] == \
        [(47, 189), (48, 63), (63, 3)]


def test_table_errors(capsys):
    assert run(capsys, "table", "19", "-p", "5")[0] == 1
    assert run(capsys, "table", "42", "-p", "5")[0] == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclocode", "jacobi", "-q", "7"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "A=1 B=1" in res.stdout
