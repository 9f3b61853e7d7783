import json

import pytest

from hgfree.cli import AnalyzeReport, dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "13", "--e", "1", "--r", "12", "--t", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["derived"]["a"] == 8 and data["derived"]["regime"] == "TypicalBoundary"
    assert data["cf"]["quotients"] == [4, 1, 1, 1, 1, 2] and data["cf"]["n"] == 5
    assert data["exponents"]["precision"] == 8 and data["exponents"]["E"] == [1, 2, 5]
    assert data["verdict"]["free"] is False


def test_analyze_json_roundtrip_idempotent(capsys):
    _, out, _ = run(capsys, "analyze", "--p", "13", "--e", "1", "--r", "12", "--t", "5",
                    "--json", "--matrices")
    data = json.loads(out)
    again = dumps(AnalyzeReport.from_json(data).to_json())
    assert again == out.rstrip("\n")
    assert data["matrices"]["certificate"]["type"] == "hall"


def test_analyze_deterministic(capsys):
    argv = ("analyze", "--p", "5", "--e", "2", "--r", "4", "--t", "7", "--json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "3", "--e", "1", "--r", "2", "--t", "3")
    assert code == 0 and "free: yes" in out


def test_invalid_params_exit_2(capsys):
    code, _, err = run(capsys, "analyze", "--p", "4", "--e", "1", "--r", "1", "--t", "1")
    assert code == 2 and "odd prime" in err


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--p", "5"])
    assert exc.value.code == 1


def test_sweep_csv(capsys, tmp_path):
    out_file = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--p", "5", "--r", "4", "--e-min", "1", "--e-max", "2",
                     "--t-max", "9", "--strict", "--typical-only", "--csv-out", str(out_file))
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "p,e,r,t,c,ell,a,regime,n,free,clause,skipped"
    assert sum(1 for line in lines[1:] if line.endswith(",")) == 6


def test_sweep_empty_range_header_only(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "5", "--r", "4", "--e-min", "2", "--e-max", "1")
    assert code == 0 and out == "p,e,r,t,c,ell,a,regime,n,free,clause,skipped\n"


def test_sweep_unwritable_exit_1(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", "--p", "5", "--r", "4", "--csv-out",
                     str(tmp_path / "missing" / "x.csv"))
    assert code == 1


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "--num", "60", "--den", "13")
    data = json.loads(out)
    assert code == 0 and data["expansion"] == "[4;1,1,1,1,2]"
    assert data["convergents"]["q"] == [1, 1, 2, 3, 5, 13]
    assert run(capsys, "cf", "--num", "1", "--den", "0")[0] == 2


def test_circle(capsys):
    code, out, _ = run(capsys, "circle", "--p", "13", "--a", "8")
    assert code == 0 and out.splitlines()[:2] == ["h,residue,denominator", "1,8,13"]


def test_tateoort(capsys):
    code, out, _ = run(capsys, "tateoort", "--p", "5", "--precision", "6")
    data = json.loads(out)
    assert code == 0 and data["epsilon"] == 4269 and data["checks_passed"]
    assert run(capsys, "tateoort", "--p", "4")[0] == 2


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--p-max", "5")
    assert code == 0 and "FAIL " not in out
    assert run(capsys, "verify", "--p-max", "2")[0] == 1
