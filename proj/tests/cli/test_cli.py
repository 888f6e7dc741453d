import json
import os
import subprocess

CLI = os.environ["FUBINI_CLI"]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_compute_plain():
    assert run("compute", "fubini-poly", "--n", "3").stdout == "6y^3 + 6y^2 + y\n"
    assert run("compute", "fubini-poly", "--n", "2", "--at", "1").stdout == "3\n"
    assert run("compute", "stirling2", "--n", "4", "--k", "2").stdout == "7\n"
    assert run("compute", "stirling1", "--n", "4", "--k", "2").stdout == "11\n"
    assert run("compute", "fubini-number", "--n", "5").stdout == "541\n"
    assert run("compute", "fubini-two-var", "--n", "2").stdout == "x^2 + 2xy + 2y^2 + y\n"
    assert run("compute", "bernoulli", "--n", "4").stdout == "-1/30\n"
    assert run("compute", "p-bernoulli", "--n", "1", "--p", "1").stdout == "-1/3\n"
    assert run("compute", "apostol", "--n", "2").stdout == "(-2λ)/(λ-1)^2\n"
    assert run("compute", "apostol", "--n", "2", "--at", "3").stdout == "-3/2\n"


def test_compute_json_and_csv():
    out = json.loads(run("compute", "apostol", "--n", "2", "--format", "json").stdout)
    assert out["value"] == {"numerator": ["0", "-2"], "denominator": ["1", "-2", "1"]}
    out = json.loads(run("compute", "fubini-poly", "--n", "3", "--format", "json").stdout)
    assert out["value"] == ["0", "1", "6", "6"]
    assert run("compute", "bernoulli", "--n", "4", "--format", "csv").stdout == "object,n,value\nbernoulli,4,-1/30\n"


def test_table():
    lines = run("table", "bernoulli", "--n-max", "4", "--format", "csv").stdout.splitlines()
    assert lines == ["n,value", "0,1", "1,-1/2", "2,1/6", "3,0", "4,-1/30"]
    rows = json.loads(run("table", "fubini-number", "--n-max", "3", "--format", "json").stdout)["rows"]
    assert [r["value"] for r in rows] == ["1", "1", "3", "13"]


def test_verify_one():
    r = run("verify", "eq26_integral", "--n-max", "30", "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["summary"]["passed"] == 30
    first = out["reports"][0]
    assert list(first) == ["elapsed_us", "identity", "lhs", "params", "rhs", "status"]
    assert first["status"] == "pass"
    header = run("verify", "eq5_binomial", "--format", "csv").stdout.splitlines()[0]
    assert header == "identity,params,status,lhs,rhs,elapsed_us"


def test_skipped_precondition():
    out = json.loads(run("verify", "eq24_corrected_split", "--n-max", "3", "--format", "json").stdout)
    skipped = [r for r in out["reports"] if r["status"] == "skipped-precondition"]
    assert skipped and all(r["params"]["y"] == "-1/2" for r in skipped)
    assert out["summary"]["failed"] == 0


def test_exit_codes():
    assert run("verify-all", "--profile", "quick").returncode == 0
    assert run("verify-all", "--profile", "quick", "--sabotage-bernoulli", "6").returncode == 1
    assert run("verify-all", "--profile", "bogus").returncode == 2
    assert run("verify", "eq0_nothing").returncode == 2
    assert run("compute", "bernoulli").returncode == 2
    assert run("compute", "fubini-poly", "--n", "2", "--at", "x").returncode == 2
    assert run("compute", "apostol", "--n", "2", "--at", "1").returncode == 2
    assert run("frobnicate").returncode == 2
    assert run().returncode == 2


def test_reports_are_byte_deterministic():
    a = run("verify-all", "--profile", "quick", "--format", "json", "--omit-timing", "--jobs", "1").stdout
    b = run("verify-all", "--profile", "quick", "--format", "json", "--omit-timing", "--jobs", "4").stdout
    assert a and a == b
    assert "elapsed_us" not in a


def test_list_identities():
    entries = json.loads(run("list-identities", "--format", "json").stdout)
    assert len(entries) >= 37
    by_id = {e["id"]: e for e in entries}
    assert by_id["eq24_corrected_split"]["corrected"] is True
    assert by_id["eq26_integral"]["formula"] == "∫_{-1}^{0} F_n(y) dy = B_n, n >= 1"
