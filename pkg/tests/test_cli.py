import json
import subprocess
import sys

from pcv.checks import applicable_primes, get_check
from pcv.cli import main


def _run(*argv):
    return subprocess.run(
        [sys.executable, "-m", "pcv.cli", *argv], capture_output=True, text=True
    )


def test_list_contains_registry_rows(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "mcong1" in out and "p==1 (mod 3)" in out and "O(p)" in out
    assert "EXPECTED-FAIL" in out


def test_list_class_filter(capsys):
    assert main(["list", "--class", "1mod5"]) == 0
    out = capsys.readouterr().out
    assert "mcong3" in out and "macong5" in out and "s3_suite" in out
    assert "mcong1" not in out


def test_list_json(capsys):
    assert main(["list", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert any(r["id"] == "mcong1" for r in rows)
    assert all({"id", "statement", "class", "k", "cost"} <= set(r) for r in rows)


def test_verify_pass(capsys):
    assert main(["verify", "mcong1", "--pmax", "500"]) == 0
    out = capsys.readouterr().out
    n = len(applicable_primes(get_check("mcong1"), 3, 500))
    assert f"{n} primes checked" in out


def test_verify_counterexample(capsys):
    code = main(["verify", "ncong2_literal", "--pmax", "100"])
    assert code == 1
    out = capsys.readouterr().out
    assert "FAIL ncong2_literal p=5" in out and "lhs=9 rhs=84" in out


def test_verify_unknown_id(capsys):
    assert main(["verify", "nosuch"]) == 2


def test_verify_grid_id_rejected(capsys):
    assert main(["verify", "polid1"]) == 2


def test_verify_cap_refusal(capsys):
    assert main(["verify", "s2_suite", "--pmax", "501"]) == 2
    assert main(["verify", "s2_suite", "--pmax", "501", "--force", "--pmin", "499"]) == 0


def test_oracle_output(capsys):
    assert main(["oracle", "macong3", "-p", "7"]) == 0
    out = capsys.readouterr().out
    assert "291/5" in out and "lhs:       5" in out and "rhs:       5" in out
    assert "q_p(2) exact: 9" in out


def test_oracle_myw(capsys):
    assert main(["oracle", "myw", "-p", "11"]) == 0
    out = capsys.readouterr().out
    assert "137/60" in out and "3/2" in out and "11/6" in out and "holds" in out


def test_oracle_wrong_class(capsys):
    assert main(["oracle", "mcong1", "-p", "11"]) == 2
    err = capsys.readouterr().err
    assert "p==1 (mod 3)" in err


def test_sweep_empty_range(capsys):
    assert main(["sweep", "--pmax", "0", "--format", "jsonl"]) == 0
    assert capsys.readouterr().out == ""


def test_sweep_jsonl_schema_and_count(tmp_path):
    out = tmp_path / "run.jsonl"
    assert main(["sweep", "--pmax", "80", "--format", "jsonl", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    from pcv.checks.registry import default_sweep_ids

    expected = sum(
        len(applicable_primes(get_check(c), 3, 80)) for c in default_sweep_ids()
    )
    assert len(lines) == expected
    rec = json.loads(lines[0])
    assert list(rec) == ["check", "p", "k", "lhs", "rhs", "holds", "us"]
    assert isinstance(rec["lhs"], str) and isinstance(rec["rhs"], str)
    assert rec["us"] == 0


def test_sweep_csv(tmp_path):
    out = tmp_path / "run.csv"
    assert main(["sweep", "--checks", "mcong1,lemmaL_half", "--pmax", "60",
                 "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "check,p,k,lhs,rhs,holds,us"
    assert all(line.endswith(",true,0") for line in lines[1:])


def test_sweep_rejects_unknown_and_grid():
    assert main(["sweep", "--checks", "nosuch"]) == 2
    assert main(["sweep", "--checks", "polid1"]) == 2


def test_sweep_class_filter(capsys):
    assert main(["sweep", "--class", "1mod5", "--pmax", "60", "--format", "jsonl"]) == 0
    out = capsys.readouterr().out
    checks = {json.loads(line)["check"] for line in out.splitlines()}
    for cid in checks:
        assert (5, 1) in get_check(cid).classes
    assert "mcong3" in checks
    assert main(["sweep", "--class", "bogus"]) == 2


def test_sweep_jobs_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["sweep", "--pmax", "200", "--format", "jsonl"]
    assert main([*args, "--jobs", "1", "--out", str(a)]) == 0
    assert main([*args, "--jobs", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_polyid(capsys):
    assert main(["polyid", "--nmax", "5"]) == 0
    out = capsys.readouterr().out
    assert "0 failures" in out
    assert main(["polyid", "--checks", "nosuch"]) == 2


def test_console_entry_and_usage_error():
    r = _run("list")
    assert r.returncode == 0 and "mcong1" in r.stdout
    r = _run("bogus-verb")
    assert r.returncode == 2
