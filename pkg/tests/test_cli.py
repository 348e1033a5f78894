"""The command line front end: exit codes, formats, output files."""

import dataclasses
import json
import subprocess
import sys

import equilef.cli as cli
from equilef.engine import full_verification
from equilef.scenarios import builtin_names, builtin_scenario

RUN = [sys.executable, "-c", "from equilef.cli import main; raise SystemExit(main())"]

VALID_FILE = {
    "schema_version": 1,
    "name": "segment-swap",
    "group": {"degree": 2, "generators": [[1, 0]]},
    "complex": {
        "vertices": 2,
        "maximal_simplices": [[0, 1]],
        "action": [[1, 0]],
    },
    "lattice": {"rank": 1, "action": {"0": [[1]]}},
}


def run_cli(*args, **kwargs):
    return subprocess.run(
        RUN + list(args), capture_output=True, text=True, **kwargs
    )


def test_verify_builtin_text():
    result = run_cli("verify", "square-reflection")
    assert result.returncode == 0, result.stderr
    assert "square-reflection" in result.stdout
    assert "pass" in result.stdout


def test_verify_builtin_json():
    result = run_cli("verify", "point-c2", "--format", "json")
    assert result.returncode == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["scenario"] == "point-c2"
    assert payload["passed"] is True
    assert payload["characters"]["lhs"] == [
        {"num": "1", "den": "1"},
        {"num": "1", "den": "1"},
    ]


def test_verify_unknown_name_is_an_input_error():
    result = run_cli("verify", "no-such-scenario")
    assert result.returncode == 2
    assert "no-such-scenario" in result.stderr
    # the error names at least one real scenario to point the user somewhere
    assert "square-reflection" in result.stderr


def test_verify_scenario_file(tmp_path):
    path = tmp_path / "swap.json"
    path.write_text(json.dumps(VALID_FILE))
    result = run_cli("verify", str(path))
    assert result.returncode == 0, result.stderr
    assert "segment-swap" in result.stdout


def test_malformed_file_is_an_input_error(tmp_path):
    path = tmp_path / "broken.json"
    bad = dict(VALID_FILE, lattice={"rank": 1, "action": {"0": [[2]]}})
    path.write_text(json.dumps(bad))
    result = run_cli("verify", str(path))
    assert result.returncode == 2
    assert "$.lattice.action[0]" in result.stderr


def test_out_flag_writes_file(tmp_path):
    out = tmp_path / "report.json"
    result = run_cli("verify", "point-trivial", "--format", "json", "--out", str(out))
    assert result.returncode == 0, result.stderr
    payload = json.loads(out.read_text())
    assert payload["scenario"] == "point-trivial"


def test_prime_override():
    result = run_cli(
        "verify", "projective-plane", "--format", "json", "--prime", "7",
        "--prime", "11",
    )
    assert result.returncode == 0, result.stderr
    payload = json.loads(result.stdout)
    primes = [row["prime"] for row in payload["verdicts"]["modp"]]
    assert primes == [7, 11]


def test_timings_flag():
    plain = run_cli("verify", "point-c2", "--format", "json")
    timed = run_cli("verify", "point-c2", "--format", "json", "--timings")
    assert "timings" not in json.loads(plain.stdout)
    assert "timings" in json.loads(timed.stdout)


def test_chartab():
    result = run_cli("chartab", "triangle-s3")
    assert result.returncode == 0, result.stderr
    assert "chi_" in result.stdout
    as_json = run_cli("chartab", "hexagon-rot3", "--format", "json")
    payload = json.loads(as_json.stdout)
    assert payload["group_order"] == 3


def test_strata():
    result = run_cli("strata", "octahedron-klein4", "--format", "json")
    assert result.returncode == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["scenario"] == "octahedron-klein4"
    assert len(payload["subgroup_classes"]) == 5


def test_corpus_runs_everything():
    result = run_cli("corpus")
    assert result.returncode == 0, result.stderr
    total = len(builtin_names())
    assert f"{total}/{total} scenarios passed" in result.stdout
    for name in builtin_names():
        assert name in result.stdout


def test_corpus_json():
    result = run_cli("corpus", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert len(payload["scenarios"]) == len(builtin_names())


def test_verification_failure_exit_code(monkeypatch, capsys):
    # force a failing theorem verdict through the reporting path
    summary = full_verification(builtin_scenario("point-trivial"))
    broken = dataclasses.replace(
        summary, theorem=dataclasses.replace(summary.theorem, passed=False)
    )
    monkeypatch.setattr(cli, "full_verification", lambda s: broken)
    code = cli.main(["verify", "point-trivial"])
    assert code == 1
    out = capsys.readouterr().out
    assert "FAIL" in out or "MISMATCH" in out


def test_no_arguments_shows_usage():
    result = run_cli()
    assert result.returncode == 2
    assert "usage" in (result.stderr + result.stdout).lower()
