import json
import subprocess
import sys
from pathlib import Path

import pytest

from uslab.cli import main
from uslab.reports import SUITES, ConfigError, Report, SuiteConfig, UnknownSuiteError, run_suite, save_report

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("suite", SUITES)
def test_golden_reports(suite, tmp_path, capsys):
    out = tmp_path / f"{suite}.json"
    assert main(["--suite", suite, "--n", "2", "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / f"{suite}.json").read_bytes()
    checks = json.loads(out.read_text())["checks"]
    assert checks and all(c["status"] == "pass" for c in checks)
    assert [c["check_name"] for c in checks] == sorted(c["check_name"] for c in checks)


def test_golden_text_report(capsys):
    assert main(["--suite", "quiver", "--n", "2", "--format", "text"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "quiver.txt").read_text()


def test_report_schema():
    report = run_suite(SuiteConfig(suite="quiver", n=2))
    data = report.to_json()
    assert set(data) == {"suite", "config", "checks"}
    for c in data["checks"]:
        assert set(c) == {"check_name", "anchor", "status", "witness", "elapsed"}
        assert c["status"] in {"pass", "fail", "skipped"}


def test_determinism():
    cfg = SuiteConfig(suite="tensor-decomposition", n=2, seed=3)
    assert run_suite(cfg).render() == run_suite(cfg).render()


def test_w_membership_n3():
    report = run_suite(SuiteConfig(suite="w-membership", n=3))
    assert not report.failed and all(c["status"] == "pass" for c in report.checks)


def test_pi_chain_n2():
    report = run_suite(SuiteConfig(suite="pi-chain", n=2, degree=4))
    assert all(c["status"] == "pass" for c in report.checks)


def test_cuspidal_integral_mu_is_skipped(capsys):
    assert main(["--suite", "cuspidal-scan", "--n", "2", "--mu", "1,0"]) == 0
    checks = {c["check_name"]: c for c in json.loads(capsys.readouterr().out)["checks"]}
    for k in (0, 1):
        c = checks[f"n=2 mu=(1,0) injectivity on G1(L_{k})"]
        assert c["status"] == "skipped"
        assert c["witness"]["precondition-violation"] == "no-int1"
    # the one-dimensional module only needs c/3 + mu_i and c/3 - |mu| non-integral
    assert checks["n=2 mu=(1,0) c=1/2 injectivity on G1(V'_c)"]["status"] == "pass"


def test_precondition_failure_for_no_int2_is_skipped(capsys):
    assert main(["--suite", "cuspidal-scan", "--n", "2", "--c", "1/2", "--mu=-1/6,1/7"]) == 0
    checks = {c["check_name"]: c for c in json.loads(capsys.readouterr().out)["checks"]}
    c = checks["n=2 mu=(-1/6,1/7) c=1/2 injectivity on G1(V'_c)"]
    assert c["status"] == "skipped" and c["witness"]["precondition-violation"] == "no-int2"


def test_failing_check_gives_exit_one(monkeypatch, capsys):
    from uslab import reports

    monkeypatch.setattr(reports, "enumerate_simples", lambda n: [reports.QuiverRep.zero(n, (1,) * n)] * n)
    assert main(["--suite", "quiver", "--n", "2"]) == 1
    checks = json.loads(capsys.readouterr().out)["checks"]
    failed = [c for c in checks if c["status"] == "fail"]
    assert len(failed) == 1 and failed[0]["witness"] is not None


def test_crashing_check_is_a_failure(monkeypatch, capsys):
    from uslab import reports

    def boom(n):
        raise RuntimeError("kaput")

    monkeypatch.setattr(reports, "enumerate_simples", boom)
    assert main(["--suite", "quiver", "--n", "2"]) == 1
    checks = json.loads(capsys.readouterr().out)["checks"]
    (bad,) = [c for c in checks if c["status"] == "fail"]
    assert bad["witness"] == {"error": "RuntimeError", "message": "kaput"}


def test_timing_flag(capsys):
    assert main(["--suite", "quiver", "--n", "2", "--timing"]) == 0
    checks = json.loads(capsys.readouterr().out)["checks"]
    assert all(isinstance(c["elapsed"], float) for c in checks)


@pytest.mark.parametrize("argv", [
    ["--suite", "nope"],
    ["--n", "5"],
    ["--n", "2", "--mu", "1/2"],
    ["--n", "2", "--c", "1/0"],
    ["--degree", "-1"],
])
def test_config_errors_exit_two(argv, capsys):
    assert main(argv) == 2
    assert "uslab: error" in capsys.readouterr().err


def test_config_exceptions():
    with pytest.raises(UnknownSuiteError):
        SuiteConfig(suite="nope")
    with pytest.raises(ConfigError):
        SuiteConfig(n=9)
    assert SuiteConfig(n=5, max_n=6).n == 5


def test_save_report(tmp_path):
    report = Report("x", {"n": 2}, [{"check_name": "b", "anchor": "a", "status": "fail", "witness": [1],
                                     "elapsed": None}])
    assert report.failed
    save_report(report, tmp_path / "r.txt", "text")
    text = (tmp_path / "r.txt").read_text()
    assert "fail    b  [a]" in text and "witness: [1]" in text and "0/1 passed" in text


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "uslab.cli", "--suite", "quiver", "--n", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["config"]["n"] == 3
