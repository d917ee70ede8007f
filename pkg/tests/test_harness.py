import csv
import io
import json
import subprocess
import sys

import pytest

from aperylike import cli
from aperylike.congruences import REGISTRY, ClaimResult, ClaimSpec
from aperylike.exact import congruent
from aperylike.harness import (
    WORKERS_ENV,
    ConfigError,
    SuiteConfig,
    default_workers,
    from_json,
    run_suite,
    suite_tasks,
    to_csv,
    to_json,
    to_text,
)

SMALL = SuiteConfig(claims=("thm-main2", "conj-kw", "lem-rutkowski", "gen-p3r"), prime_max=13,
                    generalization_pairs=((3, 1), (3, 2)), rutkowski_n_max=3)


def _failing(claim_id, conjectural=False):
    def verify(**params):
        return ClaimResult(claim_id, params, (congruent(1, 2, 3, 1, "injected"),), conjectural)

    return verify


@pytest.fixture
def inject(monkeypatch):
    def _inject(claim_id, conjectural=False):
        spec = REGISTRY[claim_id]
        monkeypatch.setitem(REGISTRY, claim_id, ClaimSpec(claim_id, _failing(claim_id, conjectural), spec.params,
                                                          spec.summary))

    return _inject


def test_main2_sweep_gives_five_results():
    report = run_suite(SuiteConfig(claims=("thm-main2",), prime_min=3, prime_max=13))
    assert [r.params["p"] for r in report.results] == [3, 5, 7, 11, 13]
    assert report.summary == {"total": 5, "pass": 5, "fail": 0, "finding": 0}
    assert report.exit_code == 0


def test_invalid_configs():
    for bad in (dict(prime_min=2), dict(eta_order=0), dict(workers=0), dict(claims=("bogus",)),
                dict(output_format="xml"), dict(prime_min=11, prime_max=7)):
        with pytest.raises(ConfigError):
            run_suite(SuiteConfig(**bad))


def test_task_expansion():
    tasks = suite_tasks(SuiteConfig(claims=("facp", "lem5", "thm-main1"), prime_min=3, prime_max=7))
    assert ("thm-main1", {"p": 3}) not in tasks
    assert sum(1 for c, _ in tasks if c == "facp") == 5 * 3 + 7 * 4
    assert sum(1 for c, _ in tasks if c == "lem5") == 5 + 7
    assert len(suite_tasks(SuiteConfig(claims=("lem2",)))) == 20 * 11 * 11


def test_results_sorted_and_tallied():
    report = run_suite(SMALL)
    keys = [r.sort_key() for r in report.results]
    assert keys == sorted(keys)
    assert report.summary["total"] == len(report.results) == sum(
        report.summary[s] for s in ("pass", "fail", "finding")
    )


def test_json_round_trip():
    report = run_suite(SMALL)
    text = to_json(report)
    again = from_json(text)
    assert again == report
    assert to_json(again) == text
    data = json.loads(text)
    assert set(data) == {"version", "config", "results", "summary"}
    v = data["results"][0]["verdicts"][0]
    assert set(v) >= {"lhs", "rhs", "p", "m", "valuation", "holds"}
    assert "/" in v["lhs"]


def test_json_timing_is_opt_in():
    report = run_suite(SMALL)
    assert "elapsed" in json.loads(to_json(report, include_timing=True))
    assert from_json(to_json(report, include_timing=True)) == report


def test_csv_and_text():
    report = run_suite(SMALL)
    rows = list(csv.DictReader(io.StringIO(to_csv(report))))
    assert len(rows) == sum(len(r.verdicts) for r in report.results)
    assert rows[0]["claim_id"] == report.results[0].claim_id
    text = to_text(report)
    assert text.strip().splitlines()[-1].startswith(f"total {report.summary['total']}")


def test_workers_do_not_change_bytes():
    one = to_json(run_suite(SMALL))
    many = to_json(run_suite(SuiteConfig(**{**SMALL.__dict__, "workers": 4})))
    assert one == many


def test_injected_failure_sets_exit_1(inject):
    inject("thm-main2")
    report = run_suite(SuiteConfig(claims=("thm-main2", "conj-kw"), prime_max=7))
    assert report.summary["fail"] == 3
    assert report.exit_code == 1


def test_injected_finding_sets_exit_2(inject):
    inject("gen-p3r", conjectural=True)
    report = run_suite(SuiteConfig(claims=("gen-p3r", "conj-kw"), prime_max=7))
    assert report.summary["finding"] == len(SuiteConfig().generalization_pairs)
    assert report.summary["fail"] == 0
    assert report.exit_code == 2


def test_failure_outranks_finding(inject):
    inject("gen-p3r", conjectural=True)
    inject("conj-kw")
    assert run_suite(SuiteConfig(claims=("gen-p3r", "conj-kw"), prime_max=7)).exit_code == 1


def test_default_workers_env(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)
    assert default_workers() == 1
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert default_workers() == 3
    monkeypatch.setenv(WORKERS_ENV, "zero")
    with pytest.raises(ConfigError):
        default_workers()


# --------------------------------------------------------------------------
# CLI

def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm-main2", "--p", "5")
    assert code == 0 and "PASS" in out


def test_cli_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "lem-rutkowski", "--n", "1", "--j", "1", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True


def test_cli_precondition_exit_65(capsys):
    code, _, err = run_cli(capsys, "verify", "thm-main1", "--p", "3")
    assert code == 65 and "p must be a prime > 3" in err


def test_cli_usage_exit_64(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 64
    assert run_cli(capsys, "verify", "thm-main2", "--q", "5")[0] == 64
    assert run_cli(capsys, "verify", "bogus")[0] == 64
    assert run_cli(capsys, "verify", "thm-main2")[0] == 64
    assert run_cli(capsys, "sweep", "--pmin", "2", "--pmax", "5")[0] == 64
    assert run_cli(capsys, "report", "--format", "xml")[0] == 64


def test_cli_list_claims(capsys):
    code, out, _ = run_cli(capsys, "list-claims")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == list(REGISTRY)


def test_cli_eta(capsys):
    code, out, _ = run_cli(capsys, "eta", "--order", "8")
    assert code == 0 and out.strip().endswith("agree")
    assert run_cli(capsys, "eta", "--order", "0")[0] == 65


def test_cli_sweep_and_report_files(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "sweep", "--pmin", "3", "--pmax", "13", "--claims", "thm-main2")
    assert code == 0 and out.strip().splitlines()[-1].startswith("total 5: 5 pass")
    path = tmp_path / "r.json"
    code, _, _ = run_cli(capsys, "report", "--claims", "thm-main2,conj-kw", "--pmax", "11", "--out", str(path))
    assert code == 0 and from_json(path.read_text()).summary["total"] == 8
    path = tmp_path / "r.csv"
    code, _, _ = run_cli(capsys, "report", "--claims", "lem-morley", "--pmax", "11", "--format", "csv",
                         "--out", str(path))
    assert code == 0 and path.read_text().splitlines()[0].startswith("claim_id,")


def test_cli_unwritable_output(tmp_path, capsys):
    code, _, err = run_cli(capsys, "report", "--claims", "lem-morley", "--pmax", "7",
                           "--out", str(tmp_path / "missing" / "r.json"))
    assert code == 74 and "cannot write" in err


def test_cli_injected_failure(inject, capsys):
    inject("thm-main2")
    code, _, _ = run_cli(capsys, "sweep", "--claims", "thm-main2", "--pmax", "7", "--workers", "1")
    assert code == 1
    code, _, _ = run_cli(capsys, "verify", "thm-main2", "--p", "5")
    assert code == 1


def test_cli_as_module():
    proc = subprocess.run([sys.executable, "-m", "aperylike", "verify", "conj-kw", "--p", "7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "aperylike", "nope"], capture_output=True, text=True)
    assert proc.returncode == 64
