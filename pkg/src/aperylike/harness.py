"""Parameter sweeps over the claim registry and deterministic reports.

A suite expands into independent ``(claim_id, params)`` tasks, evaluates
them (optionally in a process pool) and sorts the results, so the report is
the same byte for byte whatever the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from . import __version__
from .congruences import REGISTRY, ClaimResult, run_claim
from .exact import INF, CongruenceVerdict, primes_in

WORKERS_ENV = "APERYLIKE_WORKERS"
FORMATS = ("json", "csv", "text")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_FINDING = 2


class ConfigError(ValueError):
    pass


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ConfigError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    return n


@dataclass(frozen=True)
class SuiteConfig:
    claims: tuple[str, ...] = tuple(REGISTRY)
    prime_min: int = 3
    prime_max: int = 31
    generalization_pairs: tuple[tuple[int, int], ...] = ((3, 1), (3, 2), (3, 3), (5, 2), (7, 2))
    eta_order: int = 30
    kw_multipliers: tuple[int, ...] = (1, 2, 3)
    kw_exponents: tuple[int, ...] = (1, 2)
    lem2_m_max: int = 20
    lem2_jk_max: int = 10
    cor4_m_max: int = 8
    cor4_j_max: int = 10
    cor4_prime_max: int = 11
    rutkowski_n_max: int = 20
    workers: int = 1
    output_format: str = "json"
    output_path: str | None = None

    def validate(self) -> None:
        unknown = [c for c in self.claims if c not in REGISTRY]
        if unknown:
            raise ConfigError(f"unknown claims: {', '.join(unknown)}")
        if self.prime_min < 3:
            raise ConfigError(f"prime_min must be >= 3, got {self.prime_min}")
        if self.prime_max < self.prime_min:
            raise ConfigError(f"prime_max ({self.prime_max}) < prime_min ({self.prime_min})")
        if self.eta_order < 1:
            raise ConfigError(f"eta_order must be >= 1, got {self.eta_order}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"output_format must be one of {FORMATS}, got {self.output_format!r}")

    def echo(self) -> dict[str, Any]:
        """Config fields that determine report content (no scheduling or I/O)."""
        d = asdict(self)
        for key in ("workers", "output_format", "output_path"):
            del d[key]
        d["claims"] = list(self.claims)
        d["generalization_pairs"] = [list(pr) for pr in self.generalization_pairs]
        for key in ("kw_multipliers", "kw_exponents"):
            d[key] = list(d[key])
        return d


def suite_tasks(config: SuiteConfig) -> list[tuple[str, dict[str, int]]]:
    """Every (claim, parameters) instance the config asks for."""
    primes = primes_in(config.prime_min, config.prime_max)
    big = [p for p in primes if p > 3]
    tasks: list[tuple[str, dict[str, int]]] = []
    for cid in config.claims:
        if cid in ("thm-main2", "conj-kw"):
            tasks += [(cid, {"p": p}) for p in primes]
        elif cid in ("thm-main1", "eq-three", "lem-morley", "lem7", "split-symmetry"):
            tasks += [(cid, {"p": p}) for p in big]
        elif cid == "kw-thm62":
            tasks += [
                (cid, {"p": p, "m": m, "r": r})
                for p in primes
                for m in config.kw_multipliers
                for r in config.kw_exponents
            ]
        elif cid == "gen-p3r":
            tasks += [(cid, {"p": p, "r": r}) for p, r in config.generalization_pairs]
        elif cid == "lem5":
            tasks += [(cid, {"p": p, "j": j}) for p in big for j in range(p)]
        elif cid == "facp":
            tasks += [
                (cid, {"p": p, "j": j, "k": k}) for p in big for j in range(p) for k in range((p - 1) // 2 + 1)
            ]
        elif cid == "lem-rutkowski":
            tasks += [(cid, {"n": n, "j": j}) for n in range(1, config.rutkowski_n_max + 1) for j in range(n + 1)]
        elif cid == "lem2":
            r = range(config.lem2_jk_max + 1)
            tasks += [(cid, {"m": m, "j": j, "k": k}) for m in range(1, config.lem2_m_max + 1) for j in r for k in r]
        elif cid == "cor4":
            tasks += [
                (cid, {"m": m, "j": j, "p": p})
                for p in primes
                if p <= config.cor4_prime_max
                for m in range(1, config.cor4_m_max + 1)
                for j in range(config.cor4_j_max + 1)
            ]
        elif cid == "eta-param":
            tasks.append((cid, {"order": config.eta_order}))
    return tasks


def _evaluate(task: tuple[str, dict[str, int]]) -> ClaimResult:
    return run_claim(*task)


@dataclass(frozen=True)
class VerificationReport:
    tool_version: str
    config: dict[str, Any]
    results: tuple[ClaimResult, ...]
    summary: dict[str, int] = field(default_factory=dict)
    elapsed: float | None = field(default=None, compare=False)

    @property
    def exit_code(self) -> int:
        if self.summary.get("fail", 0):
            return EXIT_FAIL
        if self.summary.get("finding", 0):
            return EXIT_FINDING
        return EXIT_OK


def tally(results: Iterable[ClaimResult]) -> dict[str, int]:
    counts = {"total": 0, "pass": 0, "fail": 0, "finding": 0}
    for r in results:
        counts["total"] += 1
        counts[r.status] += 1
    return counts


def run_suite(config: SuiteConfig) -> VerificationReport:
    config.validate()
    tasks = suite_tasks(config)
    start = time.perf_counter()
    if config.workers == 1 or len(tasks) < 2:
        results = [_evaluate(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (config.workers * 8))
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=chunk))
    results.sort(key=ClaimResult.sort_key)
    return VerificationReport(
        tool_version=__version__,
        config=config.echo(),
        results=tuple(results),
        summary=tally(results),
        elapsed=time.perf_counter() - start,
    )


# --------------------------------------------------------------------------
# serialization

def _rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _val_out(v):
    if v is None:
        return None
    return "inf" if v == INF else v


def _val_in(v):
    if v is None:
        return None
    return INF if v == "inf" else int(v)


def verdict_to_dict(v: CongruenceVerdict) -> dict[str, Any]:
    return {
        "label": v.label,
        "lhs": _rat_str(v.lhs),
        "rhs": _rat_str(v.rhs),
        "p": v.prime,
        "m": v.exponent,
        "valuation": _val_out(v.diff_valuation),
        "holds": v.holds,
    }


def verdict_from_dict(d: dict[str, Any]) -> CongruenceVerdict:
    return CongruenceVerdict(
        lhs=Fraction(d["lhs"]),
        rhs=Fraction(d["rhs"]),
        prime=d["p"],
        exponent=d["m"],
        diff_valuation=_val_in(d["valuation"]),
        holds=d["holds"],
        label=d.get("label", ""),
    )


def result_to_dict(r: ClaimResult) -> dict[str, Any]:
    return {
        "claim_id": r.claim_id,
        "params": dict(sorted(r.params.items())),
        "status": r.status,
        "passed": r.passed,
        "conjectural": r.conjectural,
        "verdicts": [verdict_to_dict(v) for v in r.verdicts],
    }


def result_from_dict(d: dict[str, Any]) -> ClaimResult:
    return ClaimResult(
        d["claim_id"],
        {k: int(v) for k, v in d["params"].items()},
        tuple(verdict_from_dict(v) for v in d["verdicts"]),
        d.get("conjectural", False),
    )


def report_to_dict(report: VerificationReport, include_timing: bool = False) -> dict[str, Any]:
    d = {
        "version": report.tool_version,
        "config": report.config,
        "results": [result_to_dict(r) for r in report.results],
        "summary": report.summary,
    }
    if include_timing:
        d["elapsed"] = report.elapsed
    return d


def report_from_dict(d: dict[str, Any]) -> VerificationReport:
    return VerificationReport(
        tool_version=d["version"],
        config=d["config"],
        results=tuple(result_from_dict(r) for r in d["results"]),
        summary=d["summary"],
        elapsed=d.get("elapsed"),
    )


def to_json(report: VerificationReport, include_timing: bool = False) -> str:
    return json.dumps(report_to_dict(report, include_timing), indent=2) + "\n"


def from_json(text: str) -> VerificationReport:
    return report_from_dict(json.loads(text))


CSV_FIELDS = ("claim_id", "params", "status", "label", "lhs", "rhs", "p", "m", "valuation", "holds")


def to_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in report.results:
        params = ";".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        for v in r.verdicts:
            d = verdict_to_dict(v)
            w.writerow(
                [r.claim_id, params, r.status, d["label"], d["lhs"], d["rhs"],
                 "" if d["p"] is None else d["p"], "" if d["m"] is None else d["m"],
                 "" if d["valuation"] is None else d["valuation"], d["holds"]]
            )
    return buf.getvalue()


def to_text(report: VerificationReport, verbose: bool = False) -> str:
    lines = [f"aperylike {report.tool_version}"]
    for r in report.results:
        if verbose or not r.passed:
            lines.append(str(r))
        else:
            ps = ", ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            lines.append(f"{r.claim_id}({ps}): PASS")
    s = report.summary
    lines.append(f"total {s['total']}: {s['pass']} pass, {s['fail']} fail, {s['finding']} finding")
    return "\n".join(lines) + "\n"


def render(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ConfigError(f"unknown format {fmt!r}")
