"""
Running the verification suite
==============================

Every claim is registered under a stable id; a sweep is a deterministic report.
"""

from aperylike.congruences import REGISTRY, run_claim
from aperylike.harness import SuiteConfig, run_suite, to_json, to_text

for cid, spec in REGISTRY.items():
    print(f"{cid:15s} {spec.summary}")

print(run_claim("conj-kw", {"p": 11}))

config = SuiteConfig(claims=("thm-main1", "thm-main2", "lem-morley"), prime_min=3, prime_max=23)
report = run_suite(config)
print(to_text(report))

# worker count never changes the bytes
parallel = run_suite(SuiteConfig(claims=config.claims, prime_max=23, workers=2))
print(to_json(report) == to_json(parallel))
print("exit code", report.exit_code)
