"""Command-line front end.

    aperylike verify thm-main2 --p 5
    aperylike sweep --pmin 3 --pmax 13 --claims thm-main2,conj-kw
    aperylike eta --order 30
    aperylike list-claims
    aperylike report --format json --out report.json

Exit codes: 0 all pass, 1 a proven claim failed, 2 only conjectural
findings, 64 usage error, 65 precondition violated, 74 output not writable.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .congruences import REGISTRY, ClaimError, ParameterError, PreconditionError, UnknownClaimError, run_claim
from .etaseries import parametrization_sides, verify_parametrization
from .harness import (
    EXIT_FAIL,
    EXIT_FINDING,
    EXIT_OK,
    FORMATS,
    ConfigError,
    SuiteConfig,
    default_workers,
    render,
    result_to_dict,
    run_suite,
)

EXIT_USAGE = 64
EXIT_PRECONDITION = 65
EXIT_IOERR = 74

PARAM_FLAGS = ("p", "n", "j", "k", "m", "r", "order")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _claim_list(text: str) -> tuple[str, ...]:
    return tuple(c.strip() for c in text.split(",") if c.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aperylike", description="Exact verification of J2 supercongruences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    v = sub.add_parser("verify", help="check one claim instance")
    v.add_argument("claim_id")
    for name in PARAM_FLAGS:
        v.add_argument(f"--{name}", type=int)
    v.add_argument("--format", choices=("text", "json"), default="text")

    def suite_args(sp, fmt_default):
        sp.add_argument("--pmin", type=int, default=3)
        sp.add_argument("--pmax", type=int, default=31)
        sp.add_argument("--claims", type=_claim_list, default=None, help="comma-separated claim ids")
        sp.add_argument("--eta-order", type=int, default=30)
        sp.add_argument("--workers", type=int, default=None)
        sp.add_argument("--format", choices=FORMATS, default=fmt_default)
        sp.add_argument("--out", default=None)
        sp.add_argument("--timing", action="store_true", help="print elapsed seconds to stderr")

    suite_args(sub.add_parser("sweep", help="run claims over a prime range"), "text")
    suite_args(sub.add_parser("report", help="run the default suite and write a report"), "json")

    e = sub.add_parser("eta", help="check the eta-quotient parametrization")
    e.add_argument("--order", type=int, default=30)

    sub.add_parser("list-claims", help="print the claim registry")
    return parser


def _status_code(status: str) -> int:
    return {"pass": EXIT_OK, "fail": EXIT_FAIL, "finding": EXIT_FINDING}[status]


def _cmd_verify(args) -> int:
    params = {name: getattr(args, name) for name in PARAM_FLAGS if getattr(args, name) is not None}
    result = run_claim(args.claim_id, params)
    if args.format == "json":
        import json

        print(json.dumps(result_to_dict(result), indent=2))
    else:
        print(result)
    return _status_code(result.status)


def _cmd_suite(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    kwargs = dict(
        prime_min=args.pmin,
        prime_max=args.pmax,
        eta_order=args.eta_order,
        workers=workers,
        output_format=args.format,
        output_path=args.out,
    )
    if args.claims is not None:
        kwargs["claims"] = args.claims
    config = SuiteConfig(**kwargs)
    report = run_suite(config)
    text = render(report, config.output_format)
    if config.output_path:
        try:
            with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"aperylike: cannot write {config.output_path}: {exc}", file=sys.stderr)
            return EXIT_IOERR
        s = report.summary
        print(f"{s['total']} results: {s['pass']} pass, {s['fail']} fail, {s['finding']} finding", file=sys.stderr)
    else:
        sys.stdout.write(text)
    if args.timing:
        print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return report.exit_code


def _cmd_eta(args) -> int:
    if args.order < 1:
        raise PreconditionError(f"precondition: order >= 1, got order={args.order}")
    ok = verify_parametrization(args.order)
    lhs, rhs = parametrization_sides(args.order)
    print(f"eta(2z)^22/(eta(z)^12 eta(4z)^8) through q^{args.order}:")
    print("  " + ", ".join(str(c) for c in lhs.coeffs))
    print("sum J2(n) t^n:")
    print("  " + ", ".join(str(c) for c in rhs.coeffs))
    print("agree" if ok else "DISAGREE")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_list(args) -> int:
    for spec in REGISTRY.values():
        note = f"  [{spec.conjectural_note}]" if spec.conjectural_note else ""
        print(f"{spec.claim_id:<15} ({', '.join(spec.params)})  {spec.summary}{note}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "verify": _cmd_verify,
            "sweep": _cmd_suite,
            "report": _cmd_suite,
            "eta": _cmd_eta,
            "list-claims": _cmd_list,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (UnknownClaimError, ParameterError, ConfigError) as exc:
        print(f"aperylike: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ClaimError) as exc:
        print(f"aperylike: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
