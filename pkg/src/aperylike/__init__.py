"""Exact computation of the Apery-like numbers J2(n) and verification of the
supercongruences for sum J2(k)^2, their lemmas and the eta-quotient
parametrization of the generating function."""

__version__ = "0.1.0"

from .apery import (  # noqa: E402
    I_f_binom,
    I_sum,
    f_poly,
    g_poly,
    h_poly,
    j2,
    j2_by_3f2,
    j2_by_recurrence,
    j2_by_sum,
)
from .congruences import REGISTRY, ClaimResult, run_claim  # noqa: E402
from .etaseries import PSeries, eta_quotient_series, t_series, verify_parametrization  # noqa: E402
from .exact import CongruenceVerdict, binom_rat, congruent, harmonic, pochhammer, primes_in, vp  # noqa: E402
from .hypergeom import HypParams, hyp, terminating_pfq, truncated_pfq  # noqa: E402
from .poly import Poly  # noqa: E402

__all__ = [
    "CongruenceVerdict",
    "ClaimResult",
    "HypParams",
    "I_f_binom",
    "I_sum",
    "PSeries",
    "Poly",
    "REGISTRY",
    "binom_rat",
    "congruent",
    "eta_quotient_series",
    "f_poly",
    "g_poly",
    "h_poly",
    "harmonic",
    "hyp",
    "j2",
    "j2_by_3f2",
    "j2_by_recurrence",
    "j2_by_sum",
    "pochhammer",
    "primes_in",
    "run_claim",
    "t_series",
    "terminating_pfq",
    "truncated_pfq",
    "verify_parametrization",
    "vp",
]
