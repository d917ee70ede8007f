"""Verifiers for the supercongruences around sum J2(k)^2 and their lemmas.

Each verifier computes both sides exactly and returns a :class:`ClaimResult`
whose verdicts are p-adic checks (or exact equalities for the identities
that involve no prime).  Claims are addressed by stable string ids through
:data:`REGISTRY` and :func:`run_claim`.

Throughout, p is an odd prime and n = (p-1)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .apery import (
    HALF,
    I_f_binom,
    I_sum,
    central_weight,
    f_poly,
    g_poly,
    j2,
    j2_by_sum,
    j2_series_weight,
    lemma2_sides,
    require_odd_prime,
)
from .etaseries import parametrization_sides
from .exact import (
    CongruenceVerdict,
    binom_rat,
    congruent,
    exactly_equal,
    harmonic,
    is_prime,
    pochhammer,
)


class ClaimError(ValueError):
    pass


class UnknownClaimError(ClaimError):
    pass


class ParameterError(ClaimError):
    """Missing, unexpected or non-integer parameters."""


class PreconditionError(ClaimError):
    """Parameters are well-formed but outside the claim's stated range."""


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    params: dict[str, int]
    verdicts: tuple[CongruenceVerdict, ...]
    conjectural: bool = False

    @property
    def passed(self) -> bool:
        return all(v.holds for v in self.verdicts)

    @property
    def status(self) -> str:
        if self.passed:
            return "pass"
        return "finding" if self.conjectural else "fail"

    def sort_key(self):
        return (self.claim_id, tuple(sorted(self.params.items())))

    def __str__(self):
        ps = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"{self.claim_id}({ps}): {self.status.upper()}"]
        lines += [f"  {v}" for v in self.verdicts]
        return "\n".join(lines)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _prime_above_3(p: int) -> int:
    if not is_prime(p) or p <= 3:
        raise PreconditionError(f"precondition: p must be a prime > 3, got p={p}")
    return (p - 1) // 2


def _odd_prime(p: int) -> int:
    if not is_prime(p) or p < 3:
        raise PreconditionError(f"precondition: p must be a prime >= 3, got p={p}")
    return (p - 1) // 2


def _rutkowski_sum(n: int, j: int) -> Fraction:
    """sum_k (-1)^k / (j+k+1) binom(n,k) binom(n+k,k)."""
    return sum(
        (Fraction(_sign(k) * central_weight(n, k), j + k + 1) for k in range(n + 1)),
        Fraction(0),
    )


def _harmonic_sum(n: int, j: int) -> Fraction:
    """sum_k binom(n,k) binom(n+k,k) (-1)^k (H_k - H_j) / (j+k+1)."""
    hj = harmonic(j)
    return sum(
        (_sign(k) * central_weight(n, k) * (harmonic(k) - hj) / (j + k + 1) for k in range(n + 1)),
        Fraction(0),
    )


# --------------------------------------------------------------------------
# main results

def verify_main1(p: int) -> ClaimResult:
    """sum_{x<p} 3F2((1-p)/2, (1+p)/2, -x; 1, 1; 1)^2 == (-1)^n (mod p^3), p > 3."""
    n = _prime_above_3(p)
    lhs = I_sum(f_poly(n) ** 2, p)
    return ClaimResult("thm-main1", {"p": p}, (congruent(lhs, _sign(n), p, 3, "I(f_n^2)"),))


def verify_main2(p: int) -> ClaimResult:
    """sum_{x<p} 3F2(1/2, 1/2, -x; 1, 1; 1)^2 == (-1)^n (mod p^3), via I(g^2)."""
    n = _odd_prime(p)
    lhs = I_sum(g_poly(p) ** 2, p)
    return ClaimResult("thm-main2", {"p": p}, (congruent(lhs, _sign(n), p, 3, "I(g^2)"),))


def kw_conjecture_lhs(p: int) -> Fraction:
    return sum((j2_by_sum(k) ** 2 for k in range(p)), Fraction(0))


def verify_kw_conjecture(p: int) -> ClaimResult:
    """sum_{k<p} J2(k)^2 == (-1)^n (mod p^3), from the defining sums."""
    n = _odd_prime(p)
    lhs = kw_conjecture_lhs(p)
    return ClaimResult("conj-kw", {"p": p}, (congruent(lhs, _sign(n), p, 3, "sum J2(k)^2"),))


def verify_kw_theorem62(p: int, m: int, r: int) -> ClaimResult:
    """J2(m p^r) == J2(m p^(r-1)) (mod p^r)."""
    _odd_prime(p)
    if m < 1 or r < 1:
        raise PreconditionError(f"precondition: m, r >= 1, got m={m}, r={r}")
    v = congruent(j2(m * p**r), j2(m * p ** (r - 1)), p, r, f"J2({m}*{p}^{r}) vs J2({m}*{p}^{r - 1})")
    return ClaimResult("kw-thm62", {"p": p, "m": m, "r": r}, (v,))


def verify_generalization(p: int, r: int) -> ClaimResult:
    """sum_{x<p^r} J2(x)^2 == (-1)^n sum_{x<p^(r-1)} J2(x)^2 (mod p^(3r)).

    Only r = 1 is a theorem; for r >= 2 the result is flagged conjectural,
    so a failure is reported as a finding.
    """
    n = _odd_prime(p)
    if r < 1:
        raise PreconditionError(f"precondition: r >= 1, got r={r}")
    squares = [j2_by_sum(x) ** 2 for x in range(p**r)]
    lhs = sum(squares, Fraction(0))
    rhs = _sign(n) * sum(squares[: p ** (r - 1)], Fraction(0))
    v = congruent(lhs, rhs, p, 3 * r, f"sum_(x<{p}^{r}) J2(x)^2")
    return ClaimResult("gen-p3r", {"p": p, "r": r}, (v,), conjectural=r >= 2)


# --------------------------------------------------------------------------
# reduction steps and lemmas

def verify_eq_three(p: int) -> ClaimResult:
    """I(f_n g) == I(f_n^2) (mod p^3), plus the coefficient congruences
    (-1)^j binom(-1/2, j)^2 == binom(n,j) binom(n+j,j) (mod p^2), j <= n."""
    n = _prime_above_3(p)
    f = f_poly(n)
    verdicts = [congruent(I_sum(f * g_poly(p), p), I_sum(f * f, p), p, 3, "I(f_n g) vs I(f_n^2)")]
    for j in range(n + 1):
        verdicts.append(congruent(j2_series_weight(j), central_weight(n, j), p, 2, f"coeff j={j}"))
    return ClaimResult("eq-three", {"p": p}, tuple(verdicts))


def verify_lem5(p: int, j: int) -> ClaimResult:
    """Congruences for I(f_n(x) binom(x, j)): mod p^2 for every j, and the
    refined mod p^3 forms for j < n and j = n."""
    n = _prime_above_3(p)
    if not 0 <= j <= p - 1:
        raise PreconditionError(f"precondition: 0 <= j <= p-1, got j={j}")
    direct, _ = I_f_binom(n, j, p)
    sign = _sign(n + j)
    hsum = _harmonic_sum(n, j)
    allj = sign * (p * _rutkowski_sum(n, j) + p * p * hsum)
    verdicts = [congruent(direct, allj, p, 2, "all j")]
    if j < n:
        verdicts.append(congruent(direct, sign * p * p * hsum, p, 3, "j<n"))
    elif j == n:
        lead = Fraction(_sign(n), math.comb(2 * n, n))
        verdicts.append(congruent(direct, lead + p * p * hsum, p, 3, "j=n"))
    return ClaimResult("lem5", {"p": p, "j": j}, tuple(verdicts))


def verify_facp(p: int, j: int, k: int) -> ClaimResult:
    """(p-j)_{j+k+1} / (j! k!) == p (-1)^j (1 + p (H_k - H_j)) (mod p^3)."""
    n = _prime_above_3(p)
    if not (0 <= j <= p - 1 and 0 <= k <= n):
        raise PreconditionError(f"precondition: 0 <= j <= p-1, 0 <= k <= n, got j={j}, k={k}")
    lhs = pochhammer(p - j, j + k + 1) / (math.factorial(j) * math.factorial(k))
    rhs = p * _sign(j) * (1 + p * (harmonic(k) - harmonic(j)))
    verdicts = [congruent(lhs, rhs, p, 3, "facp")]
    if j == k == n:
        lhs_n = pochhammer(p - n, 2 * n + 1) / math.factorial(n) ** 2
        verdicts.append(congruent(lhs_n, p * _sign(n), p, 3, "k=n"))
    return ClaimResult("facp", {"p": p, "j": j, "k": k}, tuple(verdicts))


def verify_rutkowski(n: int, j: int) -> ClaimResult:
    """sum_k (-1)^k/(j+k+1) binom(n+k,k) binom(n,k) is 0 for j < n and
    (-1)^n / ((2n+1) binom(2n,n)) for j = n.  Exact."""
    if n < 1 or not 0 <= j <= n:
        raise PreconditionError(f"precondition: n >= 1 and 0 <= j <= n, got n={n}, j={j}")
    target = Fraction(0) if j < n else Fraction(_sign(n), (2 * n + 1) * math.comb(2 * n, n))
    label = "j<n" if j < n else "j=n"
    return ClaimResult("lem-rutkowski", {"n": n, "j": j}, (exactly_equal(_rutkowski_sum(n, j), target, label),))


def verify_morley(p: int) -> ClaimResult:
    """binom(-1/2, n)^2 == (-1)^n binom(2n, n) (mod p^3)."""
    n = _prime_above_3(p)
    v = congruent(binom_rat(-HALF, n) ** 2, _sign(n) * math.comb(2 * n, n), p, 3, "Morley")
    return ClaimResult("lem-morley", {"p": p}, (v,))


def verify_lem7(p: int) -> ClaimResult:
    """p sum_{j=n+1}^{p-1} binom(-1/2,j)^2 sum_k (-1)^k/(j+k+1) binom(n,k) binom(n+k,k)
    == 0 (mod p^3), together with sum_{i<=n} 1/i^2 == 0 (mod p)."""
    n = _prime_above_3(p)
    double = p * sum(
        (binom_rat(-HALF, j) ** 2 * _rutkowski_sum(n, j) for j in range(n + 1, p)),
        Fraction(0),
    )
    inv_squares = sum((Fraction(1, i * i) for i in range(1, n + 1)), Fraction(0))
    return ClaimResult(
        "lem7",
        {"p": p},
        (congruent(double, 0, p, 3, "tail double sum"), congruent(inv_squares, 0, p, 1, "sum 1/i^2")),
    )


def split_summand(n: int, j: int, k: int) -> Fraction:
    return (
        central_weight(n, j) * central_weight(n, k) * _sign(j + k) * (harmonic(k) - harmonic(j)) / (j + k + 1)
    )


def split_double_sum(n: int) -> Fraction:
    return sum((split_summand(n, j, k) for j in range(n + 1) for k in range(n + 1)), Fraction(0))


def verify_split_symmetry(p: int) -> ClaimResult:
    """The harmonic double sum S vanishes exactly, and
    I(f_n^2) == (-1)^n + p^2 (-1)^n S (mod p^3)."""
    n = _prime_above_3(p)
    s = split_double_sum(n)
    lhs = I_sum(f_poly(n) ** 2, p)
    return ClaimResult(
        "split-symmetry",
        {"p": p},
        (exactly_equal(s, 0, "symmetric sum"), congruent(lhs, _sign(n) * (1 + p * p * s), p, 3, "split")),
    )


def verify_lem2(m: int, j: int, k: int) -> ClaimResult:
    """sum_{x<m} (x-j+1)_{j+k} = (m-j)_{j+k+1} / (j+k+1).  Exact."""
    if m < 1 or j < 0 or k < 0:
        raise PreconditionError(f"precondition: m >= 1 and j, k >= 0, got m={m}, j={j}, k={k}")
    lhs, rhs = lemma2_sides(m, j, k)
    return ClaimResult("lem2", {"m": m, "j": j, "k": k}, (exactly_equal(lhs, rhs, "lem2"),))


def verify_cor4(m: int, j: int, p: int) -> ClaimResult:
    """I(f_m(x) binom(x, j)) equals its closed form.  Exact."""
    require_odd_prime_claim(p)
    if m < 1 or j < 0:
        raise PreconditionError(f"precondition: m >= 1 and j >= 0, got m={m}, j={j}")
    direct, closed = I_f_binom(m, j, p)
    return ClaimResult("cor4", {"m": m, "j": j, "p": p}, (exactly_equal(direct, closed, "cor4"),))


def verify_eta_parametrization(order: int) -> ClaimResult:
    """Coefficient-wise equality of the eta quotient and sum J2(n) t^n
    through q^order, plus integrality of the eta side."""
    if order < 1:
        raise PreconditionError(f"precondition: order >= 1, got order={order}")
    lhs, rhs = parametrization_sides(order)
    verdicts = [exactly_equal(lhs[i], rhs[i], f"q^{i}") for i in range(order + 1)]
    den = math.lcm(*(c.denominator for c in lhs.coeffs))
    verdicts.append(exactly_equal(den, 1, "common denominator"))
    return ClaimResult("eta-param", {"order": order}, tuple(verdicts))


def require_odd_prime_claim(p: int) -> None:
    try:
        require_odd_prime(p)
    except ValueError as exc:
        raise PreconditionError(f"precondition: p must be an odd prime, got p={p}") from exc


# --------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    func: Callable[..., ClaimResult]
    params: tuple[str, ...]
    summary: str
    conjectural_note: str = field(default="")


REGISTRY: dict[str, ClaimSpec] = {
    c.claim_id: c
    for c in (
        ClaimSpec("thm-main1", verify_main1, ("p",), "I(f_n^2) == (-1)^n mod p^3, p > 3"),
        ClaimSpec("thm-main2", verify_main2, ("p",), "sum_{x<p} 3F2(1/2,1/2,-x;1,1;1)^2 == (-1)^n mod p^3"),
        ClaimSpec("conj-kw", verify_kw_conjecture, ("p",), "sum_{k<p} J2(k)^2 == (-1)^n mod p^3"),
        ClaimSpec("kw-thm62", verify_kw_theorem62, ("p", "m", "r"), "J2(m p^r) == J2(m p^(r-1)) mod p^r"),
        ClaimSpec(
            "gen-p3r",
            verify_generalization,
            ("p", "r"),
            "sum_{x<p^r} J2(x)^2 == (-1)^n sum_{x<p^(r-1)} J2(x)^2 mod p^(3r)",
            "conjectural for r >= 2",
        ),
        ClaimSpec("eq-three", verify_eq_three, ("p",), "I(f_n g) == I(f_n^2) mod p^3; coefficients mod p^2"),
        ClaimSpec("lem5", verify_lem5, ("p", "j"), "I(f_n binom(x,j)) congruences mod p^2 / p^3"),
        ClaimSpec("facp", verify_facp, ("p", "j", "k"), "(p-j)_{j+k+1}/(j!k!) == p(-1)^j(1+p(H_k-H_j)) mod p^3"),
        ClaimSpec("lem-rutkowski", verify_rutkowski, ("n", "j"), "Rutkowski sums, exact"),
        ClaimSpec("lem-morley", verify_morley, ("p",), "binom(-1/2,n)^2 == (-1)^n binom(2n,n) mod p^3"),
        ClaimSpec("lem7", verify_lem7, ("p",), "tail double sum == 0 mod p^3; sum 1/i^2 == 0 mod p"),
        ClaimSpec("split-symmetry", verify_split_symmetry, ("p",), "symmetric harmonic sum = 0; split congruence"),
        ClaimSpec("lem2", verify_lem2, ("m", "j", "k"), "sum_{x<m} (x-j+1)_{j+k} = (m-j)_{j+k+1}/(j+k+1)"),
        ClaimSpec("cor4", verify_cor4, ("m", "j", "p"), "I(f_m binom(x,j)) closed form, exact"),
        ClaimSpec("eta-param", verify_eta_parametrization, ("order",), "eta quotient = sum J2(n) t^n through q^order"),
    )
}


def run_claim(claim_id: str, parameters: Mapping[str, int]) -> ClaimResult:
    try:
        spec = REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaimError(f"unknown claim {claim_id!r}; known: {', '.join(REGISTRY)}") from None
    given = set(parameters)
    missing = [name for name in spec.params if name not in given]
    extra = sorted(given - set(spec.params))
    if missing or extra:
        raise ParameterError(
            f"{claim_id} takes parameters {', '.join(spec.params)}"
            + (f"; missing {', '.join(missing)}" if missing else "")
            + (f"; unexpected {', '.join(extra)}" if extra else "")
        )
    kwargs = {}
    for name in spec.params:
        value = parameters[name]
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParameterError(f"{claim_id}: parameter {name} must be an integer, got {value!r}")
        kwargs[name] = value
    return spec.func(**kwargs)
