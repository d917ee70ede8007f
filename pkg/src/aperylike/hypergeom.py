"""Exact terminating and truncated generalized hypergeometric series.

    pFq(a_1..a_{r+1}; b_1..b_r; z) = sum_k prod (a_i)_k / prod (b_i)_k * z**k / k!

All parameters are rationals.  A series is summed only over its finite
range, so ``z = 1`` is fine whenever it terminates (or a truncation bound is
given).  Denominator poles that lie past the last summed term are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import RatLike, pochhammer, rat


class HypergeometricError(ValueError):
    pass


class NonTerminatingError(HypergeometricError):
    pass


class ParameterPoleError(HypergeometricError):
    pass


@dataclass(frozen=True)
class HypParams:
    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]
    argument: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(rat(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(rat(b) for b in self.denominator))
        object.__setattr__(self, "argument", rat(self.argument))

    def termination_index(self) -> int | None:
        """Smallest N such that some numerator parameter equals -N."""
        ns = [-int(a) for a in self.numerator if a.denominator == 1 and a <= 0]
        return min(ns) if ns else None


def hyp(numerator: Sequence[RatLike], denominator: Sequence[RatLike], z: RatLike = 1) -> HypParams:
    return HypParams(tuple(numerator), tuple(denominator), rat(z))


def _partial_sum(params: HypParams, upper: int) -> Fraction:
    term = Fraction(1)
    total = Fraction(1)
    z = params.argument
    for k in range(upper):
        num = Fraction(1)
        for a in params.numerator:
            num *= a + k
        if not num:
            break
        den = Fraction(k + 1)
        for b in params.denominator:
            if b + k == 0:
                raise ParameterPoleError(
                    f"parameter pole: denominator parameter {b} vanishes at k={k + 1}"
                )
            den *= b + k
        term = term * num * z / den
        total += term
    return total


def terminating_pfq(params: HypParams) -> Fraction:
    """Exact value of a series with a nonpositive-integer numerator parameter."""
    n = params.termination_index()
    if n is None:
        raise NonTerminatingError(f"non-terminating: no numerator parameter in {{0, -1, -2, ...}}: {params}")
    return _partial_sum(params, n)


def truncated_pfq(params: HypParams, upper: int) -> Fraction:
    """Partial sum over k = 0..upper inclusive."""
    if upper < 0:
        raise ValueError("upper must be nonnegative")
    n = params.termination_index()
    if n is not None:
        upper = min(upper, n)
    return _partial_sum(params, upper)


def _require_no_pole(params: Sequence[RatLike], upto: int) -> None:
    # the identities are statements about the full -m (or -n) range, so a
    # pole there is an error even if another parameter stops the sum sooner
    for b in params:
        if not pochhammer(b, upto):
            raise ParameterPoleError(f"parameter pole: ({b})_{upto} = 0")


def transform_357_sides(m: int, a: RatLike, b: RatLike, d: RatLike, e: RatLike) -> tuple[Fraction, Fraction]:
    """Both sides of the terminating 3F2 transformation

        3F2(-m, a, b; d, e; 1) = (e-a)_m/(e)_m * 3F2(-m, a, d-b; d, a+1-m-e; 1).
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    a, b, d, e = map(rat, (a, b, d, e))
    scale_den = pochhammer(e, m)
    if not scale_den:
        raise ParameterPoleError(f"parameter pole: (e)_m = 0 for e={e}, m={m}")
    _require_no_pole([d, e, a + 1 - m - e], m)
    lhs = terminating_pfq(hyp([-m, a, b], [d, e]))
    rhs = pochhammer(e - a, m) / scale_den * terminating_pfq(hyp([-m, a, d - b], [d, a + 1 - m - e]))
    return lhs, rhs


def check_transform_357(m: int, a: RatLike, b: RatLike, d: RatLike, e: RatLike) -> bool:
    lhs, rhs = transform_357_sides(m, a, b, d, e)
    return lhs == rhs


def pfaff_saalschutz_sides(n: int, a: RatLike, b: RatLike, c: RatLike) -> tuple[Fraction, Fraction]:
    """Both sides of the balanced terminating 3F2 summation

        3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b, c = map(rat, (a, b, c))
    den = pochhammer(c, n) * pochhammer(c - a - b, n)
    if not den:
        raise ParameterPoleError(f"parameter pole: (c)_n (c-a-b)_n = 0 for a={a}, b={b}, c={c}, n={n}")
    _require_no_pole([c, 1 + a + b - c - n], n)
    rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / den
    lhs = terminating_pfq(hyp([-n, a, b], [c, 1 + a + b - c - n]))
    return lhs, rhs


def check_pfaff_saalschutz(n: int, a: RatLike, b: RatLike, c: RatLike) -> bool:
    lhs, rhs = pfaff_saalschutz_sides(n, a, b, c)
    return lhs == rhs
