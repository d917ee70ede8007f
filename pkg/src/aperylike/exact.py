"""Exact rational arithmetic helpers and the p-adic congruence engine.

Every scalar in the package is a :class:`fractions.Fraction`, which is kept
in lowest terms with a positive denominator, so two equal values are always
structurally equal.  This module adds the combinatorial primitives on top of
it (generalized binomials, rising factorials, harmonic numbers) and the
machinery that turns ``a == b (mod p**m)`` into an exact valuation test.

A congruence between rationals is read as ``v_p(a - b) >= m``; the operands
themselves need not be p-integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rat = Fraction
RatLike = Union[Fraction, int]

#: Valuation of zero.  Compares greater than every integer.
INF = math.inf

PadicVal = Union[int, float]


class NotPrimeError(ValueError):
    pass


def rat(x: RatLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


# --------------------------------------------------------------------------
# primes

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p!r} is not prime")


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in the closed interval [lo, hi], ascending."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


# --------------------------------------------------------------------------
# combinatorial primitives

def binom_rat(a: RatLike, k: int) -> Fraction:
    """Generalized binomial a(a-1)...(a-k+1)/k! for rational ``a``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = rat(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / math.factorial(k)


def pochhammer(a: RatLike, k: int) -> Fraction:
    """Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = rat(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
        if not out:
            break
    return out


@lru_cache(maxsize=None)
def _harmonic_prefix(k: int) -> Fraction:
    # iterative fill avoids recursion depth; values are immutable so
    # concurrent fills at worst duplicate work
    out = Fraction(0)
    for j in range(1, k + 1):
        out += Fraction(1, j)
    return out


def harmonic(k: int) -> Fraction:
    """H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _harmonic_prefix(k)


# --------------------------------------------------------------------------
# valuations and congruences

def _vp_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(r: RatLike, p: int) -> PadicVal:
    """p-adic valuation of a rational; ``INF`` for zero."""
    require_prime(p)
    r = rat(r)
    if r == 0:
        return INF
    return _vp_int(r.numerator, p) - _vp_int(r.denominator, p)


def format_valuation(v: PadicVal | None) -> str:
    if v is None:
        return "-"
    return "inf" if v == INF else str(v)


@dataclass(frozen=True)
class CongruenceVerdict:
    """Outcome of checking ``lhs == rhs (mod prime**exponent)``.

    Exact identities (no prime involved) use ``prime = exponent = None``;
    then ``diff_valuation`` is ``None`` and ``holds`` means ``lhs == rhs``.
    """

    lhs: Fraction
    rhs: Fraction
    prime: int | None
    exponent: int | None
    diff_valuation: PadicVal | None
    holds: bool
    label: str = ""

    @property
    def is_exact(self) -> bool:
        return self.prime is None

    def residue(self) -> int | None:
        """(lhs - rhs) reduced mod prime**exponent, when p-integral."""
        if self.is_exact:
            return None
        d = self.lhs - self.rhs
        mod = self.prime ** self.exponent
        if d.denominator % self.prime == 0:
            return None
        return d.numerator * pow(d.denominator, -1, mod) % mod

    def __str__(self) -> str:
        tag = f"[{self.label}] " if self.label else ""
        status = "holds" if self.holds else "FAILS"
        if self.is_exact:
            return f"{tag}{self.lhs} == {self.rhs}: {status}"
        return (
            f"{tag}{self.lhs} == {self.rhs} (mod {self.prime}^{self.exponent}): "
            f"{status}, v_{self.prime}(diff) = {format_valuation(self.diff_valuation)}"
        )


def congruent(a: RatLike, b: RatLike, p: int, m: int, label: str = "") -> CongruenceVerdict:
    """Check ``a == b (mod p**m)`` for rationals via ``v_p(a - b) >= m``."""
    require_prime(p)
    if m < 1:
        raise ValueError("exponent must be >= 1")
    a, b = rat(a), rat(b)
    v = vp(a - b, p)
    return CongruenceVerdict(a, b, p, m, v, v >= m, label)


def exactly_equal(a: RatLike, b: RatLike, label: str = "") -> CongruenceVerdict:
    a, b = rat(a), rat(b)
    return CongruenceVerdict(a, b, None, None, None, a == b, label)
