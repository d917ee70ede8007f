"""The Apery-like numbers J2(n) and the polynomials built from them.

    J2(n) = sum_{k=0}^{n} (-1)^k binom(-1/2, k)^2 binom(n, k)

satisfy

    4n^2 J2(n) - (8n^2 - 8n + 3) J2(n-1) + 4(n-1)^2 J2(n-2) = 0,

with J2(0) = 1 and J2(1) = 3/4, and equal 3F2(1/2, 1/2, -n; 1, 1; 1).
Each of the three descriptions gives an independent way to compute them.

For an odd prime p with n = (p-1)/2 the module also builds

* ``f_poly(n)``: sum_j binom(n,j) binom(n+j,j) binom(x,j), degree n;
* ``g_poly(p)``: the J2 series in x truncated at j = p-1, degree p-1;
* ``h_poly(p)``: (g - f_n)/p^2, which must lie in x Z_p[x];

and the summation operator ``I_sum(f, p) = f(0) + f(1) + ... + f(p-1)``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import binom_rat, pochhammer, require_prime, vp
from .hypergeom import hyp, terminating_pfq
from .poly import Poly, binom_poly, from_binomial_basis

HALF = Fraction(1, 2)


class MembershipError(ArithmeticError):
    pass


def require_odd_prime(p: int) -> None:
    require_prime(p)
    if p == 2:
        raise ValueError("p must be an odd prime")


def central_weight(n: int, k: int) -> int:
    """binom(n, k) * binom(n + k, k), the coefficients of f_n in the binomial basis."""
    return math.comb(n, k) * math.comb(n + k, k)


# --------------------------------------------------------------------------
# J2 by three routes

def j2_by_sum(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Fraction(0)
    b = Fraction(1)  # binom(-1/2, k), updated in place
    for k in range(n + 1):
        if k:
            b = b * (-HALF - (k - 1)) / k
        total += (-1) ** k * b * b * math.comb(n, k)
    return total


@dataclass(frozen=True)
class AperySeq:
    values: tuple[Fraction, ...]
    method: str

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


_j2_cache: list[Fraction] = [Fraction(1), Fraction(3, 4)]
_j2_lock = threading.Lock()


def _extend_recurrence(vals: list[Fraction], upto: int) -> None:
    for n in range(len(vals), upto + 1):
        vals.append(
            ((8 * n * n - 8 * n + 3) * vals[n - 1] - 4 * (n - 1) ** 2 * vals[n - 2]) / (4 * n * n)
        )


def j2_by_recurrence(N: int) -> AperySeq:
    """J2(0..N) from the three-term recurrence."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    vals = [Fraction(1), Fraction(3, 4)]
    _extend_recurrence(vals, N)
    return AperySeq(tuple(vals[: N + 1]), "recurrence")


def j2_by_3f2(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return terminating_pfq(hyp([HALF, HALF, -n], [1, 1]))


def j2(n: int) -> Fraction:
    """J2(n) from a process-wide memo of the recurrence prefix."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_j2_cache):
        with _j2_lock:
            _extend_recurrence(_j2_cache, n)
    return _j2_cache[n]


# --------------------------------------------------------------------------
# polynomials

@lru_cache(maxsize=None)
def f_poly(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return from_binomial_basis([central_weight(n, j) for j in range(n + 1)])


def f_recursion_sides(n: int, f_next: Poly | None = None) -> tuple[Poly, Poly]:
    """(n+1)^2 f_{n+1}  and  (2n+1)(2x+1) f_n + n^2 f_{n-1}.

    ``f_next`` substitutes for f_{n+1}, which lets callers feed in a
    perturbed polynomial.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if f_next is None:
        f_next = f_poly(n + 1)
    lhs = f_next * (n + 1) ** 2
    rhs = Poly([1, 2]) * f_poly(n) * (2 * n + 1) + f_poly(n - 1) * n * n
    return lhs, rhs


def check_f_recursion(n: int, f_next: Poly | None = None) -> bool:
    lhs, rhs = f_recursion_sides(n, f_next)
    return lhs == rhs


def f_value_reflected(n: int, x: int) -> Fraction:
    """f_n(x) via (-1)^n sum_k binom(n,k) binom(n+k,k) binom(-1-x,k)."""
    total = sum(central_weight(n, k) * binom_rat(-1 - x, k) for k in range(n + 1))
    return (-1) ** n * Fraction(total)


def j2_series_weight(j: int) -> Fraction:
    """(-1)^j binom(-1/2, j)^2, the coefficient of binom(x, j) in g."""
    return (-1) ** j * binom_rat(-HALF, j) ** 2


@lru_cache(maxsize=None)
def g_poly(p: int) -> Poly:
    require_odd_prime(p)
    return from_binomial_basis([j2_series_weight(j) for j in range(p)])


@lru_cache(maxsize=None)
def h_poly(p: int) -> Poly:
    """(g - f_n) / p^2 for n = (p-1)/2, checked to lie in x Z_p[x]."""
    require_odd_prime(p)
    h = (g_poly(p) - f_poly((p - 1) // 2)) / (p * p)
    if h[0] != 0:
        raise MembershipError(f"h not in xZ_p[x]: constant term {h[0]} for p={p}")
    for i, c in enumerate(h.coeffs):
        if vp(c, p) < 0:
            raise MembershipError(f"h not in xZ_p[x]: coefficient of x^{i} is {c} for p={p}")
    return h


# --------------------------------------------------------------------------
# the summation operator I

def I_sum(f: Poly, p: int) -> Fraction:
    """f(0) + f(1) + ... + f(p-1)."""
    require_odd_prime(p)
    return f.sum_over(range(p))


def I_f_binom_closed(m: int, j: int, p: int) -> Fraction:
    """Closed form of I(f_m(x) binom(x, j)):

        (-1)^m sum_k binom(m,k) binom(m+k,k) (-1)^k (p-j)_{j+k+1} / (j! k! (j+k+1))
    """
    total = Fraction(0)
    for k in range(m + 1):
        total += Fraction(
            central_weight(m, k) * (-1) ** k * pochhammer(p - j, j + k + 1),
            math.factorial(j) * math.factorial(k) * (j + k + 1),
        )
    return (-1) ** m * total


def I_f_binom(m: int, j: int, p: int) -> tuple[Fraction, Fraction]:
    """(direct, closed form) for I(f_m(x) binom(x, j)); the two must agree."""
    if m < 1 or j < 0:
        raise ValueError("need m >= 1 and j >= 0")
    direct = I_sum(f_poly(m) * binom_poly(j), p)
    return direct, I_f_binom_closed(m, j, p)


def lemma2_sides(m: int, j: int, k: int) -> tuple[Fraction, Fraction]:
    """sum_{x=0}^{m-1} (x-j+1)_{j+k}  and  (m-j)_{j+k+1} / (j+k+1)."""
    if m < 1 or j < 0 or k < 0:
        raise ValueError("need m >= 1 and j, k >= 0")
    lhs = sum((pochhammer(x - j + 1, j + k) for x in range(m)), Fraction(0))
    rhs = pochhammer(m - j, j + k + 1) / (j + k + 1)
    return lhs, rhs
