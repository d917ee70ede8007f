"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import RatLike, rat


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _lcm_denominator(coeffs: Iterable[Fraction]) -> int:
    out = 1
    for c in coeffs:
        out = math.lcm(out, c.denominator)
    return out


class Poly:
    """Polynomial in x; ``coeffs[i]`` multiplies ``x**i``.

    Stored without trailing zeros, so the zero polynomial has no
    coefficients and ``degree`` is -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        self.coeffs = _strip([rat(c) for c in coeffs])

    @classmethod
    def _from_ints(cls, nums: Sequence[int], den: int) -> "Poly":
        out = cls.__new__(cls)
        out.coeffs = _strip([Fraction(c, den) for c in nums])
        return out

    def _int_form(self) -> tuple[list[int], int]:
        den = _lcm_denominator(self.coeffs)
        return [c.numerator * (den // c.denominator) for c in self.coeffs], den

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c) if c.denominator == 1 else f"({c})"
                terms.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(terms).replace("+ -", "- ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        # integer convolution over a common denominator
        a, da = self._int_form()
        b, db = other._int_form()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly._from_ints(out, da * db)

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike):
        other = rat(other)
        return Poly([c / other for c in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = Poly([1]), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __call__(self, x: RatLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sum_over(self, xs: Iterable[int]) -> Fraction:
        """Exact sum of values at integer points (Horner on integer numerators)."""
        nums, den = self._int_form()
        total = 0
        for x in xs:
            acc = 0
            for c in reversed(nums):
                acc = acc * x + c
            total += acc
        return Fraction(total, den)


X = Poly([0, 1])


@lru_cache(maxsize=None)
def falling_factorial_coeffs(j: int) -> tuple[int, ...]:
    """Integer monomial coefficients of x(x-1)...(x-j+1)."""
    if j == 0:
        return (1,)
    prev = falling_factorial_coeffs(j - 1)
    root = j - 1
    out = [0] * (len(prev) + 1)
    for i, c in enumerate(prev):
        out[i + 1] += c
        out[i] -= root * c
    return tuple(out)


def binom_poly(j: int) -> Poly:
    """binom(x, j) = x(x-1)...(x-j+1)/j! as a polynomial in x."""
    for i in range(j):  # warm the cache bottom-up
        falling_factorial_coeffs(i)
    return Poly._from_ints(falling_factorial_coeffs(j), math.factorial(j))


def from_binomial_basis(weights: Sequence[RatLike]) -> Poly:
    """sum_j weights[j] * binom(x, j), expanded into monomials."""
    terms = [rat(w) / math.factorial(j) for j, w in enumerate(weights)]
    den = _lcm_denominator(terms)
    out = [0] * len(terms)
    for j, t in enumerate(terms):
        if not t:
            continue
        scale = t.numerator * (den // t.denominator)
        for i, c in enumerate(falling_factorial_coeffs(j)):
            out[i] += scale * c
    return Poly._from_ints(out, den)
