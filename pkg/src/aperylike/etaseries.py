"""Truncated q-series over the rationals and Dedekind eta quotients.

A :class:`PSeries` knows its coefficients through ``q**precision``; higher
coefficients are unknown rather than zero, and every operation returns the
largest precision it can justify.

With eta(cz) = q^(c/24) prod_{n>=1} (1 - q^(cn)), the generating function of
J2(n) satisfies

    eta(2z)^22 / (eta(z)^12 eta(4z)^8) = sum_n J2(n) t^n,
    t = 16 eta(z)^8 eta(4z)^16 / eta(2z)^24,

and :func:`verify_parametrization` checks it coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .apery import j2_by_recurrence
from .exact import RatLike, rat


class SeriesError(ValueError):
    pass


class FractionalPowerError(SeriesError):
    pass


class PoleError(SeriesError):
    pass


class PSeries:
    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Iterable[RatLike], precision: int | None = None):
        cs = [rat(c) for c in coeffs]
        if precision is None:
            precision = len(cs) - 1
        if precision < 0:
            raise SeriesError("precision must be >= 0")
        cs = cs[: precision + 1]
        cs += [Fraction(0)] * (precision + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.precision = precision

    @classmethod
    def one(cls, precision: int) -> "PSeries":
        return cls([1], precision)

    def __getitem__(self, i: int) -> Fraction:
        if i > self.precision:
            raise IndexError(f"coefficient of q^{i} unknown at precision {self.precision}")
        return self.coeffs[i] if i >= 0 else Fraction(0)

    def __repr__(self):
        shown = " + ".join(f"{c}*q^{i}" for i, c in enumerate(self.coeffs) if c) or "0"
        return f"PSeries({shown} + O(q^{self.precision + 1}))"

    def truncate(self, precision: int) -> "PSeries":
        return PSeries(self.coeffs, min(precision, self.precision))

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def agrees_with(self, other: "PSeries") -> bool:
        n = min(self.precision, other.precision)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def _coerce(self, other) -> "PSeries":
        if isinstance(other, PSeries):
            return other
        return PSeries([other], self.precision)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        return PSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return PSeries([-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PSeries([c * other for c in self.coeffs], self.precision)
        # a known zero prefix in one factor extends what the product can know
        va, vb = self.valuation(), other.valuation()
        n = min(
            self.precision + (vb if vb is not None else other.precision + 1),
            other.precision + (va if va is not None else self.precision + 1),
        )
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a or i > n:
                continue
            for j, b in enumerate(other.coeffs[: n - i + 1]):
                if b:
                    out[i + j] += a * b
        return PSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "PSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise SeriesError("inverse needs a nonzero constant term")
        n = self.precision
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for k in range(1, n + 1):
            acc = sum((self.coeffs[i] * out[k - i] for i in range(1, k + 1) if self.coeffs[i]), Fraction(0))
            out[k] = -acc / c0
        return PSeries(out, n)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = PSeries.one(self.precision), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out.truncate(self.precision)

    def shift(self, v: int) -> "PSeries":
        """Multiply by q**v, v >= 0."""
        if v < 0:
            raise PoleError("negative shift")
        return PSeries([0] * v + list(self.coeffs), self.precision + v)


# --------------------------------------------------------------------------
# eta quotients

@dataclass(frozen=True)
class EtaQuotient:
    """prod_i eta(scale_i z)^exponent_i."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        facs = tuple((int(c), int(e)) for c, e in self.factors)
        for c, _ in facs:
            if c < 1:
                raise SeriesError(f"eta scale must be a positive integer, got {c}")
        object.__setattr__(self, "factors", facs)

    def weighted_sum(self) -> int:
        return sum(c * e for c, e in self.factors)

    def net_power(self) -> int:
        """Integer exponent of the leading q^(sum c e / 24) factor."""
        s = self.weighted_sum()
        if s % 24:
            raise FractionalPowerError(f"fractional power: q^({s}/24) is not an integral power of q")
        return s // 24


def euler_product(scale: int, precision: int) -> PSeries:
    """prod_{n>=1} (1 - q^(scale n)) through q^precision."""
    a = [0] * (precision + 1)
    a[0] = 1
    step = scale
    while step <= precision:
        for i in range(precision, step - 1, -1):
            a[i] -= a[i - step]
        step += scale
    return PSeries(a, precision)


def eta_quotient_series(eq: EtaQuotient | Sequence[tuple[int, int]], order: int) -> PSeries:
    """q-expansion of an eta quotient through q^order."""
    if not isinstance(eq, EtaQuotient):
        eq = EtaQuotient(tuple(eq))
    if order < 0:
        raise SeriesError("order must be >= 0")
    v = eq.net_power()
    if v < 0:
        raise PoleError(f"pole at q=0: net power q^{v}")
    if v > order:
        return PSeries([], order)
    unit = PSeries.one(order - v)
    for c, e in eq.factors:
        unit = unit * euler_product(c, order - v) ** e
    return unit.shift(v).truncate(order)


T_QUOTIENT = EtaQuotient(((1, 8), (4, 16), (2, -24)))
J2_QUOTIENT = EtaQuotient(((2, 22), (1, -12), (4, -8)))


def t_series(order: int) -> PSeries:
    """t = 16 eta(z)^8 eta(4z)^16 / eta(2z)^24 = 16q + O(q^2)."""
    return eta_quotient_series(T_QUOTIENT, order) * 16


def compose_series(outer_coeffs: Sequence[RatLike], inner: PSeries, order: int) -> PSeries:
    """sum_k outer_coeffs[k] * inner^k through q^order.

    ``outer_coeffs`` is taken as the complete coefficient list (missing
    entries are zero); only indices up to ``order`` can contribute.
    """
    if inner.coeffs[0]:
        raise SeriesError("composition needs valuation >= 1: inner series has a nonzero constant term")
    n = min(order, inner.precision)
    inner = inner.truncate(n)
    outer = [rat(c) for c in outer_coeffs[: n + 1]]
    if not outer:
        return PSeries([], n)
    acc = PSeries([outer[-1]], n)
    for c in reversed(outer[:-1]):
        acc = (acc * inner + c).truncate(n)
    return acc


def parametrization_sides(order: int) -> tuple[PSeries, PSeries]:
    lhs = eta_quotient_series(J2_QUOTIENT, order)
    rhs = compose_series(j2_by_recurrence(order).values, t_series(order), order)
    return lhs, rhs


def verify_parametrization(order: int) -> bool:
    """Both sides agree through q^order and the eta side is integral."""
    if order < 1:
        raise SeriesError("order must be >= 1")
    lhs, rhs = parametrization_sides(order)
    integral = all(c.denominator == 1 for c in lhs.coeffs)
    return integral and lhs.precision == rhs.precision == order and lhs.agrees_with(rhs)
