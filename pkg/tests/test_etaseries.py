from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aperylike.apery import j2_by_sum
from aperylike.etaseries import (
    J2_QUOTIENT,
    EtaQuotient,
    FractionalPowerError,
    PoleError,
    PSeries,
    SeriesError,
    compose_series,
    eta_quotient_series,
    euler_product,
    parametrization_sides,
    t_series,
    verify_parametrization,
)


def naive_eta_product(factors, order):
    """prod (q^(c/24) prod_n (1 - q^(cn)))^e by plain list convolution,
    only for nonnegative exponents."""
    shift = sum(c * e for c, e in factors) // 24
    coeffs = [1] + [0] * order
    for c, e in factors:
        for _ in range(e):
            for n in range(1, order // c + 1):
                step = c * n
                coeffs = [coeffs[i] - (coeffs[i - step] if i >= step else 0) for i in range(order + 1)]
    return [0] * shift + coeffs[: order + 1 - shift]


def test_delta_first_terms():
    s = eta_quotient_series([(1, 24)], 3)
    assert s.coeffs == (0, 1, -24, 252) and s.precision == 3


def test_delta_against_naive_product_and_tau():
    s = eta_quotient_series([(1, 24)], 12)
    assert list(s.coeffs) == naive_eta_product([(1, 24)], 12)
    assert list(s.coeffs[1:7]) == [1, -24, 252, -1472, 4830, -6048]


def test_positive_quotient_against_naive():
    facs = [(1, 8), (4, 16)]  # weight sum 72, q^3
    assert list(eta_quotient_series(facs, 15).coeffs) == naive_eta_product(facs, 15)


def test_lhs_quotient_units():
    assert J2_QUOTIENT.net_power() == 0
    s = eta_quotient_series(J2_QUOTIENT, 5)
    assert s[0] == 1


def test_fractional_power_rejected():
    with pytest.raises(FractionalPowerError, match="fractional power"):
        eta_quotient_series([(1, 1), (2, -1)], 5)


def test_pole_rejected():
    with pytest.raises(PoleError, match="pole at q=0"):
        eta_quotient_series([(1, -24)], 5)


def test_t_series():
    t = t_series(10)
    assert t[0] == 0 and t[1] == 16
    assert t_series(1).precision == 1


def test_precision_is_tracked():
    a = PSeries([1, 2, 3], 2)
    b = PSeries([1, 1, 1, 1, 1], 4)
    assert (a + b).precision == 2
    assert (a * b).precision == 2
    with pytest.raises(IndexError):
        (a * b)[3]
    # a known q^2 factor in one operand pushes the other's error term up
    c = PSeries([0, 0, 1, 1, 1], 4)
    assert (a * c).precision == 4 and (a * c).coeffs == (0, 0, 1, 3, 6)


def test_equality_up_to_common_precision():
    assert PSeries([1, 2, 3], 2) == PSeries([1, 2], 1)
    assert PSeries([1, 2, 3], 2) != PSeries([1, 5], 1)


def test_compose_examples():
    t = t_series(10)
    assert compose_series([1, 0, 0, 0], t, 10).coeffs == (1,) + (0,) * 10
    assert compose_series([0, 1], t, 10) == t
    with pytest.raises(SeriesError, match="valuation >= 1"):
        compose_series([1, 1], PSeries([1, 1], 3), 3)


def test_compose_against_direct_powers():
    inner = PSeries([0, 2, F(-1, 3), 5, 7], 4)
    outer = [F(1, 2), 3, -1, F(2, 5), 9]
    direct = PSeries([0], 4)
    for k, c in enumerate(outer):
        direct = direct + (inner**k) * c
    assert compose_series(outer, inner, 4) == direct


def test_parametrization_small_orders():
    lhs, rhs = parametrization_sides(1)
    assert lhs[0] == rhs[0] == 1
    assert verify_parametrization(20)
    assert verify_parametrization(30)


def test_parametrization_with_sum_route():
    lhs = eta_quotient_series(J2_QUOTIENT, 30)
    rhs = compose_series([j2_by_sum(n) for n in range(31)], t_series(30), 30)
    assert lhs.agrees_with(rhs) and rhs.precision == 30


def test_parametrization_integrality():
    lhs, rhs = parametrization_sides(30)
    assert all(c.denominator == 1 for c in lhs.coeffs)
    assert all(c.denominator == 1 for c in rhs.coeffs)


def test_quotient_of_products_is_product_of_series():
    a, b = [(1, 8), (4, 16), (2, -24)], [(2, 22), (1, -12), (4, -8)]
    combined = eta_quotient_series(a + b, 20)
    assert combined == eta_quotient_series(a, 20) * eta_quotient_series(b, 20)


def test_euler_product_pentagonal():
    # Euler: prod (1 - q^n) = sum (-1)^k q^(k(3k-1)/2)
    e = euler_product(1, 40)
    expected = [0] * 41
    for k in range(-6, 7):
        g = k * (3 * k - 1) // 2
        if g <= 40:
            expected[g] = (-1) ** k
    assert list(e.coeffs) == expected


def test_eta_quotient_validation():
    with pytest.raises(SeriesError):
        EtaQuotient(((0, 24),))


series = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=6, max_size=6).map(
    lambda cs: PSeries(cs, 5)
)


@given(series, series, series)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


@given(series.filter(lambda s: s[0] != 0))
def test_inverse(s):
    assert s * s.inverse() == PSeries.one(5)
    assert (s * s.inverse()).precision == 5
