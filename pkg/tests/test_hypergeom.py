import itertools
import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aperylike.exact import binom_rat
from aperylike.hypergeom import (
    HypParams,
    NonTerminatingError,
    ParameterPoleError,
    check_pfaff_saalschutz,
    check_transform_357,
    hyp,
    pfaff_saalschutz_sides,
    terminating_pfq,
    transform_357_sides,
    truncated_pfq,
)

HALF = F(1, 2)


def brute_pfq(num, den, z, upper):
    """Term-by-term sum with freshly computed rising factorials."""

    def rf(a, k):
        out = F(1)
        for i in range(k):
            out *= F(a) + i
        return out

    total = F(0)
    for k in range(upper + 1):
        top = math.prod((rf(a, k) for a in num), start=F(1))
        bot = math.prod((rf(b, k) for b in den), start=F(1))
        total += top / bot * F(z) ** k / math.factorial(k)
    return total


def test_j2_values():
    assert terminating_pfq(hyp([HALF, HALF, -1], [1, 1])) == F(3, 4)
    assert terminating_pfq(hyp([HALF, HALF, -2], [1, 1])) == 1 - F(1, 2) + F(9, 64) == F(41, 64)


def test_zero_parameter_gives_one():
    assert terminating_pfq(hyp([F(2, 7), 5, 0], [F(1, 3), -4], F(9, 2))) == 1


def test_non_terminating():
    with pytest.raises(NonTerminatingError, match="non-terminating"):
        terminating_pfq(hyp([HALF, HALF, F(1, 3)], [1, 1]))


def test_parameter_pole():
    with pytest.raises(ParameterPoleError, match="parameter pole"):
        terminating_pfq(hyp([1, 1, -5], [-2, 1]))
    with pytest.raises(ParameterPoleError):
        truncated_pfq(hyp([1, 1], [-1]), 3)


def test_pole_beyond_termination_tolerated():
    # (-3)_k would vanish at k = 4 but the series stops at k = 2
    assert terminating_pfq(hyp([1, -2], [-3])) == brute_pfq([1, -2], [-3], 1, 2)


def test_truncated():
    assert truncated_pfq(hyp([HALF, HALF, -2], [1, 1]), 2) == F(41, 64)
    assert truncated_pfq(hyp([F(3, 5), 7], [F(1, 9)], 3), 0) == 1
    assert truncated_pfq(hyp([HALF, HALF, -1], [1, 1]), 4) == F(3, 4)


def test_truncated_non_terminating_against_brute_force():
    num, den, z = [F(1, 3), F(2, 5)], [F(7, 4)], F(-2, 3)
    for upper in range(8):
        assert truncated_pfq(hyp(num, den, z), upper) == brute_pfq(num, den, z, upper)


def test_termination_index_is_smallest():
    assert HypParams((F(-3), F(-1), F(1)), (F(1),)).termination_index() == 1


@pytest.mark.parametrize("n", range(31))
def test_j2_series_against_binomial_sum(n):
    expected = sum((-1) ** k * binom_rat(-HALF, k) ** 2 * math.comb(n, k) for k in range(n + 1))
    assert terminating_pfq(hyp([HALF, HALF, -n], [1, 1])) == expected


params = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@given(params, params, st.integers(0, 8), params.filter(lambda b: not (b.denominator == 1 and b <= 0)),
       params.filter(lambda b: not (b.denominator == 1 and b <= 0)), params)
def test_terminating_matches_truncated_and_brute_force(a, b, n, c, d, z):
    p = hyp([a, b, -n], [c, d], z)
    value = terminating_pfq(p)
    assert value == truncated_pfq(p, p.termination_index())
    assert value == brute_pfq([a, b, -n], [c, d], z, p.termination_index())


@given(params, params, st.integers(0, 6), params.filter(lambda b: not (b.denominator == 1 and b <= 0)),
       params.filter(lambda b: not (b.denominator == 1 and b <= 0)))
def test_parameter_permutation_symmetry(a, b, n, c, d):
    base = terminating_pfq(hyp([a, b, -n], [c, d]))
    for num in itertools.permutations([a, b, -n]):
        assert terminating_pfq(hyp(list(num), [d, c])) == base


@pytest.mark.parametrize(
    "m, a, b, d, e",
    [(1, 2, -5, 1, 3), (2, 3, 3, 1, 1), (1, HALF, HALF, 1, 1)],
)
def test_transform_examples(m, a, b, d, e):
    assert check_transform_357(m, a, b, d, e)


def test_transform_examples_by_brute_force():
    lhs, rhs = transform_357_sides(1, 2, -5, 1, 3)
    assert lhs == brute_pfq([-1, 2, -5], [1, 3], 1, 1)
    assert rhs == F(1, 3) * brute_pfq([-1, 2, 6], [1, -1], 1, 1)


def test_transform_pole_is_error():
    with pytest.raises(ParameterPoleError):
        check_transform_357(2, 1, 1, 1, -1)


@pytest.mark.parametrize("n, a, b, c", [(0, F(2, 3), 5, F(1, 7)), (3, 4, 2, 1), (2, HALF, F(-1, 3), F(5, 7))])
def test_pfaff_saalschutz_examples(n, a, b, c):
    assert check_pfaff_saalschutz(n, a, b, c)


def test_pfaff_saalschutz_specialization_by_brute_force():
    # a = n+1, b = j+1, c = 1, n = 3, j = 1: lower parameter 1+a+b-c-n = j+2
    lhs, rhs = pfaff_saalschutz_sides(3, 4, 2, 1)
    assert lhs == brute_pfq([-3, 4, 2], [1, 3], 1, 3)
    # (c-b)_3 = (-1)(0)(1) kills the right side
    assert rhs == 0 == lhs


def test_pfaff_pole_is_error():
    with pytest.raises(ParameterPoleError):
        check_pfaff_saalschutz(2, 1, 1, 0)


def _simple_rational(rng):
    if rng.random() < 0.5:
        return F(rng.randint(-6, 6))
    return F(rng.randint(-9, 9), rng.choice([2, 3, 4, 5, 7]))


def sample_valid(check, arity, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = rng.randint(1, 7) if check is check_transform_357 else rng.randint(0, 7)
        args = [_simple_rational(rng) for _ in range(arity)]
        try:
            out.append((m, *args, check(m, *args)))
        except ParameterPoleError:
            continue
    return out


def test_transform_randomized():
    samples = sample_valid(check_transform_357, 4, 200, seed=57)
    assert len(samples) == 200
    assert [s for s in samples if not s[-1]] == []


def test_pfaff_saalschutz_randomized():
    samples = sample_valid(check_pfaff_saalschutz, 3, 200, seed=226)
    assert len(samples) == 200
    assert [s for s in samples if not s[-1]] == []


def test_pole_inside_full_range_is_error_even_if_sum_stops_early():
    # b = -1 stops the left sum at k = 1, but (d)_7 = 0 makes the identity 0/0
    with pytest.raises(ParameterPoleError):
        check_transform_357(7, F(-2, 7), -1, -3, F(-4, 3))
