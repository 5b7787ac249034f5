from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from crs_lab.exact import (
    BernoulliCache,
    InternalConsistencyError,
    as_integer,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    format_rational,
    parse_rational,
    power_sum,
)


def test_bernoulli_small_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    # classical table values, frozen
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(10) == Fraction(5, 66)
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_bernoulli_odd_indices_vanish():
    for n in range(3, 32, 2):
        assert bernoulli_number(n) == 0


def test_bernoulli_recursion_identity():
    for n in range(1, 31):
        assert sum(comb(n + 1, j) * bernoulli_number(j) for j in range(n + 1)) == 0


def test_bernoulli_cache_is_independent_per_instance():
    cache = BernoulliCache()
    assert cache.get(6) == Fraction(1, 42)
    with pytest.raises(ValueError):
        cache.get(-1)


def test_bernoulli_polynomial_at_zero_and_one():
    for n in range(21):
        assert bernoulli_polynomial(n, 0) == bernoulli_number(n)
        if n != 1:
            assert bernoulli_polynomial(n, 1) == bernoulli_number(n)
    assert bernoulli_polynomial(1, 1) - bernoulli_polynomial(1, 0) == 1


def test_bernoulli_polynomial_values():
    assert bernoulli_polynomial(5, 1) == 0
    assert bernoulli_polynomial(3, 4) == 42  # equals 3 * (1 + 4 + 9)
    assert bernoulli_polynomial(2, Fraction(1, 2)) == Fraction(-1, 12)


def test_power_sum_examples():
    assert power_sum(1, 2) == 1
    assert power_sum(3, 3) == 9
    assert power_sum(1, 4) == 6
    for s in range(1, 7):
        assert power_sum(1, 2**s) == 2 ** (s - 1) * (2**s - 1)


def test_power_sum_against_literal_loop():
    for r in range(1, 13):
        for n in range(2, 51):
            assert power_sum(r, n) == sum(j**r for j in range(1, n))


def test_power_sum_validation():
    with pytest.raises(ValueError):
        power_sum(0, 5)
    with pytest.raises(ValueError):
        power_sum(3, 1)


def test_binomial():
    assert binomial(7, 0) == 1
    assert binomial(4, 2) == 6
    assert binomial(10, 5) == 252
    assert binomial(3, 9) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_as_integer():
    assert as_integer(Fraction(42)) == 42
    with pytest.raises(InternalConsistencyError):
        as_integer(Fraction(1, 2))


def test_format_rational():
    assert format_rational(Fraction(3, 8)) == "3/8"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(14, 2)) == "7"
    assert format_rational(5) == "5"


def test_parse_rational():
    assert parse_rational("3/8") == Fraction(3, 8)
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    for bad in ("1.5", "1e3", "3 / 8", "a/b", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(
    a=st.integers(-10**9, 10**9),
    b=st.integers(1, 10**9),
    c=st.integers(-10**9, 10**9),
    d=st.integers(1, 10**9),
)
def test_rational_arithmetic_round_trips(a, b, c, d):
    x = Fraction(a, b)
    y = Fraction(c, d)
    assert (x + y) - y == x
    assert parse_rational(format_rational(x)) == x
