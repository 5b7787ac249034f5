import math

import pytest

from crs_lab.arith import (
    Factorization,
    divisors,
    factorize,
    generalized_gcd,
    integer_nth_root,
    jordan_totient,
    mobius,
    nth_prime,
    omega,
    primes_in_range,
)


def brute_generalized_gcd(a: int, b: int, s: int) -> int:
    """Exhaustive search over d; the independent oracle for (a, b)_s."""
    best = 1
    d = 1
    while d**s <= min(a, b):
        if a % d**s == 0 and b % d**s == 0:
            best = d**s
        d += 1
    return best


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    fact = factorize(46189)
    assert fact.factors == ((11, 1), (13, 1), (17, 1), (19, 1))
    assert math.prod(p**e for p, e in fact.factors) == 46189


def test_factorize_rejects_nonpositive():
    for bad in (0, -1, -12):
        with pytest.raises(ValueError):
            factorize(bad)


def test_factorize_invariants_sweep():
    for n in range(1, 2001):
        fact = factorize(n)
        assert fact.value == n
        primes = [p for p, _ in fact.factors]
        assert primes == sorted(primes) and len(set(primes)) == len(primes)
        assert all(e >= 1 for _, e in fact.factors)
        assert math.prod(p**e for p, e in fact.factors) == n
        assert (n == 1) == (fact.factors == ())


def test_factorize_is_cached_and_deterministic():
    assert factorize(987654) is factorize(987654)


def test_from_primes():
    fact = Factorization.from_primes([19, 11, 17, 13])
    assert fact == factorize(46189)
    with pytest.raises(ValueError):
        Factorization.from_primes([4])
    with pytest.raises(ValueError):
        Factorization.from_primes([3, 3])


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert len(divisors(30)) == 2 ** omega(30) == 8


def test_divisors_against_brute_force():
    for n in range(1, 201):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(4) == 0
    assert mobius(6) == 1


def test_mobius_divisor_sum_identity():
    assert sum(mobius(d) for d in divisors(1)) == 1
    for n in range(2, 1001):
        assert sum(mobius(d) for d in divisors(n)) == 0


def test_jordan_examples():
    for s in (1, 2, 5):
        assert jordan_totient(s, 1) == 1
    assert jordan_totient(1, 10) == 4
    assert jordan_totient(2, 4) == 12


def test_jordan_equals_phi_at_s1():
    for n in range(1, 501):
        phi = sum(1 for m in range(1, n + 1) if math.gcd(m, n) == 1)
        assert jordan_totient(1, n) == phi


def test_jordan_two_forms_agree():
    for n in range(1, 501):
        for s in (1, 2, 3):
            mobius_form = sum(mobius(d) * (n // d) ** s for d in divisors(n))
            assert jordan_totient(s, n) == mobius_form


def test_jordan_multiplicative():
    for m in range(1, 101):
        for n in range(1, 101):
            if math.gcd(m, n) == 1:
                for s in (1, 2):
                    assert jordan_totient(s, m * n) == jordan_totient(s, m) * jordan_totient(s, n)


def test_generalized_gcd_examples():
    assert generalized_gcd(1, 987, 3) == 1
    assert generalized_gcd(8, 4, 2) == 4
    assert generalized_gcd(5, 8, 3) == 1


def test_generalized_gcd_reduces_to_gcd():
    for a in range(1, 201):
        for b in range(1, 201):
            assert generalized_gcd(a, b, 1) == math.gcd(a, b)


def test_generalized_gcd_against_brute_force():
    import random

    rng = random.Random(20140)
    for s in (1, 2, 3):
        pairs = [(rng.randint(1, 10**4), rng.randint(1, 10**4)) for _ in range(200)]
        pairs += [(2**6 * 3**4, 2**4 * 3**6), (7**3, 7**5), (1, 9999)]
        for a, b in pairs:
            g = generalized_gcd(a, b, s)
            root = integer_nth_root(g, s)
            assert root**s == g, "result must be a perfect s-th power"
            assert a % g == 0 and b % g == 0
            assert g == brute_generalized_gcd(a, b, s)


def test_generalized_gcd_validation():
    with pytest.raises(ValueError):
        generalized_gcd(0, 5, 1)
    with pytest.raises(ValueError):
        generalized_gcd(5, 5, 0)


def test_omega_examples():
    assert omega(1) == 0
    assert omega(12) == 2
    assert omega(46189) == 4


def test_primes_in_range():
    assert primes_in_range(10, 20) == [11, 13, 17, 19]
    assert primes_in_range(2, 2) == []
    assert primes_in_range(100, 110) == [101, 103, 107, 109]
    assert primes_in_range(1, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    # lo is exclusive, hi inclusive
    assert primes_in_range(2, 3) == [3]
    with pytest.raises(ValueError):
        primes_in_range(0, 10)


def test_primes_in_range_brute_force():
    def is_prime(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))

    assert primes_in_range(50, 300) == [p for p in range(51, 301) if is_prime(p)]


def test_nth_prime():
    assert [nth_prime(i) for i in (1, 2, 3, 4, 5)] == [2, 3, 5, 7, 11]
    assert nth_prime(10) == 29
    assert nth_prime(25) == 97
    assert nth_prime(50) == 229
    assert nth_prime(100) == 541


def test_integer_nth_root():
    assert integer_nth_root(0, 3) == 0
    assert integer_nth_root(1, 7) == 1
    assert integer_nth_root(63, 2) == 7
    assert integer_nth_root(64, 2) == 8
    assert integer_nth_root(10**60, 3) == 10**20
    assert integer_nth_root(10**60 - 1, 3) == 10**20 - 1
    assert integer_nth_root(12345, 1) == 12345
    for n in range(0, 500):
        for s in (2, 3, 4):
            r = integer_nth_root(n, s)
            assert r**s <= n < (r + 1) ** s
