"""Weighted power-sum averages of Cohen-Ramanujan sums.

The central quantity is

    W(k, r, s) = (1 / k**(s(r+1))) * sum_{j=1..k**s} j**r c_k^(s)(j)

computed three independent ways: literally (``weighted_sum_direct``, guarded),
by the Bernoulli closed form (``weighted_average_closed``), and by the
Riemann-gap form (``weighted_average_delta_form``).  Everything is an exact
Fraction; no floats enter this module.

The closed form evaluated blindly at k = 1 gives 1 - 1/(r+1), while the
direct sum there is exactly 1 (single term j = 1 with c = 1).  The dispatch
``weighted_average_value`` therefore special-cases k = 1 to 1; the blind
closed-form value stays available for logging the discrepancy.

Moduli built from prime windows are passed in as ``Factorization`` objects so
that nothing ever tries to factorize a 40-digit product of primes.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import Factorization, _as_factorization, jordan_totient, mobius
from .crs import crs_value
from .exact import InternalConsistencyError, binomial, bernoulli_number, power_sum

__all__ = [
    "DIRECT_SUM_GUARD",
    "DeltaTerm",
    "WeightedAverageBreakdown",
    "average_over_k",
    "delta_term",
    "limit_r_infinity",
    "weighted_average_closed",
    "weighted_average_delta_form",
    "weighted_average_value",
    "weighted_sum_direct",
]

DIRECT_SUM_GUARD = 10**4


@dataclass(frozen=True)
class WeightedAverageBreakdown:
    """W(k, r, s) split into the closed form's pieces.

    value = leading + bernoulli_tail always, and for k >= 2 also
    value = J_s(k)/k**s - 1/(r+1) - delta_correction.  delta_correction is
    None (not zero) for k = 1, where the delta identity has no instance.
    """

    k: int
    r: int
    s: int
    value: Fraction
    leading: Fraction
    bernoulli_tail: Fraction
    delta_correction: Fraction | None


@dataclass(frozen=True)
class DeltaTerm:
    """delta_{d**s, r} = 1/(r+1) - S_r(d**s)/d**(s(r+1)).

    The gap between the integral of x**r over [0, 1] and its lower Riemann
    sum on d**s equal panels; satisfies 0 < value < 1/d**s.
    """

    d: int
    s: int
    r: int
    value: Fraction


def weighted_sum_direct(k: int, r: int, s: int) -> int:
    """Literal exact sum_{j=1..k**s} j**r c_k^(s)(j); the brute-force route.

    Guarded at k**s <= 10**4: this is the oracle against which the closed
    forms are checked, not the production path.
    """
    _validate_positive(k=k, r=r, s=s)
    n = k**s
    if n > DIRECT_SUM_GUARD:
        raise ValueError(f"direct sum requires k**s <= {DIRECT_SUM_GUARD}, got {n}")
    return sum(j**r * crs_value(k, s, j) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def weighted_average_closed(k: int | Factorization, r: int, s: int) -> WeightedAverageBreakdown:
    """Bernoulli closed form of W(k, r, s), as an exact breakdown.

    leading = J_s(k) / (2 k**s)
    bernoulli_tail = (1/(r+1)) sum_{m=1..floor(r/2)} C(r+1, 2m) B_2m J_{2ms}(k) / k**(2ms)
    (the tail is empty when r = 1).

    Meaningful as W for k >= 2; at k = 1 it evaluates to 1 - 1/(r+1), which
    the direct sum contradicts, so use weighted_average_value for dispatch.
    """
    fact = _as_factorization(k)
    _validate_positive(k=fact.value, r=r, s=s)
    ks = fact.value**s
    leading = Fraction(jordan_totient(s, fact), 2 * ks)
    tail = Fraction(0)
    for m in range(1, r // 2 + 1):
        tail += (
            binomial(r + 1, 2 * m)
            * bernoulli_number(2 * m)
            * Fraction(jordan_totient(2 * m * s, fact), fact.value ** (2 * m * s))
        )
    tail /= r + 1
    correction = None if fact.value == 1 else _delta_correction(fact, r, s)
    return WeightedAverageBreakdown(
        k=fact.value,
        r=r,
        s=s,
        value=leading + tail,
        leading=leading,
        bernoulli_tail=tail,
        delta_correction=correction,
    )


@lru_cache(maxsize=None)
def weighted_average_value(k: int | Factorization, r: int, s: int) -> Fraction:
    """W(k, r, s): exactly 1 at k = 1, the closed form otherwise."""
    fact = _as_factorization(k)
    if fact.value == 1:
        _validate_positive(k=1, r=r, s=s)
        return Fraction(1)
    return weighted_average_closed(fact, r, s).value


def delta_term(d: int, s: int, r: int) -> DeltaTerm:
    """The Riemann-sum gap for panel count d**s, with its bound checked.

    0 < value < 1/d**s holds for every r >= 1 here (at r = 1 the value is
    exactly 1/(2 d**s)); a violation would mean broken arithmetic, so it
    raises rather than returning.
    """
    if d < 2:
        raise ValueError(f"delta_term requires d >= 2, got {d}")
    _validate_positive(r=r, s=s)
    n = d**s
    value = Fraction(1, r + 1) - Fraction(power_sum(r, n), n ** (r + 1))
    if not (0 < value < Fraction(1, n)):
        raise InternalConsistencyError(f"delta bound violated at d={d}, s={s}, r={r}: {value}")
    return DeltaTerm(d=d, s=s, r=r, value=value)


def _squarefree_divisor_terms(fact: Factorization):
    """Yield (d, mu(d)) for the squarefree divisors d > 1 of fact, ascending size."""
    primes = fact.primes()
    for size in range(1, len(primes) + 1):
        sign = -1 if size % 2 else 1
        for combo in itertools.combinations(primes, size):
            yield math.prod(combo), sign


def _delta_correction(fact: Factorization, r: int, s: int) -> Fraction:
    total = Fraction(0)
    for d, mu in _squarefree_divisor_terms(fact):
        total += mu * delta_term(d, s, r).value
    return total


def weighted_average_delta_form(k: int | Factorization, r: int, s: int) -> Fraction:
    """W(k, r, s) through the Riemann-gap identity, defined for k >= 2:

    J_s(k)/k**s - 1/(r+1) - sum_{d | k, d > 1} mu(d) delta_{d**s, r}.

    Non-squarefree divisors drop out through mu, so the sum runs over
    products of distinct prime divisors only.
    """
    fact = _as_factorization(k)
    if fact.value < 2:
        raise ValueError(f"delta form requires k >= 2, got {fact.value}")
    _validate_positive(r=r, s=s)
    return (
        Fraction(jordan_totient(s, fact), fact.value**s)
        - Fraction(1, r + 1)
        - _delta_correction(fact, r, s)
    )


_cumulative_lock = threading.Lock()
_cumulative_sums: dict[tuple[int, int], list[Fraction]] = {}


def average_over_k(x: int, r: int, s: int) -> Fraction:
    """(1/x) sum_{k=1..x} W(k, r, s), exact; includes the k = 1 term 1."""
    _validate_positive(x=x, r=r, s=s)
    with _cumulative_lock:
        sums = _cumulative_sums.setdefault((r, s), [])
        while len(sums) < x:
            k = len(sums) + 1
            prev = sums[-1] if sums else Fraction(0)
            sums.append(prev + weighted_average_value(k, r, s))
        return sums[x - 1] / x


def limit_r_infinity(k: int | Factorization, s: int) -> Fraction:
    """J_s(k)/k**s, the value W(k, r, s) approaches as r grows."""
    fact = _as_factorization(k)
    _validate_positive(k=fact.value, s=s)
    return Fraction(jordan_totient(s, fact), fact.value**s)


def _validate_positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")
