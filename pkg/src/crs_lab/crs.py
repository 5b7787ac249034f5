"""Cohen-Ramanujan sums c_k^(s)(j) and their partial sums.

c_k^(s)(j) is the sum of e^(2 pi i j m / k**s) over 1 <= m <= k**s whose
generalized gcd with k**s is 1.  Three independent evaluations live here:

* ``crs_closed``             exact closed form J_s(k) mu(d) / J_s(d),
                             where d**s = k**s / (j, k**s)_s
* ``crs_divisor_oracle``     exact Mobius-rearranged divisor sum
* ``crs_exponential_oracle`` literal complex summation (guarded, float)

plus exact partial sums over j, which exploit that a full period sums to
zero for k >= 2, and the scan for the maximal partial sum max_N |sum_{j<=N**s}|.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .arith import divisors, factorize, generalized_gcd, integer_nth_root, jordan_totient, mobius
from .exact import InternalConsistencyError

__all__ = [
    "CrsEvaluation",
    "CrsQuery",
    "EXPONENTIAL_GUARD",
    "EXPONENTIAL_TOLERANCE",
    "MaxPartialSum",
    "UnboundedPartialSumError",
    "crs_closed",
    "crs_divisor_oracle",
    "crs_exponential_oracle",
    "crs_max_partial",
    "crs_partial_sum",
    "crs_value",
]

EXPONENTIAL_GUARD = 10**4
EXPONENTIAL_TOLERANCE = 1e-6

# period-prefix tables are only materialized up to this many entries
_PREFIX_LIMIT = 10**4


class UnboundedPartialSumError(ValueError):
    """Raised where k = 1 would make a maximal partial sum infinite."""


@dataclass(frozen=True)
class CrsQuery:
    """One evaluation request; j is stored reduced into [0, k**s).

    j = 0 stands for j == 0 (mod k**s), i.e. the full-period argument j = k**s.
    """

    k: int
    s: int
    j: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        object.__setattr__(self, "j", self.j % self.k**self.s)

    @property
    def modulus(self) -> int:
        return self.k**self.s


@dataclass(frozen=True)
class CrsEvaluation:
    """A value c_k^(s)(j) with its derivation witnesses.

    gcd_s = (j, k**s)_s and d is the exact s-th root of k**s / gcd_s, so
    d | k, d**s * gcd_s = k**s and value = J_s(k) mu(d) / J_s(d).
    """

    query: CrsQuery
    value: int
    gcd_s: int
    d: int


def crs_closed(query: CrsQuery) -> CrsEvaluation:
    """Evaluate c_k^(s)(j) by the closed form, with exactness checks."""
    k, s = query.k, query.s
    n = query.modulus
    j_star = query.j if query.j != 0 else n
    gcd_s = generalized_gcd(j_star, n, s)
    d_pow = n // gcd_s
    d = integer_nth_root(d_pow, s)
    if d**s != d_pow:
        raise InternalConsistencyError(
            f"k**s / (j, k**s)_s = {d_pow} is not a perfect {s}-th power (k={k}, j={query.j})"
        )
    mu = mobius(d)
    if mu == 0:
        value = 0
    else:
        num = jordan_totient(s, k) * mu
        den = jordan_totient(s, d)
        if num % den:
            raise InternalConsistencyError(
                f"J_{s}({d}) = {den} does not divide J_{s}({k}) * mu = {num}"
            )
        value = num // den
    return CrsEvaluation(query, value, gcd_s, d)


def crs_value(k: int, s: int, j: int) -> int:
    """Shorthand for crs_closed(CrsQuery(k, s, j)).value."""
    return crs_closed(CrsQuery(k, s, j)).value


def crs_divisor_oracle(query: CrsQuery) -> int:
    """Independent exact route: sum of e**s mu(k/e) over e | k with e**s | j.

    j = 0 is taken as j = k**s, for which every divisor passes and the sum
    collapses to J_s(k).
    """
    n = query.modulus
    j_star = query.j if query.j != 0 else n
    total = 0
    for e in divisors(query.k):
        if j_star % e**query.s == 0:
            total += e**query.s * mobius(query.k // e)
    return total


@lru_cache(maxsize=64)
def _unit_roots(n: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * t / n) for t in range(n))


@lru_cache(maxsize=64)
def _coprime_residues(k: int, s: int) -> tuple[int, ...]:
    """All m in 1..k**s with (m, k**s)_s = 1; there are J_s(k) of them."""
    n = k**s
    prime_powers = [p**s for p in factorize(k).primes()]
    return tuple(m for m in range(1, n + 1) if all(m % q for q in prime_powers))


def crs_exponential_oracle(query: CrsQuery) -> complex:
    """Literal summation of the defining exponential sum (float oracle).

    Guarded at k**s <= 10**4 so that worst-case rounding stays far below the
    10**-6 window; a result that is not integer-like within that window
    raises, since it means either a bug or unacceptable accumulation.
    """
    n = query.modulus
    if n > EXPONENTIAL_GUARD:
        raise ValueError(f"exponential oracle requires k**s <= {EXPONENTIAL_GUARD}, got {n}")
    roots = _unit_roots(n)
    total = 0 + 0j
    j = query.j
    for m in _coprime_residues(query.k, query.s):
        total += roots[(j * m) % n]
    if abs(total.imag) >= EXPONENTIAL_TOLERANCE or abs(total.real - round(total.real)) >= EXPONENTIAL_TOLERANCE:
        raise InternalConsistencyError(
            f"exponential sum not integer-like within {EXPONENTIAL_TOLERANCE}: {total!r}"
        )
    return total


@lru_cache(maxsize=64)
def _period_prefix(k: int, s: int) -> tuple[int, ...]:
    """prefix[t] = sum_{j=1..t} c_k^(s)(j) for t = 0..k**s - 1 (prefix[0] = 0)."""
    n = k**s
    out = [0] * n
    acc = 0
    for j in range(1, n):
        acc += crs_value(k, s, j)
        out[j] = acc
    return tuple(out)


def crs_partial_sum(k: int, s: int, m_upper: int) -> int:
    """Exact sum of c_k^(s)(j) for j = 1..m_upper.

    The sequence has period k**s in j and a full period sums to zero for
    k >= 2, so only m_upper mod k**s matters; m_upper may be astronomically
    large.  For k = 1 every term is 1 and the sum is m_upper itself.
    """
    if m_upper < 1:
        raise ValueError(f"crs_partial_sum requires m_upper >= 1, got {m_upper}")
    if k == 1:
        return m_upper
    n = k**s
    rem = m_upper % n
    if n <= _PREFIX_LIMIT:
        return _period_prefix(k, s)[rem]
    return sum(crs_value(k, s, j) for j in range(1, rem + 1))


class MaxPartialSum(NamedTuple):
    max_abs: int
    argmax_n: int


def crs_max_partial(k: int, s: int) -> MaxPartialSum:
    """The maximal |sum_{j=1..m} c_k^(s)(j)| over every cutoff m >= 1, exact.

    This is the running-maximum the lower bound J_2s(k)/(4k**s) + J_s(k)/2 is
    about: its derivation bounds |sum_{j<=t}| for arbitrary real t, so the
    maximum must range over all integer cutoffs, not only the perfect s-th
    powers (restricting to m = N**s with integer N misses the deep troughs of
    even k at s = 2 and the bound then fails, e.g. at k = s = 2).  A full
    period sums to zero, so cutoffs one period apart repeat and the scan stops
    at m = k**s; the tests extend it to 2 k**s on small k and observe no new
    maxima.  Returns the smallest attaining cutoff; rejects k = 1, where the
    partial sums grow without bound.
    """
    if k < 2:
        raise UnboundedPartialSumError("partial sums of c_1^(s) grow without bound")
    n = k**s
    prefix = _period_prefix(k, s)
    best = -1
    best_n = 0
    for cutoff in range(1, n + 1):
        value = abs(prefix[cutoff % n])
        if value > best:
            best = value
            best_n = cutoff
    return MaxPartialSum(best, best_n)
