"""Exact rational layer: Bernoulli numbers and polynomials, Faulhaber power
sums, binomial coefficients, and the "p/q" text form used in all output.

Values are ``fractions.Fraction`` end to end.  Wherever an identity forces an
integer result (power sums, closed-form sum values) the denominator is
checked; a failed check raises :class:`InternalConsistencyError` rather than
rounding anything away, so algebra mistakes surface as loud errors.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from math import comb

__all__ = [
    "BernoulliCache",
    "InternalConsistencyError",
    "as_integer",
    "bernoulli_number",
    "bernoulli_polynomial",
    "binomial",
    "format_rational",
    "parse_rational",
    "power_sum",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class InternalConsistencyError(ArithmeticError):
    """An exact identity that must hold internally failed; this is a bug."""


def binomial(n: int, k: int) -> int:
    """C(n, k) exactly; returns 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial requires non-negative arguments, got ({n}, {k})")
    return comb(n, k)


class BernoulliCache:
    """Bernoulli numbers B_0, B_1, ... extended on demand.

    Each new entry is obtained by solving the linear recursion
    sum_{j=0}^{n} C(n+1, j) B_j = 0 for B_n, starting from B_0 = 1.
    Extension happens under a lock; entries, once stored, are immutable.
    """

    def __init__(self) -> None:
        self._entries: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        if n >= len(self._entries):
            with self._lock:
                while len(self._entries) <= n:
                    m = len(self._entries)
                    acc = sum(comb(m + 1, j) * self._entries[j] for j in range(m))
                    self._entries.append(-acc / (m + 1))
        return self._entries[n]


_shared_bernoulli = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    """B_n from the shared cache (B_0 = 1, B_1 = -1/2, odd B_n = 0 for n >= 3)."""
    return _shared_bernoulli.get(n)


def bernoulli_polynomial(n: int, x: Fraction | int) -> Fraction:
    """B_n(x) = sum_{k=0}^{n} C(n, k) B_k x**(n-k), evaluated exactly."""
    if n < 0:
        raise ValueError(f"Bernoulli polynomial degree must be >= 0, got {n}")
    x = Fraction(x)
    total = Fraction(0)
    power = Fraction(1)  # x**(n-k), built from the k = n term downwards
    for k in range(n, -1, -1):
        total += comb(n, k) * bernoulli_number(k) * power
        power *= x
    return total


def power_sum(r: int, n: int) -> int:
    """S_r(n) = 1**r + 2**r + ... + (n-1)**r, via the Bernoulli closed form.

    Uses (r+1) S_r(n) = B_{r+1}(n) - B_{r+1} so the cost does not depend on n;
    n here is typically a huge perfect power.  The literal loop is a test
    oracle only.
    """
    if r < 1:
        raise ValueError(f"power_sum requires r >= 1, got {r}")
    if n < 2:
        raise ValueError(f"power_sum requires n >= 2, got {n}")
    value = (bernoulli_polynomial(r + 1, n) - bernoulli_number(r + 1)) / (r + 1)
    result = as_integer(value, what=f"power_sum({r}, {n})")
    if result < 0:
        raise InternalConsistencyError(f"power_sum({r}, {n}) came out negative: {result}")
    return result


def as_integer(value: Fraction, *, what: str = "value") -> int:
    """The integer a Fraction must equal; raises instead of rounding."""
    if value.denominator != 1:
        raise InternalConsistencyError(f"{what} is not an integer: {value}")
    return value.numerator


def format_rational(value: Fraction | int) -> str:
    """Lowest-terms "p/q", or just "p" when the denominator is 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (exact; decimal-point and exponent forms rejected)."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not an exact rational (expected 'p/q' or 'p'): {text!r}")
    return Fraction(text)
