"""crs-lab: exact arithmetic for Cohen-Ramanujan sums and their weighted
power-sum averages, with a desk-scale verification harness.

Everything numeric is an exact integer or ``fractions.Fraction``; floats only
appear inside the guarded exponential-sum oracle.
"""

from .arith import (
    Factorization,
    divisors,
    factorize,
    generalized_gcd,
    jordan_totient,
    mobius,
    omega,
    primes_in_range,
)
from .crs import (
    CrsEvaluation,
    CrsQuery,
    MaxPartialSum,
    UnboundedPartialSumError,
    crs_closed,
    crs_divisor_oracle,
    crs_exponential_oracle,
    crs_max_partial,
    crs_partial_sum,
    crs_value,
)
from .exact import (
    BernoulliCache,
    InternalConsistencyError,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    format_rational,
    parse_rational,
    power_sum,
)
from .verify import (
    BeurlingSemigroup,
    CheckReport,
    ConvergenceReport,
    beurling_generate,
    check_corollary,
    check_theorem_3_1,
    check_theorem_3_2,
    check_theorem_3_3,
    check_theorem_3_4,
    density_estimate,
    primorial_window,
    primorial_window_times2,
    run_suite,
)
from .weighted import (
    DeltaTerm,
    WeightedAverageBreakdown,
    average_over_k,
    delta_term,
    limit_r_infinity,
    weighted_average_closed,
    weighted_average_delta_form,
    weighted_average_value,
    weighted_sum_direct,
)

__version__ = "0.1.0"
