from fractions import Fraction

import pytest

from crs_lab.arith import factorize
from crs_lab.verify import (
    beurling_generate,
    check_corollary,
    check_k1_anomaly,
    check_oracle_agreement,
    check_theorem_3_1,
    check_theorem_3_2,
    check_theorem_3_3,
    check_theorem_3_4,
    check_three_forms,
    check_zero_sum,
    density_estimate,
    primorial_window,
    primorial_window_factors,
    primorial_window_times2,
    report_holds,
    report_to_dict,
    run_suite,
    theorem_3_1_instances,
)

HALF = Fraction(1, 2)


def test_beurling_examples():
    assert beurling_generate([], 100).members == (1,)
    assert beurling_generate([2], 10).members == (1, 2, 4, 8)
    assert beurling_generate([2, 3], 12).members == (1, 2, 3, 4, 6, 8, 9, 12)


def test_beurling_rejects_composites():
    with pytest.raises(ValueError):
        beurling_generate([6], 100)


def test_beurling_closed_and_complete():
    for prime_set in ([2, 3], [3, 7], [2, 5, 11]):
        bound = 10**4
        semigroup = beurling_generate(prime_set, bound)
        allowed = set(prime_set)
        by_filter = [
            n
            for n in range(1, bound + 1)
            if all(p in allowed for p in factorize(n).primes())
        ]
        assert list(semigroup.members) == by_filter


def test_density_examples():
    assert density_estimate([1], 10) == Fraction(1, 10)
    assert density_estimate(list(range(2, 101, 2)), 100) == HALF


def test_density_of_thin_semigroup_decreases():
    members = beurling_generate([2, 3], 10**3).members
    d100 = density_estimate(members, 100)
    d1000 = density_estimate(members, 1000)
    assert 0 < d1000 < d100 < 1


def test_primorial_window():
    assert primorial_window(1, Fraction(2)) == 2
    assert primorial_window(10, Fraction(2)) == 46189
    assert primorial_window(4, Fraction(3, 2)) == 5
    assert primorial_window(1, Fraction(3, 2)) == 1  # empty window
    with pytest.raises(ValueError):
        primorial_window(3, Fraction(1))


def test_primorial_window_times2():
    assert primorial_window_times2(10, Fraction(2)) == 92378
    assert primorial_window_times2(4, Fraction(3, 2)) == 10
    assert primorial_window_times2(2, Fraction(2)) == 6
    with pytest.raises(ValueError):
        primorial_window_times2(1, Fraction(2))


def test_primorial_window_factors():
    fact = primorial_window_factors(10, Fraction(2))
    assert fact.value == 46189
    assert fact.primes() == (11, 13, 17, 19)
    fact2 = primorial_window_factors(10, Fraction(2), times2=True)
    assert fact2.value == 92378
    assert fact2.primes()[0] == 2


def test_theorem_3_1_positive_instance():
    report = check_theorem_3_1(143, 4, 1, HALF)
    assert report.hypothesis_met is True
    assert report.holds
    assert report.relation == "<"
    assert report.rhs == HALF
    assert "J_s(k)/k^s" in report.notes


def test_theorem_3_1_sharper_bound_at_s2():
    report = check_theorem_3_1(143, 4, 2, HALF)
    assert report.holds
    assert report.lhs < HALF**2


def test_theorem_3_1_hypothesis_failure_is_not_a_conclusion_failure():
    report = check_theorem_3_1(6, 4, 1, HALF)
    assert report.hypothesis_met is False
    assert report.lhs == Fraction(5, 6)
    assert report.rhs == Fraction(1, 4)
    assert report.relation == ">"
    assert report.holds  # the recorded relation is literally true
    assert report_holds(report)


def test_theorem_3_1_validation():
    with pytest.raises(ValueError):
        check_theorem_3_1(143, 4, 1, Fraction(3, 2))
    with pytest.raises(ValueError):
        check_theorem_3_1(1, 4, 1, HALF)
    with pytest.raises(ValueError):
        check_theorem_3_1(143, 1, 1, HALF)


def test_theorem_3_1_instance_construction():
    ks = theorem_3_1_instances(HALF)
    assert set(factorize(ks[0]).primes()) <= {11, 13, 17, 19, 23}
    assert all(set(factorize(k).primes()) <= {11, 13, 17, 19, 23} for k in ks)
    assert len(ks) == 5 + 10 + 10


def test_theorem_3_2_bounded_omega_rows():
    report = check_theorem_3_2("bounded-omega", 1, 1, (1, 5, 10))
    for row in report.rows:
        p = row.k_n
        assert row.value == Fraction(p - 1, 2 * p)
        assert row.target == HALF
        assert row.gap == Fraction(1, 2 * p)


def test_theorem_3_2_window_row():
    report = check_theorem_3_2("window", 2, 1, (10,))
    row = report.rows[0]
    assert (row.k_n, row.omega) == (46189, 4)
    assert row.target == Fraction(2, 3)


def test_theorem_3_2_times2_target_and_note():
    report = check_theorem_3_2("window-times2", 1, 1, (10,))
    assert report.rows[0].target == Fraction(1, 4)
    report_s2 = check_theorem_3_2("window-times2", 2, 2, (5,))
    # derived limit (2^s-1)/2^s - S_r(2^s)/2^(s(r+1)), not the stated 1/2 - ...
    assert report_s2.rows[0].target == Fraction(3, 4) - Fraction(14, 64)
    assert "statement gives limit" in report_s2.notes


def test_theorem_3_2_empty_window_rows_are_annotated():
    report = check_theorem_3_2("window", 2, 1, (1, 4), lam=Fraction(3, 2))
    assert report.rows[0].k_n == 1 and report.rows[0].note is not None
    assert report.rows[0].value is None
    assert report.rows[1].k_n == 5


def test_theorem_3_2_validation():
    with pytest.raises(ValueError):
        check_theorem_3_2("nope", 2, 1, (1, 2))
    with pytest.raises(ValueError):
        check_theorem_3_2("window", 2, 1, (5, 2))


def test_theorem_3_3_examples():
    assert check_theorem_3_3(1, 1, 1).lhs == 1
    report = check_theorem_3_3(2, 2, 1)
    assert report.lhs == Fraction(11, 16)
    assert report.holds


def test_theorem_3_4_examples():
    report = check_theorem_3_4(2, 1)
    assert (report.lhs, report.rhs) == (1, Fraction(7, 8))
    assert report.holds
    assert check_theorem_3_4(3, 1).rhs == Fraction(5, 3)
    with pytest.raises(ValueError):
        check_theorem_3_4(1, 1)
    with pytest.raises(ValueError):
        check_theorem_3_4(101, 2)


def test_corollary_examples():
    report = check_corollary(1, 5, 3)
    assert (report.lhs, report.rhs) == (Fraction(5, 6), 1)
    assert check_corollary(2, 3, 1).lhs == Fraction(7, 8)
    assert check_corollary(2, 3, 1).rhs == 2
    assert check_corollary(6, 10, 2).holds


def test_identity_checks():
    assert check_oracle_agreement(6, 1).holds
    assert check_zero_sum(12, 1).holds
    assert all(r.holds for r in check_three_forms(4, 3, 1))
    anomaly = check_k1_anomaly(4, 2)
    assert anomaly.holds
    assert "4/5" in anomaly.notes  # 1 - 1/(r+1) at r = 4


def test_report_serialization():
    data = report_to_dict(check_theorem_3_4(2, 1))
    assert data["lhs"] == "1" and data["rhs"] == "7/8" and data["margin"] == "1/8"
    assert data["holds"] is True
    assert "hypothesis_met" not in data
    data = report_to_dict(check_theorem_3_1(6, 4, 1, HALF))
    assert data["hypothesis_met"] is False
    data = report_to_dict(check_theorem_3_2("window", 2, 1, (10,)))
    assert data["rows"][0]["k_n"] == "46189"
    assert data["converged"] in (True, False)


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_run_suite_thm34_small():
    reports = run_suite("thm34", k_max=6)
    assert len(reports) == 10
    assert all(report_holds(r) for r in reports)


def test_run_suite_parallel_results_match_sequential():
    sequential = run_suite("corollary", k_max=8, r_max=4)
    parallel = run_suite("corollary", jobs=4, k_max=8, r_max=4)
    assert sequential == parallel
