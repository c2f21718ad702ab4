import math

import pytest

from varcomp import DomainError, FParams, check_monotone_step
from varcomp.oracle import quad_beta_integral
from varcomp.proofcheck import (
    check_step_inequalities,
    coefficient_sign_checks,
    falling_factorial_bounds_odd,
    series_forms_even,
)
from varcomp.varband import band_endpoints


def test_case_d1_2_holds():
    for d2 in (5, 7, 30, 199):
        report = check_step_inequalities(FParams(2, d2))
        assert report.passed, report
        assert "power_step" in report.forms_checked
        assert "lower_edge" in report.not_applicable  # c = 0 for d1 = 2


def test_case_d1_4_region_boundary():
    r17 = check_step_inequalities(FParams(4, 17))
    assert r17.passed
    assert "poly_power_step_lower" in r17.forms_checked
    r16 = check_step_inequalities(FParams(4, 16))
    assert r16.passed
    assert "poly_power_step_lower" in r16.not_applicable
    # the lower edge itself is evaluated as soon as c > 0
    assert "lower_edge" in r16.forms_checked


def test_case_d1_3_region_boundary():
    r25 = check_step_inequalities(FParams(3, 25))
    assert r25.passed
    assert "product_step_lower" in r25.forms_checked
    assert "ratio_bound_lower" in r25.forms_checked
    r24 = check_step_inequalities(FParams(3, 24))
    assert r24.passed
    assert "product_step_lower" in r24.not_applicable


def test_trivial_lower_edge_when_d_below_c():
    # for d1 = 4, 11 <= d2 <= 16 has d > 0 but d < c: the signed integral is
    # negative, so the lower edge holds with a large margin
    ep = band_endpoints(FParams(4, 12))
    assert 0.0 < ep.d < ep.c
    report = check_step_inequalities(FParams(4, 12))
    assert report.margin_of("lower_edge") > 0.0


def test_step_integral_equiv_monotone_step():
    # the integral form is an exact rewrite of the probability step:
    # prob margin = integral margin / (d2 B(d1/2, d2/2))
    from varcomp.specfun import log_beta
    for (d1, d2) in [(1, 9), (2, 14), (3, 25), (4, 17), (4, 44)]:
        report = check_step_inequalities(FParams(d1, d2))
        prob_margin = check_monotone_step(FParams(d1, d2)).margin
        scale = d2 * math.exp(log_beta(0.5 * d1, 0.5 * d2))
        assert report.margin_of("step_integral") / scale == pytest.approx(
            prob_margin, rel=1e-6)


def test_chain_consistency_implication():
    # reduced forms passing must imply the probability step passing
    for d1 in (1, 2, 3, 4):
        for d2 in range(5, 120):
            report = check_step_inequalities(FParams(d1, d2))
            if report.passed:
                assert check_monotone_step(FParams(d1, d2)).margin > 0.0, (d1, d2)


def test_domain_guards():
    with pytest.raises(DomainError):
        check_step_inequalities(FParams(2, 4))
    with pytest.raises(DomainError):
        coefficient_sign_checks(2, 9)


def test_coefficient_sign_checks_d1_1():
    for d2 in (5, 50):
        report = coefficient_sign_checks(1, d2)
        assert report.passed
        assert report.forms_checked == (
            "coef_lower_bound", "coef_combination", "coef_dominance")
        assert all(m > 0 for m in report.margins)


def test_coefficient_sign_checks_d1_3():
    report = coefficient_sign_checks(3, 25)
    assert report.passed and report.forms_checked == ("cd_order",)
    report = coefficient_sign_checks(3, 12)
    assert report.forms_checked == () and report.not_applicable == ("cd_order",)


def test_series_forms_even():
    j, k = series_forms_even(6, 20.0)
    assert math.isfinite(j) and math.isfinite(k)
    j2, k2 = series_forms_even(8, 50.0)
    assert math.isfinite(j2) and math.isfinite(k2)
    with pytest.raises(DomainError):
        series_forms_even(5, 20.0)
    with pytest.raises(DomainError):
        series_forms_even(4, 20.0)


def test_series_step_matches_exact_step_direction():
    # the series步 difference signs reproduce the proved pattern at even d1
    for d1 in (6, 8):
        for d2 in range(8, 80, 4):
            j_prev, k_prev = series_forms_even(d1, float(d2 - 2))
            j_here, k_here = series_forms_even(d1, float(d2))
            assert j_here > j_prev, (d1, d2)
            assert k_here < k_prev, (d1, d2)


def test_falling_factorial_bounds():
    r = falling_factorial_bounds_odd(5, 9)
    assert r.forms_checked == ("truncated_series_upper",)
    assert r.note == "exploratory"
    assert r.margins[0] > 0
    r = falling_factorial_bounds_odd(5, 5)
    assert "truncated_series_lower" in r.not_applicable
    r = falling_factorial_bounds_odd(7, 40)
    assert set(r.forms_checked) == {"truncated_series_upper", "truncated_series_lower"}
    with pytest.raises(DomainError):
        falling_factorial_bounds_odd(4, 9)
    with pytest.raises(DomainError):
        falling_factorial_bounds_odd(3, 9)


def test_truncated_upper_bound_is_a_lower_bound_of_the_integral():
    # the floor-truncated binomial series undershoots the full series, so
    # d2 * S_floor <= d2 * I[a,b] / (a^(d1/2-1} (1-a)^(d2/2)); conservatism
    # of the sufficient bound, checked against quadrature
    from varcomp.proofcheck.steps import _truncated_sum
    for (d1, d2) in [(5, 9), (7, 21), (9, 33)]:
        ep = band_endpoints(FParams(d1, d2))
        true_side = d2 * quad_beta_integral(
            0.5 * d1, 0.5 * d2, ep.a, ep.b, 1e-13).value
        series_side = _truncated_sum(d1, d2, ep.a, ep.b, math.floor(0.5 * d1 - 1.0))
        exact_transformed = true_side / math.exp(
            (0.5 * d1 - 1.0) * math.log(ep.a) + 0.5 * d2 * math.log1p(-ep.a))
        assert series_side <= exact_transformed * (1.0 + 1e-9), (d1, d2)
