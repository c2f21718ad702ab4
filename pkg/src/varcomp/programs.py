"""Prepackaged verification programs: golden tables, positivity
certificates, per-case step programs, and the exploratory scans for d1 >= 5.

Everything returns plain report rows so the CLI (or a notebook) can batch,
sort and emit them; nothing here prints or exits.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .distributions import FParams
from .errors import DomainError, VarcompError
from .proofcheck.auxfn import (
    AuxFn,
    algebra_identity_check,
    derivative_sign_check,
    g2,
    g2_expanded,
    h1,
    h2,
    h3,
    h4,
    k_fun,
    monotone_table_check,
    r4,
    rational_V_consistency,
    value_sign_check,
)
from .proofcheck.polynomials import (
    FAMILIES,
    REFERENCE_EXPANSIONS,
    REFERENCE_VALUES,
    shifted_expansion,
)
from .proofcheck.steps import (
    check_step_inequalities,
    coefficient_sign_checks,
    falling_factorial_bounds_odd,
    series_forms_even,
)
from .oracle import quad_beta_integral
from .reporting import Row, rows_from_outcome, rows_from_step_report
from .varband import STRICTNESS_FLOOR, band_endpoints, d_exceeds_c

__all__ = [
    "table_rows",
    "certificate_rows",
    "prove_rows",
    "explore_rows",
    "PROVED_D1_CASES",
]

PROVED_D1_CASES = (1, 2, 3, 4)

#: Sampling grid used for monotonicity-beyond-table and sign scans.
_DENSE_MAX = 200


def _grid(lo: int, hi: int) -> list:
    return list(range(lo, hi + 1))


def table_rows(floor: float = STRICTNESS_FLOOR) -> list:
    """Golden-table and table-adjacent checks (independent of any sweep grid).

    Reproduces every tabulated reference value at 1e-5, asserts the sampled
    monotonicity those tables illustrate, and checks the two-route
    consistency of the rational lower-edge bound.
    """
    rows: list = []
    rows += rows_from_outcome(
        monotone_table_check(AuxFn.H2, [3, 4, 5], "decreasing", floor), d1=2)
    rows += rows_from_outcome(
        monotone_table_check(AuxFn.H3, _grid(3, 12), "decreasing", floor), d1=3)
    rows += rows_from_outcome(
        monotone_table_check(AuxFn.H4, _grid(3, 12), "increasing", floor), d1=4)
    rows += rows_from_outcome(
        monotone_table_check(AuxFn.G1, _grid(25, 33), "decreasing", floor), d1=3)
    for y in _grid(25, 40):
        rows += rows_from_outcome(rational_V_consistency(y), d1=3, d2=y)
    return rows


def certificate_rows() -> list:
    """Exact-arithmetic certificate checks for every polynomial family.

    Point values and shifted expansions must match the frozen references
    bit-exactly, and every expansion must be all-positive (the positivity
    certificate for arguments beyond the shift).
    """
    rows = []
    for family, table in REFERENCE_VALUES.items():
        ok = all(FAMILIES[family](n) == v for n, v in table.items())
        rows.append(Row(f"poly_values_{family.lower()}", 0, 0,
                        1.0 if ok else -1.0, ok,
                        "exact match" if ok else "reference value mismatch"))
    for (family, shift), coeffs in REFERENCE_EXPANSIONS.items():
        exp = shifted_expansion(family, shift)
        exact = exp.coeffs == tuple(coeffs)
        positive = exp.all_coeffs_positive
        ok = exact and positive
        note = []
        if not exact:
            note.append("coefficient mismatch")
        if not positive:
            note.append("not all positive")
        rows.append(Row(f"expansion_{family.lower()}_{shift}", 0, shift,
                        float(min(exp.coeffs)) if positive else -1.0, ok,
                        "; ".join(note) if note else "all coefficients positive"))
    return rows


def _boundary_rows(d1: int, first_d2: int) -> list:
    """d_exceeds_c must flip exactly at first_d2 for this d1."""
    before = FParams(d1, first_d2 - 1)
    at = FParams(d1, first_d2)
    ok = (not d_exceeds_c(before)) and d_exceeds_c(at)
    return [Row(f"dc_boundary_d1_{d1}", d1, first_d2, 1.0 if ok else -1.0, ok,
                f"first d2 with d > c is {first_d2}" if ok else "boundary mismatch")]


def _closed_form_rows(d2_values: Iterable[int], rel_tol: float = 1e-10) -> list:
    """For numerator df 2 the upper-edge integral is elementary:
    d2 * integral_a^b (1-t)^(d2/2-1) dt = 2 (1-a)^(d2/2) [1 - ((1-b)/(1-a))^(d2/2)].
    The quadrature oracle must match that closed form to rel_tol."""
    rows = []
    worst = 0.0
    for d2 in d2_values:
        ep = band_endpoints(FParams(2, d2))
        quad = d2 * quad_beta_integral(1.0, 0.5 * d2, ep.a, ep.b, 1e-14).value
        closed = 2.0 * math.exp(0.5 * d2 * math.log1p(-ep.a)) * (
            1.0 - math.exp(0.5 * d2 * (math.log1p(-ep.b) - math.log1p(-ep.a))))
        worst = max(worst, abs(quad - closed) / abs(closed))
    margin = rel_tol - worst
    rows.append(Row("upper_edge_closed_form", 2, 0, margin, margin > 0.0,
                    "quadrature vs elementary antiderivative"))
    return rows


def _g2_consistency_rows(ys: Iterable[int], rel_tol: float = 1e-9) -> list:
    worst = 0.0
    for y in ys:
        ga, gb = g2(float(y)), g2_expanded(float(y))
        worst = max(worst, abs(ga - gb) / max(abs(ga), abs(gb)))
    margin = rel_tol - worst
    return [Row("g2_expansion_consistency", 3, 0, margin, margin > 0.0,
                "two transcriptions of the same factor agree")]


def _log_form_rows(d1: int, d2_values: Iterable[int], rel_tol: float = 1e-9) -> list:
    """Weld checks between the aux log forms and the endpoint inequalities.

    The reduced power/log inequalities are exactly the statement that an aux
    function decreases (or increases) along the step d2-2 -> d2:

      d1 = 1, 2, 3:  h_x(d2-2) - h_x(d2) = ln[(1-a)^(d2/2+1) / (1-b)^(d2/2)]
      d1 = 4:        h4(d2)   = ln[(d2+2) a + 2] + (d2/2 + 1) ln(1-a)
                     h4(d2-2) = ln[d2 b + 2]     + (d2/2)     ln(1-b)
                     (and the same for r4 with the lower images c, d)
      d1 = 1:        d2 b = k(d2) and (d2+2) a = k(d2+2)

    A transcription slip on either side shows up as a residual far above
    roundoff, so these margins certify the reduction steps themselves.
    """
    fn = {1: h1, 2: h2, 3: h3}.get(d1)
    rows = []
    worst = 0.0
    if d1 in (1, 2, 3):
        for d2 in d2_values:
            ep = band_endpoints(FParams(d1, d2))
            lhs = fn(float(d2 - 2)) - fn(float(d2))
            rhs = ((0.5 * d2 + 1.0) * math.log1p(-ep.a)
                   - 0.5 * d2 * math.log1p(-ep.b))
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-30))
        margin = rel_tol - worst
        rows.append(Row(f"h{d1}_log_form_consistency", d1, 0, margin,
                        margin > 0.0, "aux step equals the endpoint log ratio"))
        if d1 == 1:
            worst = 0.0
            for d2 in d2_values:
                ep = band_endpoints(FParams(1, d2))
                for lhs, rhs in ((d2 * ep.b, k_fun(float(d2))),
                                 ((d2 + 2) * ep.a, k_fun(float(d2 + 2)))):
                    worst = max(worst, abs(lhs - rhs) / abs(rhs))
            margin = rel_tol - worst
            rows.append(Row("k_matches_scaled_endpoints", 1, 0, margin,
                            margin > 0.0, "k(d2) = d2 b and k(d2+2) = (d2+2) a"))
        return rows
    if d1 == 4:
        worst_h = worst_r = 0.0
        any_r = False
        for d2 in d2_values:
            ep = band_endpoints(FParams(4, d2))
            pairs = [
                (h4(float(d2)),
                 math.log((d2 + 2) * ep.a + 2.0) + (0.5 * d2 + 1.0) * math.log1p(-ep.a)),
                (h4(float(d2 - 2)),
                 math.log(d2 * ep.b + 2.0) + 0.5 * d2 * math.log1p(-ep.b)),
            ]
            for lhs, rhs in pairs:
                worst_h = max(worst_h, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
            if d2 - 2 >= 15 and ep.d > 0.0 and ep.c > 0.0:
                any_r = True
                r_pairs = [
                    (r4(float(d2)),
                     math.log((d2 + 2) * ep.c + 2.0) + (0.5 * d2 + 1.0) * math.log1p(-ep.c)),
                    (r4(float(d2 - 2)),
                     math.log(d2 * ep.d + 2.0) + 0.5 * d2 * math.log1p(-ep.d)),
                ]
                for lhs, rhs in r_pairs:
                    worst_r = max(worst_r, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
        margin = rel_tol - worst_h
        rows.append(Row("h4_log_form_consistency", 4, 0, margin, margin > 0.0,
                        "h4 equals the affine-power log form at the endpoints"))
        if any_r:
            margin = rel_tol - worst_r
            rows.append(Row("r4_log_form_consistency", 4, 0, margin, margin > 0.0,
                            "r4 equals the affine-power log form at the lower images"))
        return rows
    raise DomainError(f"log-form welds exist for d1 in 1..4, got {d1}")


def prove_rows(d1: int, d2_max: int = 400,
               floor: float = STRICTNESS_FLOOR) -> list:
    """The full verification program for one proved case d1 in {1, 2, 3, 4}.

    Combines the golden tables, sampled monotonicity with finite-difference
    secondary checks, the prefactor algebra identities, exact positivity
    certificates, coefficient sign programs, and the step-inequality chain
    over 5 <= d2 <= d2_max.
    """
    if d1 not in PROVED_D1_CASES:
        raise DomainError(
            f"prove program covers d1 in {PROVED_D1_CASES}; use the "
            f"exploratory scan for d1={d1}")
    if d2_max < 7:
        raise DomainError(f"d2_max must be at least 7, got {d2_max}")
    rows: list = []
    dense_hi = max(_DENSE_MAX, min(d2_max, 400))

    def add(outcome, d2: int = 0):
        rows.extend(rows_from_outcome(outcome, d1=d1, d2=d2))

    if d1 == 1:
        add(monotone_table_check(AuxFn.H1, _grid(3, dense_hi), "decreasing", floor))
        add(derivative_sign_check(AuxFn.H1, [4, 6, 10, 20, 50, 100], -1))
        add(monotone_table_check(AuxFn.KFUN, _grid(5, dense_hi), "decreasing", floor))
        add(derivative_sign_check(AuxFn.KFUN, [6, 9, 20, 50, 100], -1))
        add(value_sign_check(AuxFn.L1, _grid(3, dense_hi), -1, floor))
        add(algebra_identity_check("l1_prefactor_identity", _grid(3, 60)))
        add(algebra_identity_check("k_derivative_identity", _grid(5, 60)))
        rows += _log_form_rows(1, range(5, min(d2_max, 150) + 1))
        for d2 in range(5, d2_max + 1):
            rows += rows_from_step_report(coefficient_sign_checks(1, d2, floor), floor)
    elif d1 == 2:
        add(monotone_table_check(AuxFn.H2, _grid(3, dense_hi), "decreasing", floor))
        add(derivative_sign_check(AuxFn.H2, [6, 10, 20, 50, 100], -1))
        add(value_sign_check(AuxFn.L2, _grid(5, dense_hi), -1, floor))
        add(algebra_identity_check("l2_prefactor_identity", _grid(5, 60)))
        rows += _log_form_rows(2, range(5, min(d2_max, 150) + 1))
        rows += _closed_form_rows(range(5, min(d2_max, 100) + 1))
    elif d1 == 3:
        add(monotone_table_check(AuxFn.H3, _grid(3, dense_hi), "decreasing", floor))
        add(derivative_sign_check(AuxFn.H3, [13, 20, 50, 100], -1))
        add(value_sign_check(AuxFn.L3, _grid(12, dense_hi), -1, floor))
        add(algebra_identity_check("l3_prefactor_identity", _grid(12, 60)))
        rows += _log_form_rows(3, range(5, min(d2_max, 150) + 1))
        rows += certificate_rows_for(("U1", "U2", "P3", "Q5"))
        rows += _boundary_rows(3, 25)
        add(monotone_table_check(AuxFn.G1, _grid(25, 33), "decreasing", floor))
        for y in _grid(25, 40):
            add(rational_V_consistency(y), d2=y)
        rows += _g2_consistency_rows(_grid(25, 60))
        for d2 in range(5, d2_max + 1):
            rows += rows_from_step_report(coefficient_sign_checks(3, d2, floor), floor)
    else:
        add(monotone_table_check(AuxFn.H4, _grid(3, dense_hi), "increasing", floor))
        add(derivative_sign_check(AuxFn.H4, [13, 20, 50, 100], 1))
        add(monotone_table_check(AuxFn.R4, _grid(15, dense_hi), "decreasing", floor))
        add(derivative_sign_check(AuxFn.R4, [16, 20, 50, 100], -1))
        add(value_sign_check(AuxFn.L4, _grid(12, dense_hi), -1, floor))
        add(value_sign_check(AuxFn.Q4, _grid(15, dense_hi), 1, floor))
        add(algebra_identity_check("l4_prefactor_identity", _grid(12, 60)))
        add(algebra_identity_check("q4_prefactor_identity", _grid(15, 60)))
        rows += _log_form_rows(4, range(5, min(d2_max, 150) + 1))
        rows += certificate_rows_for(("T1", "T2", "P4"))
        rows += _boundary_rows(4, 17)

    for d2 in range(5, d2_max + 1):
        rows += rows_from_step_report(
            check_step_inequalities(FParams(d1, d2), floor), floor)
    return rows


def certificate_rows_for(families: Sequence[str]) -> list:
    wanted = set(families)
    rows = []
    for row in certificate_rows():
        name = row.check_id.split("_")
        if name[0] == "poly" and name[2].upper() in wanted:
            rows.append(row)
        elif name[0] == "expansion" and name[1].upper() in wanted:
            rows.append(row)
    return rows


def explore_rows(d1: int, d2_values: Iterable[int],
                 floor: float = STRICTNESS_FLOOR) -> list:
    """Exploratory scan of the conjectured region d1 >= 5; never normative.

    Odd d1: truncated-binomial sufficient bounds at each d2.  Even d1: step
    differences of the series-reduced log forms (positive upper-edge
    difference and negative lower-edge difference would match the proved
    pattern).  Domain failures of the series forms are recorded, not raised.
    """
    if d1 < 5:
        raise DomainError(f"exploratory scans are for d1 >= 5, got d1={d1}")
    rows: list = []
    if d1 % 2 == 1:
        for d2 in d2_values:
            rows += rows_from_step_report(
                falling_factorial_bounds_odd(d1, d2, floor), floor, exploratory=True)
        return rows
    for d2 in d2_values:
        try:
            j_prev, k_prev = series_forms_even(d1, float(d2 - 2))
            j_here, k_here = series_forms_even(d1, float(d2))
        except VarcompError as exc:
            rows.append(Row("series_step", d1, d2, None, False,
                            f"not applicable: {exc}", True))
            continue
        rows.append(Row("series_upper_step", d1, d2, j_here - j_prev,
                        j_here - j_prev > floor, "", True))
        rows.append(Row("series_lower_step", d1, d2, k_prev - k_here,
                        k_prev - k_here > floor, "", True))
    return rows
