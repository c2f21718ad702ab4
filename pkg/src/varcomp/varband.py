"""One-standard-deviation variation bands for the F distribution.

For X ~ F(d1, d2) with d2 >= 5 the band [max(0, E - sd), E + sd] maps into
beta-function space through w(x) = d1 x / (d1 x + d2).  Writing
r1 = sqrt(2 (d1+d2) / (d1 (d2-2))) and r2 = sqrt(2 (d1+d2-2) / (d1 (d2-4))),
the four endpoint images used throughout the verification layer are

    a = d1 / (d1 + d2 (1 + r1)^-1)        upper image for (d1, d2+2)
    b = d1 / (d1 + (d2-2) (1 + r2)^-1)    upper image for (d1, d2)
    c = d1 / (d1 + d2 (1 - r1)^-1)        lower image for (d1, d2+2)
    d = d1 / (d1 + (d2-2) (1 - r2)^-1)    lower image for (d1, d2)

with c (resp. d) equal to 0 exactly when 1 - r1 <= 0 (resp. 1 - r2 <= 0),
i.e. when the band's lower limit in x-space is clipped at 0.  The sign of
1 - r1 is decided with exact integer arithmetic on (d1, d2), never by
floating-point division, so the three-region classification is bit-stable:

    region 1:  c = 0            (both lower limits clipped)
    region 2:  c > 0, d = 0
    region 3:  d > 0            (no clipping)

The variation probability P{|X - E| <= sd} is then I_b(d1/2, d2/2) -
I_d(d1/2, d2/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .distributions import ChiSquare, Dist, FDist, FParams, StdNormal, f_mean, f_variance
from .errors import DomainError, MomentUndefinedError
from .specfun import Accuracy, DEFAULT_ACCURACY, reg_inc_beta, reg_lower_gamma, std_normal_cdf

__all__ = [
    "ConditionRegion",
    "Endpoints",
    "VariationBand",
    "CheckOutcome",
    "STRICTNESS_FLOOR",
    "NORMAL_BAND",
    "normal_band_probability",
    "chi_square_band_probability",
    "band_endpoints",
    "variation_band",
    "d_exceeds_c",
    "variation_probability",
    "check_bound",
    "check_monotone_step",
    "check_limit",
]

#: Default absolute floor below which a strict-inequality margin is treated
#: as inconclusive rather than certified; binary64 cannot distinguish signs
#: at roundoff scale.
STRICTNESS_FLOOR = 1e-12

#: Degrees of freedom covered by the proved monotonicity result; anything
#: else is conjectured territory and is reported as exploratory.
PROVED_D1 = frozenset({1, 2, 3, 4})


class ConditionRegion(Enum):
    """Zero pattern of the lower endpoint images (c, d)."""

    COND1_C_ZERO = 1
    COND2_C_POS_D_ZERO = 2
    COND3_D_POS = 3


@dataclass(frozen=True)
class Endpoints:
    """Beta-space endpoint images and the classified condition region."""

    a: float
    b: float
    c: float
    d: float
    region: ConditionRegion


@dataclass(frozen=True)
class VariationBand:
    """Band limits in x-space and the probability mass inside them."""

    lower: float
    upper: float
    prob: float


@dataclass(frozen=True)
class CheckOutcome:
    """One verification record.

    margin is signed: positive means the claim holds with that much slack.
    A margin whose magnitude is below the strictness floor is recorded as
    inconclusive (passed=False, note='inconclusive') rather than failed.
    """

    claim_id: str
    inputs: Mapping[str, object]
    margin: float
    passed: bool
    note: str = ""


def _outcome(claim_id: str, inputs: Mapping[str, object], margin: float,
             floor: float, note: str = "") -> CheckOutcome:
    if margin > floor:
        return CheckOutcome(claim_id, dict(inputs), margin, True, note)
    if abs(margin) <= floor:
        extra = "inconclusive" if not note else note + "; inconclusive"
        return CheckOutcome(claim_id, dict(inputs), margin, False, extra)
    return CheckOutcome(claim_id, dict(inputs), margin, False, note)


def _c_positive(d1: int, d2: int) -> bool:
    # 1 - sqrt(2(d1+d2)/(d1(d2-2))) > 0, decided exactly on integers
    return d1 * (d2 - 2) > 2 * (d1 + d2)


def _d_positive(d1: int, d2: int) -> bool:
    # 1 - sqrt(2(d1+d2-2)/(d1(d2-4))) > 0, decided exactly on integers
    return d1 * (d2 - 4) > 2 * (d1 + d2 - 2)


def band_endpoints(p: FParams, acc: Accuracy = DEFAULT_ACCURACY) -> Endpoints:
    """Endpoint images a, b, c, d and the condition region for (d1, d2)."""
    d1, d2 = p.d1, p.d2
    if d2 < 5:
        raise DomainError(f"band endpoints require d2 >= 5, got d2={d2}")
    r1 = math.sqrt(2.0 * (d1 + d2) / (d1 * (d2 - 2)))
    r2 = math.sqrt(2.0 * (d1 + d2 - 2) / (d1 * (d2 - 4)))
    a = d1 / (d1 + d2 / (1.0 + r1))
    b = d1 / (d1 + (d2 - 2) / (1.0 + r2))
    if _c_positive(d1, d2):
        # 1 - r1 = (d1(d2-2) - 2(d1+d2)) / (d1(d2-2)(1+r1)): the numerator is
        # an exact integer, which avoids cancellation when r1 is close to 1
        one_minus_r1 = (d1 * (d2 - 2) - 2 * (d1 + d2)) / (d1 * (d2 - 2) * (1.0 + r1))
        c = d1 * one_minus_r1 / (d1 * one_minus_r1 + d2)
    else:
        c = 0.0
    if _d_positive(d1, d2):
        one_minus_r2 = (d1 * (d2 - 4) - 2 * (d1 + d2 - 2)) / (d1 * (d2 - 4) * (1.0 + r2))
        d = d1 * one_minus_r2 / (d1 * one_minus_r2 + (d2 - 2))
    else:
        d = 0.0
    if d > 0.0:
        region = ConditionRegion.COND3_D_POS
    elif c > 0.0:
        region = ConditionRegion.COND2_C_POS_D_ZERO
    else:
        region = ConditionRegion.COND1_C_ZERO
    return Endpoints(a, b, c, d, region)


def variation_band(p: FParams, acc: Accuracy = DEFAULT_ACCURACY) -> VariationBand:
    """x-space band [max(0, E - sd), E + sd] and its probability."""
    mean = f_mean(p)
    sd = math.sqrt(f_variance(p))
    prob = variation_probability(FDist(p), acc)
    return VariationBand(max(0.0, mean - sd), mean + sd, prob)


def d_exceeds_c(p: FParams) -> bool:
    """Exact integer test for d > c, valid for d1 >= 3.

    d > c holds iff d1 (d2-2) (d1+d2) (d2-4)^2 > 2 d2^2 (d1+d2-2)^2.  For
    d1 < 3 the equivalence is not established without extra assumptions (and
    d = 0 there anyway), so such inputs are rejected.
    """
    d1, d2 = p.d1, p.d2
    if d1 < 3:
        raise DomainError(f"d_exceeds_c requires d1 >= 3, got d1={d1}")
    if d2 < 5:
        raise DomainError(f"d_exceeds_c requires d2 >= 5, got d2={d2}")
    lhs = d1 * (d2 - 2) * (d1 + d2) * (d2 - 4) ** 2
    rhs = 2 * d2 * d2 * (d1 + d2 - 2) ** 2
    return lhs > rhs


def normal_band_probability() -> float:
    """P{|Z| <= 1} = 2 Phi(1) - 1 for standard normal Z."""
    return 2.0 * std_normal_cdf(1.0) - 1.0


NORMAL_BAND = normal_band_probability()


def chi_square_band_probability(k: int, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """P{|G - k| <= sqrt(2k)} for G ~ chi-square(k)."""
    sd = math.sqrt(2.0 * k)
    hi = reg_lower_gamma(0.5 * k, 0.5 * (k + sd), acc)
    lo = reg_lower_gamma(0.5 * k, 0.5 * (k - sd), acc) if k - sd > 0.0 else 0.0
    return hi - lo


def variation_probability(d: Dist, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """P{|X - E[X]| <= sd(X)} for the given distribution.

    For F(d1, d2) this is I_b(d1/2, d2/2) - I_d(d1/2, d2/2) at the endpoint
    images of (d1, d2); requires d2 >= 5 so the variance exists.
    """
    if isinstance(d, StdNormal):
        return normal_band_probability()
    if isinstance(d, ChiSquare):
        return chi_square_band_probability(d.params.k, acc)
    if isinstance(d, FDist):
        p = d.params
        if p.d2 <= 4:
            raise MomentUndefinedError(
                f"variation probability undefined for d2 <= 4 (d2={p.d2})")
        ep = band_endpoints(p, acc)
        a1, b1 = 0.5 * p.d1, 0.5 * p.d2
        hi = reg_inc_beta(ep.b, a1, b1, acc)
        lo = reg_inc_beta(ep.d, a1, b1, acc) if ep.d > 0.0 else 0.0
        return hi - lo
    raise DomainError(f"unknown distribution object {d!r}")


def check_bound(p: FParams, floor: float = 0.0,
                acc: Accuracy = DEFAULT_ACCURACY) -> CheckOutcome:
    """Margin of the band probability over the normal baseline 2 Phi(1) - 1.

    Outside d1 in {1, 2, 3, 4} the claim is conjectured, not proved, and the
    outcome is annotated as exploratory.
    """
    margin = variation_probability(FDist(p), acc) - NORMAL_BAND
    note = "" if p.d1 in PROVED_D1 else "exploratory"
    return _outcome("bound_exceeds_normal", {"d1": p.d1, "d2": p.d2},
                    margin, floor, note)


def check_monotone_step(p: FParams, floor: float = STRICTNESS_FLOOR,
                        acc: Accuracy = DEFAULT_ACCURACY) -> CheckOutcome:
    """Margin of the step decrease: band prob at (d1, d2) minus at (d1, d2+2)."""
    here = variation_probability(FDist(p), acc)
    next_ = variation_probability(FDist(FParams(p.d1, p.d2 + 2)), acc)
    margin = here - next_
    note = "" if p.d1 in PROVED_D1 else "exploratory"
    return _outcome("step_decreasing", {"d1": p.d1, "d2": p.d2},
                    margin, floor, note)


def check_limit(d1: int, d2_large: int, tol: float = 1e-3,
                acc: Accuracy = DEFAULT_ACCURACY) -> CheckOutcome:
    """Agreement of the band probability at large d2 with its chi-square limit.

    F(d1, d2) converges in distribution to chi-square(d1)/d1, so the band
    probability approaches the chi-square(d1) band probability; margin is
    tol minus the observed absolute gap.
    """
    if d2_large < 1000:
        raise DomainError(f"limit check requires d2_large >= 1000, got {d2_large}")
    f_val = variation_probability(FDist(FParams(d1, d2_large)), acc)
    chi_val = chi_square_band_probability(d1, acc)
    margin = tol - abs(f_val - chi_val)
    return _outcome("limit_matches_chi_square",
                    {"d1": d1, "d2": d2_large, "tol": tol}, margin, 0.0)
