"""Command-line front end.

Commands
--------
varprob    print the variation probability of one distribution
endpoints  varprob for an F distribution with the endpoint details
sweep      run selected checks over a (d1, d2) grid, emit a CSV/JSON report
prove      run the full verification program for one case d1 in {1,2,3,4}
oracle     cross-validate the analytic value against Monte Carlo and quadrature
explore    scan the conjectured region d1 >= 5 (never affects exit status)

Exit codes: 0 all checks passed, 1 at least one non-exploratory check
failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .distributions import FDist, FParams, chi_square, f_dist
from .errors import VarcompError
from .oracle import mc_variation_probability, quad_beta_integral
from .programs import (
    PROVED_D1_CASES,
    certificate_rows,
    explore_rows,
    prove_rows,
    table_rows,
)
from .reporting import (
    has_failures,
    rows_from_outcome,
    rows_from_step_report,
    summarize,
    write_report,
)
from .specfun import log_beta
from .varband import (
    STRICTNESS_FLOOR,
    band_endpoints,
    check_bound,
    check_limit,
    check_monotone_step,
    variation_band,
    variation_probability,
)
from .proofcheck.steps import check_step_inequalities

_CHECK_NAMES = ("bound", "monotone", "limit", "steps", "tables", "exploratory")
_VARIANCE_CHECKS = {"bound", "monotone", "steps"}


def _parse_range(text: str) -> tuple:
    """Inclusive integer range 'lo..hi', or a single value 'n'."""
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or lo..hi range, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_checks(text: str) -> tuple:
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    for name in names:
        if name not in _CHECK_NAMES:
            raise argparse.ArgumentTypeError(
                f"unknown check {name!r}; choose from {', '.join(_CHECK_NAMES)}")
    if not names:
        raise argparse.ArgumentTypeError("at least one check is required")
    return names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varcomp",
        description="Variation probabilities of F / chi-square / normal "
                    "distributions and the machine-checked inequality verifier.")
    parser.add_argument("--version", action="version", version=f"varcomp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_var = sub.add_parser("varprob", help="variation probability of one distribution")
    p_var.add_argument("--dist", choices=("f", "chisq", "normal"), required=True)
    p_var.add_argument("--d1", type=int)
    p_var.add_argument("--d2", type=int)
    p_var.add_argument("--k", type=int)
    p_var.add_argument("--endpoints", action="store_true",
                       help="also print the endpoint images and band limits (F only)")
    p_var.add_argument("--format", choices=("text", "json"), default="text")

    p_end = sub.add_parser("endpoints", help="varprob --dist f --endpoints")
    p_end.add_argument("--d1", type=int, required=True)
    p_end.add_argument("--d2", type=int, required=True)
    p_end.add_argument("--format", choices=("text", "json"), default="text")

    p_sweep = sub.add_parser("sweep", help="run checks over a (d1, d2) grid")
    p_sweep.add_argument("--d1", type=_parse_range, required=True, metavar="LO..HI")
    p_sweep.add_argument("--d2", type=_parse_range, default=(5, 400), metavar="LO..HI",
                         help="denominator df range (default 5..400)")
    p_sweep.add_argument("--check", type=_parse_checks, required=True,
                         metavar="NAME[,NAME...]",
                         help=f"subset of: {', '.join(_CHECK_NAMES)}")
    p_sweep.add_argument("--out", help="report path (default: stdout)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--floor", type=float, default=STRICTNESS_FLOOR,
                         help="strictness floor for strict inequalities")
    p_sweep.add_argument("--limit-tol", type=float, default=1e-3)
    p_sweep.add_argument("--d2-large", type=int, default=10_000,
                         help="d2 used by the limit check")
    p_sweep.add_argument("--exploratory", action="store_true",
                         help="also evaluate grid points outside the proved region")
    p_sweep.add_argument("--jobs", type=int, default=0,
                         help="worker processes (default: available parallelism)")

    p_prove = sub.add_parser("prove", help="full verification program for one d1")
    p_prove.add_argument("--d1", type=int, required=True)
    p_prove.add_argument("--d2-max", type=int, default=400)
    p_prove.add_argument("--floor", type=float, default=STRICTNESS_FLOOR)
    p_prove.add_argument("--out", help="report path (default: summary to stdout)")
    p_prove.add_argument("--format", choices=("csv", "json"), default="csv")

    p_or = sub.add_parser("oracle", help="analytic vs Monte Carlo vs quadrature")
    p_or.add_argument("--d1", type=int, required=True)
    p_or.add_argument("--d2", type=int, required=True)
    p_or.add_argument("--samples", type=int, default=1_000_000)
    p_or.add_argument("--seed", type=int, default=0)
    p_or.add_argument("--quad-tol", type=float, default=1e-10)

    p_ex = sub.add_parser("explore", help="scan the conjectured region d1 >= 5")
    p_ex.add_argument("--d1", type=_parse_range, required=True, metavar="LO..HI")
    p_ex.add_argument("--d2", type=_parse_range, required=True, metavar="LO..HI")
    p_ex.add_argument("--out", help="report path (default: stdout)")
    p_ex.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ex.add_argument("--floor", type=float, default=STRICTNESS_FLOOR)
    return parser


# ---------------------------------------------------------------------------
# sweep machinery
# ---------------------------------------------------------------------------

def _sweep_cell(args) -> list:
    """One grid cell of a sweep; top-level so worker processes can pickle it."""
    check, d1, d2, floor, extra = args
    p = FParams(d1, d2)
    exploratory = d1 not in PROVED_D1_CASES
    if check == "bound":
        return rows_from_outcome(check_bound(p, floor=0.0))
    if check == "monotone":
        return rows_from_outcome(check_monotone_step(p, floor=floor))
    if check == "limit":
        return rows_from_outcome(check_limit(d1, extra["d2_large"], extra["limit_tol"]))
    if check == "steps":
        return rows_from_step_report(
            check_step_inequalities(p, floor), floor, exploratory=exploratory)
    raise ValueError(f"unexpected check {check!r}")


def _run_cells(cells, jobs: int) -> list:
    if jobs == 0:
        jobs = os.cpu_count() or 1
    rows: list = []
    if jobs == 1 or len(cells) < 8:
        for cell in cells:
            rows.extend(_sweep_cell(cell))
        return rows
    chunk = max(1, len(cells) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for out in pool.map(_sweep_cell, cells, chunksize=chunk):
            rows.extend(out)
    return rows


def _cmd_sweep(ns) -> int:
    d1_lo, d1_hi = ns.d1
    d2_lo, d2_hi = ns.d2
    checks = ns.check
    if d1_lo < 1:
        print("error: d1 must be >= 1", file=sys.stderr)
        return 2
    if any(c in _VARIANCE_CHECKS for c in checks) and d2_lo < 5:
        print("error: checks needing a finite variance require d2 >= 5",
              file=sys.stderr)
        return 2
    d1_values = list(range(d1_lo, d1_hi + 1))
    if not ns.exploratory:
        in_region = [d1 for d1 in d1_values if d1 in PROVED_D1_CASES]
        skipped = sorted(set(d1_values) - set(in_region))
        if skipped and any(c in ("bound", "monotone", "steps") for c in checks):
            print(f"note: skipping conjectured d1 values {skipped} "
                  f"(pass --exploratory to include them)", file=sys.stderr)
        grid_d1 = in_region
    else:
        grid_d1 = d1_values

    extra = {"d2_large": ns.d2_large, "limit_tol": ns.limit_tol}
    cells = []
    for check in checks:
        if check == "tables":
            continue
        if check == "limit":
            cells += [(check, d1, ns.d2_large, ns.floor, extra) for d1 in d1_values]
        elif check == "exploratory":
            continue
        elif check == "steps":
            cells += [(check, d1, d2, ns.floor, extra)
                      for d1 in grid_d1
                      for d2 in range(d2_lo, d2_hi + 1)]
        else:
            cells += [(check, d1, d2, ns.floor, extra)
                      for d1 in grid_d1
                      for d2 in range(d2_lo, d2_hi + 1)]
    rows = _run_cells(cells, ns.jobs)
    if "tables" in checks:
        rows += table_rows(ns.floor)
        rows += certificate_rows()
    if "exploratory" in checks:
        for d1 in d1_values:
            if d1 >= 5:
                rows += explore_rows(d1, range(max(d2_lo, 7), d2_hi + 1), ns.floor)

    header = {
        "version": __version__,
        "spec": {
            "command": "sweep",
            "d1": f"{d1_lo}..{d1_hi}",
            "d2": f"{d2_lo}..{d2_hi}",
            "checks": list(checks),
            "seed": ns.seed,
            "floor": ns.floor,
            "d2_large": ns.d2_large,
            "limit_tol": ns.limit_tol,
            "exploratory": bool(ns.exploratory),
        },
    }
    text = write_report(rows, header, ns.format, ns.out)
    if not ns.out:
        sys.stdout.write(text)
    else:
        counts = summarize(rows)
        print(f"wrote {ns.out}: " + " ".join(f"{k}={v}" for k, v in counts.items()))
    return 1 if has_failures(rows) else 0


def _cmd_prove(ns) -> int:
    if ns.d1 not in PROVED_D1_CASES:
        print(f"error: prove covers d1 in {sorted(PROVED_D1_CASES)}; "
              f"use 'explore' for d1 >= 5", file=sys.stderr)
        return 2
    rows = prove_rows(ns.d1, ns.d2_max, ns.floor)
    counts = summarize(rows)
    header = {
        "version": __version__,
        "spec": {"command": "prove", "d1": ns.d1, "d2_max": ns.d2_max,
                 "floor": ns.floor},
    }
    if ns.out:
        write_report(rows, header, ns.format, ns.out)
        print(f"wrote {ns.out}")
    by_claim = {}
    for row in rows:
        by_claim.setdefault(row.check_id, []).append(row)
    for claim in sorted(by_claim):
        group = by_claim[claim]
        margins = [r.margin for r in group if r.margin is not None]
        worst = f"worst margin {min(margins):.3e}" if margins else "not applicable"
        ok = not has_failures(group)
        print(f"{'PASS' if ok else 'FAIL'} {claim} ({len(group)} rows, {worst})")
    print("summary: " + " ".join(f"{k}={v}" for k, v in counts.items()))
    return 1 if has_failures(rows) else 0


def _cmd_oracle(ns) -> int:
    if ns.d2 < 5:
        print("error: the band probability requires d2 >= 5", file=sys.stderr)
        return 2
    if ns.samples < 10_000:
        print("error: --samples must be at least 10000", file=sys.stderr)
        return 2
    p = FParams(ns.d1, ns.d2)
    analytic = variation_probability(FDist(p))
    mc = mc_variation_probability(p, ns.samples, ns.seed)
    ep = band_endpoints(p)
    a, b = 0.5 * p.d1, 0.5 * p.d2
    scale = math.exp(log_beta(a, b))
    q_hi = quad_beta_integral(a, b, 0.0, ep.b, ns.quad_tol * scale)
    if ep.d > 0.0:
        q_lo = quad_beta_integral(a, b, 0.0, ep.d, ns.quad_tol * scale)
        quad_value = (q_hi.value - q_lo.value) / scale
        quad_err = (q_hi.abs_error_bound + q_lo.abs_error_bound) / scale
        evals = q_hi.evaluations + q_lo.evaluations
    else:
        quad_value = q_hi.value / scale
        quad_err = q_hi.abs_error_bound / scale
        evals = q_hi.evaluations
    mc_gap = abs(analytic - mc.estimate)
    mc_ok = mc_gap < 4.0 * mc.stderr
    quad_gap = abs(analytic - quad_value)
    quad_ok = quad_gap < 1e-8
    print(f"analytic    {analytic!r}")
    print(f"monte-carlo {mc.estimate!r} stderr {mc.stderr:.3e} "
          f"(n={mc.n}, seed={mc.seed}) gap/stderr {mc_gap / mc.stderr:.2f} "
          f"{'agree' if mc_ok else 'DISAGREE'}")
    print(f"quadrature  {quad_value!r} err-bound {quad_err:.3e} "
          f"(evals={evals}) gap {quad_gap:.3e} "
          f"{'agree' if quad_ok else 'DISAGREE'}")
    return 0 if (mc_ok and quad_ok) else 1


def _varprob_payload(ns) -> dict:
    if ns.dist == "normal":
        from .distributions import StdNormal
        return {"dist": "normal", "prob": variation_probability(StdNormal())}
    if ns.dist == "chisq":
        if ns.k is None:
            raise VarcompError("--k is required for --dist chisq")
        return {"dist": "chisq", "k": ns.k,
                "prob": variation_probability(chi_square(ns.k))}
    if ns.d1 is None or ns.d2 is None:
        raise VarcompError("--d1 and --d2 are required for --dist f")
    if ns.d2 <= 4:
        raise VarcompError(f"variance undefined for d2 <= 4 (d2={ns.d2})")
    p = FParams(ns.d1, ns.d2)
    payload = {"dist": "f", "d1": ns.d1, "d2": ns.d2,
               "prob": variation_probability(f_dist(ns.d1, ns.d2))}
    if ns.endpoints:
        ep = band_endpoints(p)
        band = variation_band(p)
        payload.update({
            "a": ep.a, "b": ep.b, "c": ep.c, "d": ep.d,
            "region": ep.region.value,
            "band_lower": band.lower, "band_upper": band.upper,
        })
    return payload


def _cmd_varprob(ns) -> int:
    payload = _varprob_payload(ns)
    if ns.format == "json":
        print(json.dumps(payload, sort_keys=True))
        return 0
    if set(payload) == {"dist", "prob"} or not ns.endpoints:
        print(repr(payload["prob"]))
        return 0
    for key in ("prob", "a", "b", "c", "d", "region", "band_lower", "band_upper"):
        value = payload[key]
        print(f"{key} {value!r}" if isinstance(value, float) else f"{key} {value}")
    return 0


def _cmd_endpoints(ns) -> int:
    ns.dist = "f"
    ns.endpoints = True
    ns.k = None
    return _cmd_varprob(ns)


def _cmd_explore(ns) -> int:
    d1_lo, d1_hi = ns.d1
    d2_lo, d2_hi = ns.d2
    if d1_lo < 5:
        print("error: explore is for d1 >= 5; use sweep/prove below that",
              file=sys.stderr)
        return 2
    if d2_lo < 5:
        print("error: d2 must be >= 5", file=sys.stderr)
        return 2
    rows = []
    for d1 in range(d1_lo, d1_hi + 1):
        rows += explore_rows(d1, range(max(d2_lo, 7), d2_hi + 1), ns.floor)
    header = {
        "version": __version__,
        "spec": {"command": "explore", "d1": f"{d1_lo}..{d1_hi}",
                 "d2": f"{d2_lo}..{d2_hi}", "floor": ns.floor},
    }
    text = write_report(rows, header, ns.format, ns.out)
    if not ns.out:
        sys.stdout.write(text)
    else:
        counts = summarize(rows)
        print(f"wrote {ns.out}: " + " ".join(f"{k}={v}" for k, v in counts.items()))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "varprob": _cmd_varprob,
        "endpoints": _cmd_endpoints,
        "sweep": _cmd_sweep,
        "prove": _cmd_prove,
        "oracle": _cmd_oracle,
        "explore": _cmd_explore,
    }
    try:
        return handlers[ns.command](ns)
    except VarcompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
