"""Cross-validation: numeric pipeline values against the closed-form curves.

Every check sweeps its own grid, compares the two routes pointwise and
reports the maximum absolute deviation.  The perturb argument shifts the
r values fed to the numeric side only, which makes the harness fail on
purpose; it exists so the failure path itself can be tested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fock import DensityMatrix, partial_trace, w_state
from .measures import negativity, von_neumann_entropy
from .oracles import (
    R_MAX,
    entropy_one_accel,
    n_ab_const,
    n_d1_abc,
    n_i_d1,
    n_pair_accel_both,
    n_pair_accel_one,
    vanishing_threshold,
)
from .rindler import observed_density

GRID_1D = 101
GRID_2D = 21
VALUE_TOL = 1e-10
CONSTANT_TOL = 1e-12
THRESHOLD_TOL = 1e-6
PRINTED_THRESHOLD = 0.472473
PRINTED_THRESHOLD_TOL = 1e-4


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_dev: float
    tol: float
    passed: bool
    detail: str = ""


def _shift(r: float, perturb: float) -> float:
    return min(max(r + perturb, 0.0), R_MAX)


def _one_observer(r_d: float) -> DensityMatrix:
    return observed_density(w_state(4), {"D": r_d})


def _two_observer(r_c: float, r_d: float) -> DensityMatrix:
    return observed_density(w_state(4), {"C": r_c, "D": r_d})


def _pair_negativity(rho: DensityMatrix, i: int, j: int) -> float:
    return negativity(partial_trace(rho, [i, j]), [0])


def _check_n_d1_abc(perturb: float) -> CheckResult:
    grid = np.linspace(0.0, R_MAX, GRID_1D)
    dev = max(abs(negativity(_one_observer(_shift(r, perturb)), [3]) - n_d1_abc(r))
              for r in grid)
    return CheckResult("n_d1_abc", dev, VALUE_TOL, dev <= VALUE_TOL,
                       f"{GRID_1D} points, one accelerated observer")


def _check_n_ab_const(perturb: float) -> CheckResult:
    expected = n_ab_const()
    dev = 0.0
    for r in np.linspace(0.0, R_MAX, GRID_1D):
        dev = max(dev, abs(_pair_negativity(_one_observer(_shift(r, perturb)), 0, 1) - expected))
    for r_c in np.linspace(0.0, R_MAX, 6):
        for r_d in np.linspace(0.0, R_MAX, 6):
            rho = _two_observer(_shift(r_c, perturb), _shift(r_d, perturb))
            dev = max(dev, abs(_pair_negativity(rho, 0, 1) - expected))
    return CheckResult("n_ab_const", dev, CONSTANT_TOL, dev <= CONSTANT_TOL,
                       "both scenarios; constant for every acceleration")


def _check_n_i_d1(perturb: float) -> CheckResult:
    grid = np.linspace(0.0, R_MAX, GRID_1D)
    dev = max(abs(_pair_negativity(_one_observer(_shift(r, perturb)), 0, 3) - n_i_d1(r))
              for r in grid)
    return CheckResult("n_i_d1", dev, VALUE_TOL, dev <= VALUE_TOL,
                       f"{GRID_1D} points, pair of inertial and accelerated")


def _check_n_pair_accel_one(perturb: float) -> CheckResult:
    grid = np.linspace(0.0, R_MAX, GRID_2D)
    dev = 0.0
    for r_c in grid:
        for r_d in grid:
            rho = _two_observer(_shift(r_c, perturb), _shift(r_d, perturb))
            dev = max(dev, abs(_pair_negativity(rho, 0, 2) - n_pair_accel_one(r_c)))
    return CheckResult("n_pair_accel_one", dev, VALUE_TOL, dev <= VALUE_TOL,
                       f"{GRID_2D}x{GRID_2D} grid; independent of the other acceleration")


def _check_n_pair_accel_both(perturb: float) -> CheckResult:
    grid = np.linspace(0.0, R_MAX, GRID_2D)
    dev = 0.0
    for r_c in grid:
        for r_d in grid:
            rho = _two_observer(_shift(r_c, perturb), _shift(r_d, perturb))
            dev = max(dev, abs(_pair_negativity(rho, 2, 3) - n_pair_accel_both(r_c, r_d)))
    return CheckResult("n_pair_accel_both", dev, VALUE_TOL, dev <= VALUE_TOL,
                       f"{GRID_2D}x{GRID_2D} grid, pair of accelerated observers")


def _check_entropy(perturb: float) -> CheckResult:
    grid = np.linspace(0.0, R_MAX, GRID_1D)
    dev = max(abs(von_neumann_entropy(_one_observer(_shift(r, perturb))) - entropy_one_accel(r))
              for r in grid)
    return CheckResult("entropy_one_accel", dev, VALUE_TOL, dev <= VALUE_TOL,
                       f"{GRID_1D} points, one accelerated observer")


def _check_vanishing_threshold(perturb: float) -> CheckResult:
    computed = vanishing_threshold() + perturb
    analytic = 0.5 * math.acos(2.0 - math.sqrt(2.0))
    dev = abs(computed - analytic)
    printed_dev = abs(computed - PRINTED_THRESHOLD)
    passed = dev <= THRESHOLD_TOL and printed_dev <= PRINTED_THRESHOLD_TOL
    detail = (f"r* = {computed:.10f}, |r* - {PRINTED_THRESHOLD}| = {printed_dev:.3e} "
              f"(tol {PRINTED_THRESHOLD_TOL:g})")
    return CheckResult("vanishing_threshold", dev, THRESHOLD_TOL, passed, detail)


CHECKS = {
    "n_d1_abc": _check_n_d1_abc,
    "n_ab_const": _check_n_ab_const,
    "n_i_d1": _check_n_i_d1,
    "n_pair_accel_one": _check_n_pair_accel_one,
    "n_pair_accel_both": _check_n_pair_accel_both,
    "entropy_one_accel": _check_entropy,
    "vanishing_threshold": _check_vanishing_threshold,
}


def run_check(names: Sequence[str] | None = None, perturb: float = 0.0) -> list[CheckResult]:
    """Run the named checks (all of them by default) in registry order."""
    if names is None or list(names) == ["all"]:
        selected = list(CHECKS)
    else:
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            raise ValueError(
                f"unknown oracle name(s) {unknown}; known: {', '.join(CHECKS)}")
        selected = [n for n in CHECKS if n in set(names)]
    return [CHECKS[name](perturb) for name in selected]
