"""Data-driven frequency selection.

Oracle start of the scan, two pairwise-comparison stopping rules, the
theoretical balancing frequency, and the end-to-end adaptive estimate.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cf import Orientation, ecf_grid, truncated_inverse, weight
from .estimator import monotone_envelope, spectral_cov_grid
from .models import IncrementSample, LevyModel

# Threshold multipliers fixed by the selection rules.
BALANCING_MULTIPLIER = 8.0
RATES_MULTIPLIER = 2.0


@dataclass(frozen=True)
class FrequencyGrid:
    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size < 2:
            raise ValueError("grid needs at least 2 points")
        if pts[0] <= 0.0 or np.any(np.diff(pts) <= 0.0):
            raise ValueError("grid must be strictly increasing and positive")
        object.__setattr__(self, "points", pts)

    @property
    def K(self) -> int:
        return self.points.size - 1

    @classmethod
    def log_spaced(cls, lo: float = 0.1, hi: float = 50.0,
                   num: int = 500) -> "FrequencyGrid":
        return cls(np.geomspace(lo, hi, num))

    @classmethod
    def linear(cls, lo: float = 0.1, hi: float = 50.0,
               num: int = 500) -> "FrequencyGrid":
        return cls(np.linspace(lo, hi, num))


@dataclass(frozen=True)
class TraceEntry:
    j: int
    k: int
    distance: float
    threshold: float
    passed: bool


@dataclass(frozen=True)
class SelectionResult:
    index: int
    u: float
    estimate: float
    method: str
    trace: tuple[TraceEntry, ...] = ()
    u_start: float | None = None
    saturated: bool = False


@dataclass(frozen=True)
class OracleStart:
    u_start: float
    index: int
    c: float
    saturated: bool
    interval_lo: float | None = None
    interval_hi: float | None = None


@dataclass(frozen=True)
class BalancingConfig:
    bigC: float = 1.0
    A: float = 1.0
    kappa: float = 1.0
    delta: float = 0.5
    c: float = 0.5

    def __post_init__(self):
        if self.bigC <= 0.0 or self.A <= 0.0:
            raise ValueError("bigC and A must be positive")
        if not 0.0 < self.c <= 1.0:
            raise ValueError(f"c must be in (0, 1], got {self.c}")


def oracle_start_empirical(sample: IncrementSample, grid: FrequencyGrid,
                           c: float = 0.5) -> OracleStart:
    """Smallest grid point where the diagonal ECF modulus drops to c.

    Saturates at the last grid point when the modulus never reaches c.
    """
    if not 0.0 < c <= 1.0:
        raise ValueError(f"c must be in (0, 1], got {c}")
    mods = np.abs(ecf_grid(sample, grid.points, Orientation.DIAG))
    hits = np.flatnonzero(mods <= c)
    if hits.size == 0:
        return OracleStart(u_start=float(grid.points[-1]), index=grid.K,
                           c=c, saturated=True)
    idx = int(hits[0])
    return OracleStart(u_start=float(grid.points[idx]), index=idx,
                       c=c, saturated=False)


def oracle_start_interval(model: LevyModel, n: int,
                          K: float | None = None) -> tuple[float, float]:
    """Analytic bracket for the oracle start, scaling as sqrt(n).

    [sqrt(2 log 2 / (C_sum + K)), sqrt(2 log 2 / C_sum)] * sqrt(n), with K
    bounding the jump exponent from jump_bound_K when not supplied.
    """
    c_sum = model.cov_sum
    if c_sum <= 0.0:
        raise ValueError("pure-jump model (C_sum = 0) has no analytic bracket")
    if K is None:
        from .cf import jump_bound_K
        K = jump_bound_K(model)
    lo = np.sqrt(2.0 * np.log(2.0) / (c_sum + K)) * np.sqrt(n)
    hi = np.sqrt(2.0 * np.log(2.0) / c_sum) * np.sqrt(n)
    return float(lo), float(hi)


def lepskii_stop_rule(estimates: np.ndarray, bounds: np.ndarray,
                      bigC: float = 1.0, grid: FrequencyGrid | None = None,
                      degenerate: np.ndarray | None = None) -> SelectionResult:
    """Pairwise-comparison scan with data-dependent thresholds.

    Accepts index j+1 while |est[j+1] - est[k]| <= bigC * bounds[j+1] for
    every k <= j; the first violation stops the scan. Returns the last
    accepted index (K when no violation occurs). Flagged degenerate indices
    are skipped in the comparison loop; a degenerate candidate stops the scan.
    """
    estimates = np.asarray(estimates, dtype=float)
    bounds = np.asarray(bounds, dtype=float)
    K = estimates.size - 1
    if K < 1:
        raise ValueError("need at least 2 grid points")
    if degenerate is None:
        degenerate = np.zeros(estimates.size, dtype=bool)
    trace: list[TraceEntry] = []
    accepted = 0
    for j in range(K):
        cand = j + 1
        if degenerate[cand]:
            break
        threshold = bigC * bounds[cand]
        ok = True
        for k in range(j + 1):
            if degenerate[k]:
                continue
            dist = abs(estimates[cand] - estimates[k])
            passed = dist <= threshold
            trace.append(TraceEntry(j=j, k=k, distance=float(dist),
                                    threshold=float(threshold), passed=passed))
            if not passed:
                ok = False
                break
        if not ok:
            break
        accepted = cand
    u = float(grid.points[accepted]) if grid is not None else float(accepted)
    return SelectionResult(index=accepted, u=u, estimate=float(estimates[accepted]),
                           method="Lepskii1", trace=tuple(trace))


def lepskii_stop_rule_rates(estimates: np.ndarray, rates: np.ndarray,
                            A: float = 1.0, grid: FrequencyGrid | None = None,
                            degenerate: np.ndarray | None = None) -> SelectionResult:
    """Rate-threshold variant: smallest j whose forward comparisons all pass.

    j* is the first j with |est[j] - est[k]| <= 2A * rates[k] for every
    k in {j+1, ..., K}; K when no such j exists.
    """
    estimates = np.asarray(estimates, dtype=float)
    rates = np.asarray(rates, dtype=float)
    K = estimates.size - 1
    if K < 1:
        raise ValueError("need at least 2 grid points")
    if degenerate is None:
        degenerate = np.zeros(estimates.size, dtype=bool)
    trace: list[TraceEntry] = []
    chosen = K
    for j in range(K):
        if degenerate[j]:
            continue
        ok = True
        for k in range(j + 1, K + 1):
            if degenerate[k]:
                continue
            dist = abs(estimates[j] - estimates[k])
            threshold = RATES_MULTIPLIER * A * rates[k]
            passed = dist <= threshold
            trace.append(TraceEntry(j=j, k=k, distance=float(dist),
                                    threshold=float(threshold), passed=passed))
            if not passed:
                ok = False
                break
        if ok:
            chosen = j
            break
    u = float(grid.points[chosen]) if grid is not None else float(chosen)
    return SelectionResult(index=chosen, u=u, estimate=float(estimates[chosen]),
                           method="Lepskii2", trace=tuple(trace))


def balancing_select(estimates: np.ndarray, us: np.ndarray,
                     s_emp: np.ndarray,
                     degenerate: np.ndarray | None = None) -> SelectionResult:
    """Largest index whose estimate stays within budget of all smaller ones.

    The budget at comparison index j is 8 * s_emp[j], where s_emp is the
    empirical stochastic bound C (n log n)^(1/2) / U_j^2 w(U_j)^(-1) / |phi~|
    (enveloped by the caller so budgets never shrink along the scan).
    Inputs are already restricted to [U_start, U_end].
    """
    estimates = np.asarray(estimates, dtype=float)
    us = np.asarray(us, dtype=float)
    s_emp = np.asarray(s_emp, dtype=float)
    if us.size == 0:
        raise ValueError("restricted grid is empty")
    if degenerate is None:
        degenerate = np.zeros(estimates.size, dtype=bool)
    thresholds = BALANCING_MULTIPLIER * s_emp
    trace: list[TraceEntry] = []
    chosen = 0
    for i in range(us.size - 1, -1, -1):
        if degenerate[i]:
            continue
        ok = True
        for j in range(i + 1):
            if degenerate[j]:
                continue
            dist = abs(estimates[j] - estimates[i])
            passed = dist <= thresholds[j]
            trace.append(TraceEntry(j=j, k=i, distance=float(dist),
                                    threshold=float(thresholds[j]), passed=passed))
            if not passed:
                ok = False
                break
        if ok:
            chosen = i
            break
    return SelectionResult(index=chosen, u=float(us[chosen]),
                           estimate=float(estimates[chosen]),
                           method="Balancing", trace=tuple(trace))


def u_bal_theoretical(n: int, r: float, M: float, bigC: float = 1.0,
                      kappa: float = 1.0) -> float:
    """Frequency equating the two error envelopes: (4C/(kappa 2^(r/2) M))^(1/r) n^(1/r)."""
    if not 1.0 < r <= 2.0:
        raise ValueError(f"r must be in (1, 2], got {r}")
    return float((4.0 * bigC / (kappa * 2.0 ** (r / 2.0) * M)) ** (1.0 / r)
                 * n ** (1.0 / r))


def adaptive_estimate(sample: IncrementSample, grid: FrequencyGrid,
                      config: BalancingConfig = BalancingConfig()) -> SelectionResult:
    """Full data-driven pipeline: oracle start, bound assembly, balancing.

    The grid is restricted to [U_start, U_end]; the empirical stochastic
    bound gets a monotone envelope before the selection scan.
    """
    from .cf import TruncationParams, WeightParams

    start = oracle_start_empirical(sample, grid, config.c)
    us = grid.points[start.index:]
    estimates, mod_d, mod_a, degenerate = spectral_cov_grid(sample, us)
    n = sample.n
    tp = TruncationParams(kappa=config.kappa)
    wp = WeightParams(delta=config.delta)
    inv_d, _ = truncated_inverse(mod_d, n, us, tp, wp)
    inv_a, _ = truncated_inverse(mod_a, n, us, tp, wp)
    inv = np.maximum(inv_d, inv_a)
    s_emp = (config.bigC * us ** -2 * np.sqrt(n * np.log(n))
             / weight(us, wp) * inv)
    s_env = monotone_envelope(s_emp)
    sel = balancing_select(estimates, us, s_env, degenerate=degenerate)
    index = start.index + sel.index
    return SelectionResult(index=index, u=float(grid.points[index]),
                           estimate=sel.estimate, method=sel.method,
                           trace=sel.trace, u_start=start.u_start,
                           saturated=start.saturated)
