"""Spectral covariance estimator and its error-bound curves."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cf import (
    Orientation,
    TruncationParams,
    WeightParams,
    ecf_grid,
    theoretical_cf_modulus_grid,
    truncated_inverse,
    weight,
)
from .models import IncrementSample, LevyModel


@dataclass(frozen=True)
class CovEstimate:
    u: float
    value: float
    phi_diag_mod: float
    phi_anti_mod: float
    degenerate: bool


@dataclass(frozen=True)
class BoundParams:
    bigC: float = 1.0
    M: float = 1.0
    r: float = 1.5
    kappa: float = 1.0
    delta: float = 0.5

    def __post_init__(self):
        if self.bigC <= 0.0 or self.M <= 0.0:
            raise ValueError("bigC and M must be positive")
        if not 1.0 < self.r <= 2.0:
            raise ValueError(f"r must be in (1, 2], got {self.r}")

    @property
    def wp(self) -> WeightParams:
        return WeightParams(delta=self.delta)

    @property
    def tp(self) -> TruncationParams:
        return TruncationParams(kappa=self.kappa)


@dataclass(frozen=True)
class BoundCurves:
    grid: np.ndarray
    s_theo: np.ndarray | None
    s_emp: np.ndarray
    s_env: np.ndarray
    d: np.ndarray


def spectral_cov_grid(sample: IncrementSample, us: np.ndarray):
    """Vectorized estimator over a grid.

    Returns (values, phi_diag_mod, phi_anti_mod, degenerate). A zero ECF
    modulus zeroes its log term by the indicator convention and marks the
    point degenerate.
    """
    us = np.asarray(us, dtype=float)
    if np.any(us <= 0.0):
        raise ValueError("frequencies must be positive")
    n = sample.n
    mod_d = np.abs(ecf_grid(sample, us, Orientation.DIAG))
    mod_a = np.abs(ecf_grid(sample, us, Orientation.ANTIDIAG))
    degenerate = (mod_d == 0.0) | (mod_a == 0.0)
    log_d = np.where(mod_d > 0.0, np.log(np.where(mod_d > 0.0, mod_d, 1.0)), 0.0)
    log_a = np.where(mod_a > 0.0, np.log(np.where(mod_a > 0.0, mod_a, 1.0)), 0.0)
    values = n / (2.0 * us ** 2) * (log_a - log_d)
    return values, mod_d, mod_a, degenerate


def spectral_cov(sample: IncrementSample, U: float) -> CovEstimate:
    """Estimator n/(2U^2) * (log|phi^(u~)| - log|phi^(u)|) at one frequency."""
    values, mod_d, mod_a, degenerate = spectral_cov_grid(sample, np.array([U]))
    return CovEstimate(u=float(U), value=float(values[0]),
                       phi_diag_mod=float(mod_d[0]), phi_anti_mod=float(mod_a[0]),
                       degenerate=bool(degenerate[0]))


def stochastic_bound_theo(model: LevyModel, n: int, us, p: BoundParams):
    """s_n(U) = C * U^-2 * (n log n)^(1/2) * w(U)^-1 / |phi_n(u)|."""
    us = np.asarray(us, dtype=float)
    if np.any(us <= 0.0):
        raise ValueError("frequencies must be positive")
    phi = theoretical_cf_modulus_grid(model, n, us, Orientation.DIAG)
    out = p.bigC * us ** -2 * np.sqrt(n * np.log(n)) / weight(us, p.wp) / phi
    return float(out) if out.ndim == 0 else out


def stochastic_bound_emp(sample: IncrementSample, us, p: BoundParams):
    """s~_n(U): same shape with the larger of the two truncated inverses."""
    us = np.asarray(us, dtype=float)
    if np.any(us <= 0.0):
        raise ValueError("frequencies must be positive")
    n = sample.n
    mod_d = np.abs(ecf_grid(sample, us, Orientation.DIAG))
    mod_a = np.abs(ecf_grid(sample, us, Orientation.ANTIDIAG))
    inv_d, _ = truncated_inverse(mod_d, n, us, p.tp, p.wp)
    inv_a, _ = truncated_inverse(mod_a, n, us, p.tp, p.wp)
    inv = np.maximum(inv_d, inv_a)
    out = p.bigC * us ** -2 * np.sqrt(n * np.log(n)) / weight(us, p.wp) * inv
    return float(out) if out.ndim == 0 else out


def deterministic_bound(us, p: BoundParams):
    """d(U) = M * 2^(r/2) / U^(2-r), the bias envelope."""
    us = np.asarray(us, dtype=float)
    if np.any(us <= 0.0):
        raise ValueError("frequencies must be positive")
    out = p.M * 2.0 ** (p.r / 2.0) / us ** (2.0 - p.r)
    return float(out) if out.ndim == 0 else out


def minimax_rate(n: int, r: float) -> float:
    """n^(-1/2) for r <= 1, else (n log n)^((r-2)/2)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0.0 <= r < 2.0:
        raise ValueError(f"r must be in [0, 2), got {r}")
    if r <= 1.0:
        return n ** -0.5
    return float((n * np.log(n)) ** ((r - 2.0) / 2.0))


def optimal_U(n: int, r: float, M: float) -> float:
    """sqrt(n) for r <= 1, else sqrt((r-1) * n * log(n) / M)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if r <= 1.0:
        return float(np.sqrt(n))
    return float(np.sqrt((r - 1.0) * n * np.log(n) / M))


def monotone_envelope(curve: np.ndarray, start_index: int = 0) -> np.ndarray:
    """Running maximum of the curve from start_index onward.

    Entries before start_index are passed through unchanged.
    """
    curve = np.asarray(curve, dtype=float)
    if not 0 <= start_index < curve.size:
        raise IndexError(f"start_index {start_index} out of range for size {curve.size}")
    out = curve.copy()
    out[start_index:] = np.maximum.accumulate(curve[start_index:])
    return out


@dataclass(frozen=True)
class ErrorDecomposition:
    h_term: float
    d_term: float
    degenerate: bool


def error_decomposition(sample: IncrementSample, model: LevyModel,
                        U: float, c12: float | None = None) -> ErrorDecomposition:
    """Realized stochastic term H_n(U) and deterministic term D(U).

    Only meaningful in simulation mode, where the theoretical CF is known.
    H_n + D equals the estimation error exactly on nondegenerate draws, so
    |C^12_n(U) - C12| <= |H_n| + |D|. Degenerate points carry +inf sentinels.
    """
    if U <= 0.0:
        raise ValueError("frequency must be positive")
    n = sample.n
    if c12 is None:
        c12 = model.c12
    est = spectral_cov(sample, U)
    if est.degenerate:
        return ErrorDecomposition(np.inf, np.inf, True)
    phi_d = theoretical_cf_modulus_grid(model, n, U, Orientation.DIAG)
    phi_a = theoretical_cf_modulus_grid(model, n, U, Orientation.ANTIDIAG)
    scale = n / (2.0 * U ** 2)
    theo_logdiff = scale * (np.log(phi_a) - np.log(phi_d))
    d_term = theo_logdiff - c12
    h_term = est.value - theo_logdiff
    return ErrorDecomposition(float(h_term), float(d_term), False)


def bound_curves(sample: IncrementSample, us: np.ndarray, p: BoundParams,
                 model: LevyModel | None = None,
                 envelope_start: int = 0) -> BoundCurves:
    """Assemble all bound curves over a grid in one deterministic pass."""
    us = np.asarray(us, dtype=float)
    s_emp = stochastic_bound_emp(sample, us, p)
    s_theo = None
    if model is not None:
        s_theo = stochastic_bound_theo(model, sample.n, us, p)
    env_source = s_theo if s_theo is not None else s_emp
    s_env = monotone_envelope(env_source, envelope_start)
    d = deterministic_bound(us, p)
    return BoundCurves(grid=us, s_theo=s_theo, s_emp=s_emp, s_env=s_env, d=d)
