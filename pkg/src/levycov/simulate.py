"""Seeded simulation of bivariate Levy increments.

The process is X = B + J: a correlated Brownian part plus componentwise
symmetric alpha-stable jumps, each loading on one coordinate axis.
"""
from __future__ import annotations

import numpy as np

from .models import IncrementSample, LevyModel, SimulationConfig

_PSD_TOL = 1e-12
_SYM_TOL = 1e-10


def cholesky2(cov: np.ndarray) -> np.ndarray:
    """Lower-triangular factor L with L @ L.T == cov for a 2x2 PSD matrix.

    Rank-deficient input gets a zero column instead of an error.
    """
    cov = np.asarray(cov, dtype=float)
    if cov.shape != (2, 2):
        raise ValueError(f"expected 2x2 matrix, got shape {cov.shape}")
    if abs(cov[0, 1] - cov[1, 0]) > _SYM_TOL:
        raise ValueError("matrix must be symmetric")
    eigs = np.linalg.eigvalsh(cov)
    if eigs.min() < -_PSD_TOL:
        raise ValueError(f"matrix must be positive semi-definite, eigenvalues {eigs}")

    a, b, c = cov[0, 0], cov[0, 1], cov[1, 1]
    L = np.zeros((2, 2))
    if a > _PSD_TOL:
        L[0, 0] = np.sqrt(a)
        L[1, 0] = b / L[0, 0]
        L[1, 1] = np.sqrt(max(c - L[1, 0] ** 2, 0.0))
    else:
        # a ~ 0 forces b ~ 0 by PSD; first column stays zero
        L[1, 1] = np.sqrt(max(c, 0.0))
    return L


def sample_stable(alpha: float, scale: float, dt: float,
                  rng: np.random.Generator, size=None) -> np.ndarray | float:
    """Symmetric alpha-stable increment(s) over a step of length dt.

    Scale convention: the characteristic function of one draw at frequency v
    is exp(-scale**alpha * |v|**alpha * dt). For alpha = 2 this is Gaussian
    with variance 2 * scale**2 * dt; for alpha = 1 a Cauchy with scale
    parameter scale * dt.
    """
    if not 0.0 < alpha <= 2.0:
        raise ValueError(f"alpha must be in (0, 2], got {alpha}")
    if scale < 0.0:
        raise ValueError(f"scale must be nonnegative, got {scale}")
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")

    shape = () if size is None else size
    if scale == 0.0:
        return np.zeros(shape) if size is not None else 0.0

    step_scale = scale * dt ** (1.0 / alpha)
    if alpha == 2.0:
        out = rng.normal(0.0, np.sqrt(2.0) * step_scale, size=size)
    elif alpha == 1.0:
        v = rng.uniform(-np.pi / 2, np.pi / 2, size=size)
        out = step_scale * np.tan(v)
    else:
        # Chambers-Mallows-Stuck, symmetric specialization
        v = rng.uniform(-np.pi / 2, np.pi / 2, size=size)
        w = rng.exponential(1.0, size=size)
        s = (np.sin(alpha * v) / np.cos(v) ** (1.0 / alpha)
             * (np.cos((1.0 - alpha) * v) / w) ** ((1.0 - alpha) / alpha))
        out = step_scale * s
    return out


def simulate_increments(model: LevyModel, config: SimulationConfig) -> IncrementSample:
    """Draw n bivariate increments at mesh 1/n, bit-reproducible per seed.

    RNG consumption order is fixed: Gaussian block first, then the stable
    components in the order they appear on the model.
    """
    n = config.n
    dt = config.horizon / n
    rng = np.random.default_rng(config.seed)

    L = cholesky2(model.cov)
    z = rng.standard_normal((n, 2))
    inc = np.sqrt(dt) * z @ L.T
    inc += model.drift * dt
    for comp in model.jumps:
        draws = sample_stable(comp.alpha, comp.scale, dt, rng, size=n)
        inc[:, comp.axis - 1] += draws
    return IncrementSample(increments=inc)
