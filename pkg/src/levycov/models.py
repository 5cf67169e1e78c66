"""Model and sample containers for the bivariate Levy simulator."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_SYM_TOL = 1e-10
_PSD_TOL = 1e-12


@dataclass(frozen=True)
class StableComponent:
    """Symmetric alpha-stable jump component loading on a single coordinate.

    The one-step characteristic function of the component at frequency v is
    exp(-scale**alpha * |v|**alpha * dt).
    """

    alpha: float
    scale: float
    axis: int

    def __post_init__(self):
        if not 0.0 < self.alpha <= 2.0:
            raise ValueError(f"alpha must be in (0, 2], got {self.alpha}")
        if self.scale < 0.0:
            raise ValueError(f"scale must be nonnegative, got {self.scale}")
        if self.axis not in (1, 2):
            raise ValueError(f"axis must be 1 or 2, got {self.axis}")


@dataclass(frozen=True)
class LevyModel:
    """Bivariate Levy model: correlated Brownian part, drift, and
    componentwise symmetric-stable jumps."""

    cov: np.ndarray
    drift: np.ndarray = field(default_factory=lambda: np.zeros(2))
    jumps: tuple[StableComponent, ...] = ()

    def __post_init__(self):
        cov = np.asarray(self.cov, dtype=float)
        drift = np.asarray(self.drift, dtype=float)
        if cov.shape != (2, 2):
            raise ValueError(f"cov must be 2x2, got shape {cov.shape}")
        if drift.shape != (2,):
            raise ValueError(f"drift must be a 2-vector, got shape {drift.shape}")
        if abs(cov[0, 1] - cov[1, 0]) > _SYM_TOL:
            raise ValueError("cov must be symmetric")
        eigs = np.linalg.eigvalsh(cov)
        if eigs.min() < -_PSD_TOL:
            raise ValueError(f"cov must be positive semi-definite, eigenvalues {eigs}")
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "drift", drift)
        object.__setattr__(self, "jumps", tuple(self.jumps))

    @property
    def c12(self) -> float:
        return float(self.cov[0, 1])

    @property
    def cov_sum(self) -> float:
        """Sum of all covariance entries, the diagonal quadratic-form factor."""
        return float(self.cov.sum())

    @property
    def cov_antidiag(self) -> float:
        """C11 + C22 - 2*C12, the anti-diagonal quadratic-form factor."""
        return float(self.cov[0, 0] + self.cov[1, 1] - 2.0 * self.cov[0, 1])

    def class_bound(self) -> float:
        """Max absolute row sum of the covariance matrix."""
        return float(np.abs(self.cov).sum(axis=1).max())


@dataclass(frozen=True)
class SimulationConfig:
    n: int
    seed: int
    horizon: float = 1.0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.horizon != 1.0:
            raise ValueError("horizon is fixed at 1.0")


@dataclass(frozen=True)
class IncrementSample:
    """n bivariate increments observed at mesh 1/n."""

    increments: np.ndarray

    def __post_init__(self):
        inc = np.asarray(self.increments, dtype=float)
        if inc.ndim != 2 or inc.shape[1] != 2:
            raise ValueError(f"increments must have shape (n, 2), got {inc.shape}")
        if not np.all(np.isfinite(inc)):
            raise ValueError("increments must be finite")
        object.__setattr__(self, "increments", inc)

    @property
    def n(self) -> int:
        return self.increments.shape[0]

    @property
    def mesh(self) -> float:
        return 1.0 / self.n

    @property
    def dx1(self) -> np.ndarray:
        return self.increments[:, 0]

    @property
    def dx2(self) -> np.ndarray:
        return self.increments[:, 1]


def model_from_dict(d: dict) -> LevyModel:
    jumps = tuple(
        StableComponent(alpha=float(j["alpha"]), scale=float(j["scale"]),
                        axis=int(j["axis"]))
        for j in d.get("jumps", [])
    )
    return LevyModel(cov=np.asarray(d["cov"], dtype=float),
                     drift=np.asarray(d.get("drift", [0.0, 0.0]), dtype=float),
                     jumps=jumps)


def load_model_config(path) -> tuple[LevyModel, dict]:
    """Read a model plus simulation keys (n, seed) from a YAML/JSON file.

    Returns the model and the raw mapping for the remaining keys.
    """
    import yaml

    with open(path) as fh:
        raw = yaml.safe_load(fh)
    if not isinstance(raw, dict):
        raise ValueError(f"config file {path} must contain a mapping")
    return model_from_dict(raw), raw
