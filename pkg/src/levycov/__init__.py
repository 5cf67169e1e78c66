"""Spectral covariance estimation for bivariate Levy processes.

Simulation, empirical characteristic functions on the diagonal sets,
the spectral off-diagonal covariance estimator, and fully data-driven
frequency selection via stopping rules and a balancing principle.
"""
from .adapt import (
    BalancingConfig,
    FrequencyGrid,
    OracleStart,
    SelectionResult,
    adaptive_estimate,
    balancing_select,
    lepskii_stop_rule,
    lepskii_stop_rule_rates,
    oracle_start_empirical,
    oracle_start_interval,
    u_bal_theoretical,
)
from .cf import (
    CfValue,
    DiagonalFrequency,
    Orientation,
    TruncationParams,
    WeightParams,
    ecf,
    ecf_grid,
    jump_bound_K,
    kappa_n,
    theoretical_cf_modulus,
    truncated_inverse,
    weight,
)
from .estimator import (
    BoundCurves,
    BoundParams,
    CovEstimate,
    bound_curves,
    deterministic_bound,
    error_decomposition,
    minimax_rate,
    monotone_envelope,
    optimal_U,
    spectral_cov,
    spectral_cov_grid,
    stochastic_bound_emp,
    stochastic_bound_theo,
)
from .models import (
    IncrementSample,
    LevyModel,
    SimulationConfig,
    StableComponent,
    load_model_config,
    model_from_dict,
)
from .simulate import cholesky2, sample_stable, simulate_increments

__version__ = "0.1.0"
