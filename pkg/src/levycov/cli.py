"""Command-line interface for simulation, estimation, and selection runs."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .adapt import BalancingConfig, FrequencyGrid, adaptive_estimate
from .estimator import BoundParams, bound_curves, spectral_cov_grid
from .harness import (
    DESK_BIGC,
    ExperimentSpec,
    Mode,
    reference_model,
    run_figure_experiment,
    run_oracle_start_experiment,
    run_property_suite,
    write_csv,
)
from .models import IncrementSample, LevyModel, SimulationConfig, load_model_config
from .simulate import simulate_increments


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--config", type=Path, help="model/config YAML file")
    parser.add_argument("--n", type=int, default=1000)
    parser.add_argument("--seeds", type=int, nargs="+", default=[1])
    parser.add_argument("--grid-min", type=float, default=0.1)
    parser.add_argument("--grid-max", type=float, default=50.0)
    parser.add_argument("--grid-points", type=int, default=500)
    parser.add_argument("--grid-log", action=argparse.BooleanOptionalAction,
                        default=True)
    parser.add_argument("--c", type=float, default=0.5)
    parser.add_argument("--delta", type=float, default=0.5)
    parser.add_argument("--kappa", type=float, default=1.0)
    parser.add_argument("--bigC", type=float, default=1.0)
    parser.add_argument("--A", type=float, default=1.0)
    parser.add_argument("--r", type=float, default=1.5)
    parser.add_argument("--M", type=float, default=1.0)
    parser.add_argument("--out", type=Path, default=Path("out"))
    parser.add_argument("--no-timestamp", action="store_true")


def _grid(args) -> FrequencyGrid:
    if args.grid_log:
        return FrequencyGrid.log_spaced(args.grid_min, args.grid_max,
                                        args.grid_points)
    return FrequencyGrid.linear(args.grid_min, args.grid_max, args.grid_points)


def _model(args) -> tuple[LevyModel, int, int]:
    """Model plus (n, seed), config file keys overriding CLI defaults."""
    n, seed = args.n, args.seeds[0]
    if args.config is not None:
        model, raw = load_model_config(args.config)
        n = int(raw.get("n", n))
        seed = int(raw.get("seed", seed))
        return model, n, seed
    return reference_model(), n, seed


def _selector(args) -> BalancingConfig:
    return BalancingConfig(bigC=args.bigC, A=args.A, kappa=args.kappa,
                           delta=args.delta, c=args.c)


def _bounds(args) -> BoundParams:
    return BoundParams(bigC=args.bigC, M=args.M, r=args.r, kappa=args.kappa,
                       delta=args.delta)


def _read_increments(path: Path) -> IncrementSample:
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    return IncrementSample(increments=np.atleast_2d(data))


def cmd_simulate(args) -> int:
    model, n, seed = _model(args)
    sample = simulate_increments(model, SimulationConfig(n=n, seed=seed))
    out = args.out / "increments.csv"
    write_csv(out, ["dx1", "dx2"],
              ([repr(float(a)), repr(float(b))] for a, b in sample.increments),
              args.no_timestamp)
    print(f"wrote {n} increments to {out}")
    return 0


def cmd_estimate(args) -> int:
    grid = _grid(args)
    if args.increments is not None:
        sample = _read_increments(args.increments)
        model = None
    else:
        model, n, seed = _model(args)
        sample = simulate_increments(model, SimulationConfig(n=n, seed=seed))
    p = _bounds(args)
    estimates, _, _, degenerate = spectral_cov_grid(sample, grid.points)
    curves = bound_curves(sample, grid.points, p, model=model)
    out = args.out / "estimates.csv"
    s_theo = curves.s_theo if curves.s_theo is not None else [float("nan")] * grid.points.size
    rows = ([repr(float(u)), repr(float(e)), repr(float(st)), repr(float(se)),
             repr(float(sv)), repr(float(d)), str(int(dg))]
            for u, e, st, se, sv, d, dg in
            zip(grid.points, estimates, s_theo, curves.s_emp, curves.s_env,
                curves.d, degenerate))
    write_csv(out, ["U", "estimate", "s_theo", "s_emp", "s_env", "d",
                    "degenerate"], rows, args.no_timestamp)
    print(f"wrote estimator curves to {out}")
    return 0


def cmd_select(args) -> int:
    grid = _grid(args)
    if args.increments is not None:
        sample = _read_increments(args.increments)
    else:
        model, n, seed = _model(args)
        sample = simulate_increments(model, SimulationConfig(n=n, seed=seed))
    sel = adaptive_estimate(sample, grid, _selector(args))
    trace_out = args.out / "trace.csv"
    write_csv(trace_out, ["method", "j", "k", "distance", "threshold", "passed"],
              ([sel.method, t.j, t.k, repr(t.distance), repr(t.threshold),
                int(t.passed)] for t in sel.trace),
              args.no_timestamp)
    print(f"{sel.method},{sel.index},{sel.u},{sel.estimate},{sel.u_start},"
          f"{int(sel.saturated)}")
    return 0


def cmd_figure(args) -> int:
    model, _, _ = _model(args)
    spec = ExperimentSpec(model=model, n=args.n, grid=_grid(args),
                          seeds=tuple(args.seeds), mode=Mode.FIGURE,
                          selector=_selector(args), bounds=_bounds(args),
                          out_dir=args.out, no_timestamp=args.no_timestamp)
    record = run_figure_experiment(spec)
    med = record.aggregates["median_estimate"]
    us = record.aggregates["grid"]
    band = med[(us >= 5.0) & (us <= 30.0)]
    print(f"median estimate over U in [5,30]: {np.median(band):.4f}")
    return 0


def cmd_oracle_start(args) -> int:
    model, _, _ = _model(args)
    spec = ExperimentSpec(model=model, n=args.n, grid=_grid(args),
                          seeds=tuple(args.seeds), mode=Mode.ORACLE_START,
                          selector=_selector(args), bounds=_bounds(args),
                          out_dir=args.out, no_timestamp=args.no_timestamp)
    record = run_oracle_start_experiment(spec, n_values=tuple(args.n_values))
    for n, agg in record.aggregates["by_n"].items():
        print(f"n={n}: median estimate {agg['median_estimate']:.4f}, "
              f"MAD {agg['mad_estimate']:.4f}, "
              f"median U_start {agg['median_u_start']:.2f}")
    return 0


def cmd_properties(args) -> int:
    model, _, _ = _model(args)
    spec = ExperimentSpec(model=model, n=args.n, grid=_grid(args),
                          seeds=tuple(args.seeds), mode=Mode.PROPERTY_SUITE,
                          selector=_selector(args), bounds=_bounds(args),
                          out_dir=args.out, no_timestamp=args.no_timestamp)
    record = run_property_suite(spec)
    for key, value in record.report.items():
        if key == "floors":
            continue
        print(f"{key}: {value}")
    return 0 if record.report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levycov",
        description="Spectral covariance estimation for bivariate Levy "
                    "processes with data-driven frequency selection.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="simulate increments to CSV")
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("estimate", help="estimator and bound curves over the grid")
    _add_common(p)
    p.add_argument("--increments", type=Path,
                   help="read increments from CSV instead of simulating")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("select", help="run the adaptive selection pipeline")
    _add_common(p)
    p.add_argument("--increments", type=Path,
                   help="read increments from CSV instead of simulating")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("figure", help="reference figure experiment")
    _add_common(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("oracle-start", help="oracle-start adaptive study")
    _add_common(p)
    p.add_argument("--n-values", type=int, nargs="+", default=[1000, 5000])
    p.set_defaults(func=cmd_oracle_start, bigC=DESK_BIGC)

    p = sub.add_parser("properties", help="Monte Carlo property suite")
    _add_common(p)
    p.set_defaults(func=cmd_properties)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
