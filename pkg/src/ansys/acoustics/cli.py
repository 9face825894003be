# Copyright (C) 2023 - 2024 ANSYS, Inc. and/or its affiliates.
# SPDX-License-Identifier: MIT
#
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""Command line entry point ``ansys-acoustics``."""

from __future__ import annotations

import argparse
import csv
import logging
import math
import os
import sys
from typing import Optional, Sequence

import numpy as np

from ansys.acoustics.analysis import (
    PlaneWaveContext,
    reflection_coefficient,
    symbol_eigen,
    toy_1d_model,
    toy_steady_state,
)
from ansys.acoustics.config import SimulationConfig
from ansys.acoustics.flow import FlowState
from ansys.acoustics.harness import (
    ExperimentRegistry,
    compare_series,
    layer_sweep,
    run_pbm1,
    run_pbm2,
    run_reduction,
    summary_rows,
    tail_statistics,
    write_experiment,
    write_probe_series,
)
from ansys.acoustics.probes import ProbeSeries
from ansys.acoustics.solver import run

logger = logging.getLogger(__name__)


def _csv_floats(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"`{text}` is not a comma separated list of numbers"
        )


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"`{text}` is not a comma separated list of integers"
        )


def _flow(text: str) -> FlowState:
    values = _csv_floats(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"`{text}` must be `u0,v0`")
    return FlowState(u0=values[0], v0=values[1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ansys-acoustics",
        description="Advective acoustics with perfectly matched layers.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="run a configured simulation")
    run_parser.add_argument("config", help="YAML configuration file")
    run_parser.add_argument("--out", default=".", help="output directory")

    compare = commands.add_parser("compare", help="compare two probe series")
    compare.add_argument("series_a")
    compare.add_argument("series_b")
    compare.add_argument("--out", help="CSV of the pointwise comparison")

    analyze = commands.add_parser("analyze", help="closed-form analyses")
    analyses = analyze.add_subparsers(dest="analysis", required=True)
    symbol = analyses.add_parser(
        "symbol", help="eigenstructure of the principal symbol"
    )
    symbol.add_argument("--kx", type=float, required=True)
    symbol.add_argument("--ky", type=float, required=True)
    symbol.add_argument("--c0", type=float, default=1.0)
    toy = analyses.add_parser("toy1d", help="one-dimensional non-hyperbolic model")
    toy.add_argument("--sigma1", type=float, required=True)
    toy.add_argument("--sigma2", type=float, required=True)
    toy.add_argument("--psi", choices=("constant", "decay", "sine"), default="constant")
    toy.add_argument("--t-end", type=float, default=100.0)
    toy.add_argument("--dt", type=float, default=None)
    reflect = analyses.add_parser(
        "reflect", help="reflection at an absorption interface"
    )
    reflect.add_argument("--omega", type=float, required=True)
    reflect.add_argument("--sigma1", type=float, default=0.0)
    reflect.add_argument("--sigma2", type=float, required=True)
    reflect.add_argument(
        "--angle", type=float, default=0.0, help="incidence in degrees"
    )
    reflect.add_argument("--c0", type=float, default=1.0)

    experiment = commands.add_parser("experiment", help="canned experiments")
    experiment.add_argument("name", choices=("pbm1", "pbm2", "physical", "reduction"))
    experiment.add_argument("--out", required=True, help="output directory")
    experiment.add_argument(
        "--layers", type=_csv_ints, help="layer counts, e.g. 4,10,20"
    )
    experiment.add_argument("--flow", type=_flow, help="background flow `u0,v0`")
    experiment.add_argument("--steps", type=int, help="override the step count")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _run(args) -> int:
    config = SimulationConfig.from_file(args.config)
    result = run(config, out_dir=args.out)
    write_probe_series(args.out, result.series)
    config.dump(os.path.join(args.out, "config.yaml"))
    print(
        f"{result.steps} steps, {len(result.series)} probes, "
        f"{len(result.snapshots)} snapshots"
    )
    return 0


def _compare(args) -> int:
    a = ProbeSeries.from_csv(args.series_a)
    b = ProbeSeries.from_csv(args.series_b)
    rows = compare_series(a, b)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf8") as out:
            writer = csv.writer(out)
            writer.writerow(
                [
                    "step",
                    "time",
                    "abs_p",
                    "abs_xi",
                    "abs_zeta",
                    "running_l2",
                    "running_linf",
                ]
            )
            for row in rows:
                writer.writerow([row[0]] + [repr(value) for value in row[1:]])
    l2, linf = (rows[-1][5], rows[-1][6]) if rows else (0.0, 0.0)
    print(f"L2 {l2:.6e} Linf {linf:.6e}")
    return 0


def _analyze(args) -> int:
    if args.analysis == "symbol":
        decomposition = symbol_eigen(args.kx, args.ky, args.c0)
        residuals = decomposition.residuals()
        for (value, vector), residual in zip(decomposition.pairs, residuals):
            text = np.array2string(vector, precision=6)
            print(f"lambda {value:.12g}  v {text}  residual {residual:.3e}")
        return 0
    if args.analysis == "toy1d":
        dt = args.dt if args.dt is not None else 0.1 / max(args.sigma1, args.sigma2)
        series = toy_1d_model(args.sigma1, args.sigma2, args.psi, args.t_end, dt)
        print(f"t {series.times[-1]:.6g}  u {series.u[-1]:.6e}  v {series.v[-1]:.6e}")
        if args.psi == "constant":
            u_limit, v_limit = toy_steady_state(args.sigma1, args.sigma2)
            print(f"steady state  u {u_limit:.6e}  v {v_limit:.6e}")
        return 0
    ctx = PlaneWaveContext.from_angle(
        args.omega, math.radians(args.angle), args.c0, args.sigma1, args.sigma2
    )
    result = reflection_coefficient(ctx)
    print(
        f"R {result.R:.12g}  T {result.T:.12g}  |R| {abs(result.R):.6e}"
    )
    return 0


def _experiment(args) -> int:
    spec = ExperimentRegistry().get(args.name)
    if args.steps is not None:
        spec = spec.with_changes(steps=args.steps)
    if args.flow is not None:
        spec = spec.with_changes(flow=args.flow)

    if args.name in ("pbm1", "pbm2"):
        series = (run_pbm1 if args.name == "pbm1" else run_pbm2)(spec)
        write_probe_series(args.out, series)
        for record in series:
            stats = tail_statistics(record)
            print(
                f"probe {record.location}: peak {stats.peak:.3e} "
                f"tail mean |p| {stats.mean_abs:.3e}"
            )
        return 0

    if args.name == "physical":
        flows = [args.flow] if args.flow is not None else spec.flows or [spec.flow]
        results = []
        for flow in flows:
            results.extend(layer_sweep(spec, args.layers, flow))
        write_experiment(args.out, results)
        for layers, u0, v0, total in summary_rows(results):
            print(f"layers {layers} flow ({u0:g}, {v0:g}) L2 {total:.6e}")
        return 0

    result = run_reduction(spec)
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, "reduction.csv")
    with open(path, "w", newline="", encoding="utf8") as out:
        writer = csv.writer(out)
        writer.writerow(["time", "exact", "direct", "transformed"])
        for row in zip(result.times, result.exact, result.direct, result.transformed):
            writer.writerow([repr(float(value)) for value in row])
    print(
        f"direct {result.error_direct:.6e} transformed {result.error_transformed:.6e} "
        f"between {result.error_between:.6e}"
    )
    return 0


_COMMANDS = {
    "run": _run,
    "compare": _compare,
    "analyze": _analyze,
    "experiment": _experiment,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and dispatch; library errors exit with status 2."""
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, FloatingPointError, OSError) as error:
        print(f"ansys-acoustics: error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
