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
"""
Experiments on the absorbing layers and the flow reduction.

The canned experiments live in ``experiment_tables/*.yaml`` and are exposed
through ``ExperimentRegistry``. Geometries are centered: a run with interior
half-width ``x_max`` and ``cells`` layer cells covers
``[-(x_max + cells dx), x_max + cells dx]^2``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field, replace
import logging
import math
import os
from typing import NamedTuple, Optional

import numpy as np
import yaml

from ansys.acoustics._constants import _tables_dir
from ansys.acoustics.analysis import vorticity
from ansys.acoustics.flow import (
    FlowState,
    InvalidFlowState,
    TimeLevelInterpolator,
    from_tilde,
    make_map,
    modified_celerity,
    to_tilde,
)
from ansys.acoustics.grid import FieldSet, StaggeredGrid, new_grid, zero_fields
from ansys.acoustics.pml import (
    SigmaProfile,
    constant_profile,
    default_sigma_max,
    polynomial_profile,
)
from ansys.acoustics.probes import ProbeSampler, ProbeSeries
from ansys.acoustics.solver import (
    GrowthMonitor,
    RunResult,
    SchemeParams,
    Source,
    SourceKind,
    advance,
    apply_source,
    make_stepper,
    step_free,
)
from ansys.acoustics.stations import Station

logger = logging.getLogger(__name__)


@dataclass
class ExperimentSpec:
    """
    Geometry, scheme and excitation of one experiment.

    ``stepper`` left at ``None`` selects ``pml`` for a fluid at rest and
    ``advective`` otherwise.
    """

    name: str
    x_max: float
    pml_cells: int
    dx: float = 1.0
    steps: int = 300
    cfl_fraction: float = 0.95
    stepper: Optional[str] = None
    profile: str = "quadratic"
    ramp_exponent: int = 2
    sigma_max: Optional[float] = None
    sigma_coefficient: float = 8.0
    sigma_dt: float = 0.1
    flow: FlowState = field(default_factory=FlowState)
    source: Source = field(default_factory=Source)
    probes: list = field(default_factory=list)
    probe_mode: str = "interpolate"
    layer_sweep: list = field(default_factory=list)
    reference_x_max: Optional[float] = None
    reference_cells: int = 10
    flows: list = field(default_factory=list)
    options: dict = field(default_factory=dict)

    @classmethod
    def from_table(cls, name: str, table: dict) -> ExperimentSpec:
        """Build a spec from one entry of an experiment table."""
        values = dict(table)
        values["flow"] = FlowState(**values.get("flow", {}))
        values["source"] = Source(**values.get("source", {}))
        probes = values.get("probes", [])
        values["probes"] = [tuple(map(float, probe)) for probe in probes]
        flows = values.get("flows", [])
        values["flows"] = [FlowState(u0=u0, v0=v0) for u0, v0 in flows]
        return cls(name=name, **values)

    def with_changes(self, **changes) -> ExperimentSpec:
        return replace(self, **changes)

    def grid(
        self, cells: Optional[int] = None, x_max: Optional[float] = None
    ) -> StaggeredGrid:
        """Centered grid with ``cells`` layer cells around ``[-x_max, x_max]^2``."""
        cells = self.pml_cells if cells is None else cells
        x_max = self.x_max if x_max is None else x_max
        half = x_max + cells * self.dx
        J = int(round(2.0 * half / self.dx))
        return new_grid(J, J * self.dx, cells, cells, origin=(-half, -half))

    def stepper_name(self, flow: FlowState) -> str:
        if self.stepper is not None:
            return self.stepper
        return "pml" if flow.is_at_rest else "advective"

    def build_profile(self, grid: StaggeredGrid, params: SchemeParams) -> SigmaProfile:
        if self.profile == "constant":
            value = self.sigma_max
            if value is None:
                value = self.sigma_dt / params.dt
            return constant_profile(grid, value)
        exponent = 2 if self.profile == "quadratic" else self.ramp_exponent
        sigma_max = self.sigma_max
        if sigma_max is None:
            sigma_max = default_sigma_max(grid, params.celerity, self.sigma_coefficient)
        return polynomial_profile(grid, sigma_max, exponent)


def simulate(
    spec: ExperimentSpec,
    cells: Optional[int] = None,
    x_max: Optional[float] = None,
    flow: Optional[FlowState] = None,
    steps: Optional[int] = None,
    observer=None,
) -> RunResult:
    """Run ``spec`` on its own or an overridden geometry and flow."""
    flow = spec.flow if flow is None else flow
    grid = spec.grid(cells, x_max)
    params = SchemeParams.for_grid(
        grid, celerity=flow.c0, cfl_fraction=spec.cfl_fraction, flow=flow
    )
    profile = spec.build_profile(grid, params)
    stepper = make_stepper(spec.stepper_name(flow), params, profile, flow)

    fields = zero_fields(grid)
    if spec.source.kind is SourceKind.INITIAL_CONDITION:
        fields = apply_source(fields, spec.source, 0.0, params.dt)
    probes = tuple(ProbeSampler(grid, probe, spec.probe_mode) for probe in spec.probes)
    logger.debug(
        "%s: J=%d, layers=%d, dt=%.6g, stepper=%s, sigma_max=%.6g",
        spec.name,
        grid.J,
        grid.pml_cells_x,
        params.dt,
        spec.stepper_name(flow),
        profile.sigma_max,
    )
    return advance(
        fields,
        stepper,
        spec.steps if steps is None else steps,
        params.dt,
        source=spec.source,
        probes=probes,
        observer=observer,
        log_every=1000,
    )


def run_pbm1(spec: ExperimentSpec) -> list[ProbeSeries]:
    """
    Forced layer problem: constant excitation along ``(0, 0, ky, -kx)``.

    Returns one series per probe.
    """
    logger.info("Starting %s with %d steps", spec.name, spec.steps)
    result = simulate(spec)
    logger.info("Finished %s", spec.name)
    return result.series


def run_pbm2(spec: ExperimentSpec) -> list[ProbeSeries]:
    """Unforced layer problem from Gaussian impulses."""
    logger.info("Starting %s with %d steps", spec.name, spec.steps)
    result = simulate(spec)
    logger.info("Finished %s", spec.name)
    return result.series


class ErrorSeries(NamedTuple):
    """Pointwise ``|a - b|`` and its running ``sqrt(sum d^2 dt)``."""

    steps: np.ndarray
    times: np.ndarray
    errors: np.ndarray
    running: np.ndarray
    total: float


def l2_error(
    a: ProbeSeries, b: ProbeSeries, field: str = "p", dt: Optional[float] = None
) -> ErrorSeries:
    """
    Compare one field of two series on a shared time axis.

    Raises
    ------
    MismatchedSeries
        If lengths, steps or times differ, or the time step cannot be inferred.
    """
    if len(a) != len(b):
        raise MismatchedSeries(f"lengths {len(a)} and {len(b)} differ")
    if list(a.steps) != list(b.steps):
        raise MismatchedSeries("step indices differ")
    times = a.array("times")
    if not np.allclose(times, b.array("times"), rtol=1e-12, atol=1e-12):
        raise MismatchedSeries("time axes differ")
    if dt is None:
        if len(a) < 2:
            raise MismatchedSeries("a single sample does not define a time step")
        dt = float(times[1] - times[0])
    errors = np.abs(a.array(field) - b.array(field))
    running = np.sqrt(np.cumsum(errors**2 * dt))
    total = float(running[-1]) if len(running) else 0.0
    return ErrorSeries(np.asarray(a.steps), times, errors, running, total)


def compare_series(a: ProbeSeries, b: ProbeSeries) -> list[tuple]:
    """
    Rows ``(step, time, |dp|, |dxi|, |dzeta|, running L2 of p, running Linf of p)``.
    """
    pressure = l2_error(a, b, "p")
    xi = l2_error(a, b, "xi")
    zeta = l2_error(a, b, "zeta")
    linf = pressure.errors
    if len(linf):
        linf = np.maximum.accumulate(linf)
    return [
        (int(step), float(t), float(dp), float(dxi), float(dzeta), float(l2), float(li))
        for step, t, dp, dxi, dzeta, l2, li in zip(
            pressure.steps,
            pressure.times,
            pressure.errors,
            xi.errors,
            zeta.errors,
            pressure.running,
            linf,
        )
    ]


class PhysicalResult(NamedTuple):
    layers: int
    flow: FlowState
    series: ProbeSeries
    reference: ProbeSeries
    error: ErrorSeries


def reference_series(
    spec: ExperimentSpec, flow: Optional[FlowState] = None
) -> ProbeSeries:
    """First probe of the enlarged-domain run."""
    flow = spec.flow if flow is None else flow
    x_max = spec.reference_x_max
    if x_max is None:
        x_max = 6.0 * spec.x_max
    return simulate(spec, cells=spec.reference_cells, x_max=x_max, flow=flow).series[0]


def run_physical(
    spec: ExperimentSpec,
    layers: int,
    flow: Optional[FlowState] = None,
    reference: Optional[ProbeSeries] = None,
) -> PhysicalResult:
    """
    Small domain with ``layers`` layer cells against the enlarged reference.
    """
    flow = spec.flow if flow is None else flow
    if reference is None:
        reference = reference_series(spec, flow)
    series = simulate(spec, cells=layers, flow=flow).series[0]
    error = l2_error(series, reference)
    logger.info(
        "%s: layers=%d flow=(%g, %g) L2=%.6e",
        spec.name,
        layers,
        flow.u0,
        flow.v0,
        error.total,
    )
    return PhysicalResult(layers, flow, series, reference, error)


def layer_sweep(
    spec: ExperimentSpec, layers=None, flow: Optional[FlowState] = None
) -> list[PhysicalResult]:
    """Run ``run_physical`` for each layer count, sharing one reference."""
    layers = spec.layer_sweep if layers is None else layers
    flow = spec.flow if flow is None else flow
    reference = reference_series(spec, flow)
    return [run_physical(spec, n, flow, reference) for n in layers]


def summary_rows(results) -> list[tuple]:
    """``(layers, u0, v0, final L2)`` per physical result."""
    return [(r.layers, r.flow.u0, r.flow.v0, r.error.total) for r in results]


class TailStatistics(NamedTuple):
    mean_abs: float
    max_abs: float
    peak: float
    drift: float
    final: float


def tail_statistics(
    series: ProbeSeries, field: str = "p", fraction: float = 0.1
) -> TailStatistics:
    """
    Statistics of the last ``fraction`` of a series.

    ``drift`` is the change across the tail relative to the final value.
    """
    values = series.array(field)
    count = max(1, int(len(values) * fraction))
    tail = values[-count:]
    final = float(values[-1])
    change = abs(final - float(tail[0]))
    if final != 0.0:
        drift = change / abs(final)
    else:
        drift = 0.0 if change == 0.0 else math.inf
    return TailStatistics(
        float(np.mean(np.abs(tail))),
        float(np.max(np.abs(tail))),
        float(np.max(np.abs(values))),
        drift,
        final,
    )


def standing_mode(grid: StaggeredGrid, t: float, station: Station) -> np.ndarray:
    """
    Exact standing mode of the free system on the unit square.

    ``p = cos(pi x) cos(pi y) cos(w t)`` with ``w = sqrt(2) pi``; the impulses
    are ``(pi / w) sin(pi x) cos(pi y) sin(w t)`` and its transpose.
    """
    omega = math.sqrt(2.0) * math.pi
    X, Y = grid.mesh(station)
    if station is Station.CENTER:
        return np.cos(math.pi * X) * np.cos(math.pi * Y) * math.cos(omega * t)
    amplitude = math.pi / omega * math.sin(omega * t)
    if station is Station.X_EDGE:
        return amplitude * np.sin(math.pi * X) * np.cos(math.pi * Y)
    return amplitude * np.cos(math.pi * X) * np.sin(math.pi * Y)


class ConvergenceResult(NamedTuple):
    levels: tuple
    errors: list
    ratios: list


def convergence_study(levels=(50, 100, 200), t_end: float = 1.0) -> ConvergenceResult:
    """
    Pressure L2 error of the free scheme on the standing mode, ``dt = dx / 2``.
    """
    errors = []
    for J in levels:
        grid = new_grid(J, 1.0)
        dt = 0.5 * grid.dx
        ratio = dt / grid.dx
        params = SchemeParams(
            dt=dt, sigma_ratio=ratio, cfl_fraction=ratio * math.sqrt(2.0)
        )
        fields = FieldSet(
            grid,
            standing_mode(grid, 0.0, Station.CENTER),
            np.zeros(grid.shape(Station.CENTER)),
            standing_mode(grid, 0.5 * dt, Station.X_EDGE),
            standing_mode(grid, 0.5 * dt, Station.Y_EDGE),
        ).enforce_dirichlet()
        steps = int(round(t_end / dt))
        stepper = make_stepper("free", params, SigmaProfile.zero(grid), FlowState())
        final = advance(fields, stepper, steps, dt, log_every=0).fields
        difference = final.pressure - standing_mode(grid, steps * dt, Station.CENTER)
        errors.append(float(np.sqrt(np.sum(difference**2) * grid.dx * grid.dy)))
        logger.info("convergence: J=%d error=%.6e", J, errors[-1])
    ratios = [errors[k] / errors[k + 1] for k in range(len(errors) - 1)]
    return ConvergenceResult(tuple(levels), errors, ratios)


class PressureGrowthMonitor(GrowthMonitor):
    """Growth monitor on the total pressure and the impulses."""

    def __call__(self, step: int, fields: FieldSet) -> None:
        self.history.append(
            float(
                max(
                    np.max(np.abs(fields.pressure)),
                    np.max(np.abs(fields.xi)),
                    np.max(np.abs(fields.zeta)),
                )
            )
        )


class CflGrowthResult(NamedTuple):
    fraction: float
    growth: float
    steps: int
    history: list


def cfl_growth(
    fraction: float,
    steps: int = 5000,
    J: int = 32,
    seed: int = 0,
    growth_limit: float = 1e6,
    early_steps: int = 50,
) -> CflGrowthResult:
    """
    Free scheme from seeded noise at ``fraction`` of the stability limit.

    The run stops once the growth over the early maximum exceeds
    ``growth_limit``.
    """
    grid = new_grid(J, float(J))
    params = SchemeParams.for_grid(grid, cfl_fraction=fraction, allow_unstable=True)
    rng = np.random.default_rng(seed)
    fields = FieldSet(
        grid,
        rng.standard_normal(grid.shape(Station.CENTER)),
        np.zeros(grid.shape(Station.CENTER)),
        rng.standard_normal(grid.shape(Station.X_EDGE)),
        rng.standard_normal(grid.shape(Station.Y_EDGE)),
    ).enforce_dirichlet()
    monitor = PressureGrowthMonitor(early_steps=early_steps, limit=growth_limit)
    result = advance(
        fields,
        lambda f: step_free(f, params),
        steps,
        params.dt,
        observer=monitor,
        check_finite=False,
        log_every=0,
        stop=lambda: len(monitor.history) > early_steps and monitor.exceeded,
    )
    growth = monitor.growth()
    logger.info(
        "cfl growth at %.3f of the limit: %.3e after %d steps",
        fraction,
        growth,
        result.steps,
    )
    return CflGrowthResult(fraction, growth, result.steps, monitor.history)


class VorticityHistory(NamedTuple):
    interior_max: list
    level: float
    peak: float


def vorticity_history(
    spec: ExperimentSpec, layers: Optional[int] = None, steps: Optional[int] = None
) -> VorticityHistory:
    """
    Largest discrete curl at interior corners after every step of a physical run.

    ``level`` is the one-step value, floored at the accumulated round-off
    ``4 steps eps max|p, xi, zeta| / dx``.
    """
    flow = FlowState()
    grid = spec.grid(layers)
    xmin, xmax, ymin, ymax = grid.interior_bounds
    xs, ys = grid.coordinates(Station.CORNER)
    inside = np.outer((ys >= ymin) & (ys <= ymax), (xs >= xmin) & (xs <= xmax))
    history = []
    peak = [0.0]

    def observe(step, fields):
        history.append(float(np.max(np.abs(vorticity(fields, flow)[inside]))))
        pressure = float(np.max(np.abs(fields.pressure)))
        peak[0] = max(peak[0], fields.max_norm(), pressure)

    result = simulate(spec, cells=layers, flow=flow, steps=steps, observer=observe)
    floor = 4.0 * result.steps * np.finfo(float).eps * peak[0] / grid.dx
    level = max(history[0], floor) if history else floor
    return VorticityHistory(history, level, peak[0])


def _pulse(width: float):
    return lambda s: np.exp(-math.log(2.0) * s**2 / width)


def plane_pulse_fields(
    grid: StaggeredGrid, speed: float, center: float, width: float, dt: float
) -> FieldSet:
    """
    Plane pulse ``p = F(x - center)``, ``xi = speed F(x - center - speed dt/2)``.

    With ``speed = d + M0`` and ``d = +-1`` this is the downstream or upstream
    acoustic wave on a flow ``M0`` along ``x``.
    """
    pulse = _pulse(width)
    X, _ = grid.mesh(Station.CENTER)
    Xe, _ = grid.mesh(Station.X_EDGE)
    return FieldSet(
        grid,
        pulse(X - center),
        np.zeros(grid.shape(Station.CENTER)),
        speed * pulse(Xe - center - 0.5 * speed * dt),
        np.zeros(grid.shape(Station.Y_EDGE)),
    ).enforce_dirichlet()


def measure_pulse_speed(
    first: ProbeSeries, second: ProbeSeries, distance: float
) -> float:
    """
    Speed from the cross-correlation lag between two pressure series.

    The lag is refined with a parabola through the correlation peak.
    """
    a = first.array("p") - np.mean(first.array("p"))
    b = second.array("p") - np.mean(second.array("p"))
    correlation = np.correlate(b, a, mode="full")
    k = int(np.argmax(correlation))
    shift = 0.0
    if 0 < k < len(correlation) - 1:
        left, mid, right = correlation[k - 1], correlation[k], correlation[k + 1]
        denominator = left - 2.0 * mid + right
        if denominator != 0.0:
            shift = 0.5 * (left - right) / denominator
    dt = first.times[1] - first.times[0]
    lag = (k - (len(a) - 1) + shift) * dt
    return distance / lag


def pulse_speed_experiment(
    mach: float = 0.5,
    direction: int = 1,
    J: int = 400,
    probe_distance: float = 100.0,
    width: float = 100.0,
    cfl_fraction: float = 0.95,
) -> float:
    """
    Measured speed of a plane pulse stepped on a flow ``mach`` along ``x``.

    ``direction`` is +1 downstream and -1 upstream; the expected speeds are
    ``1 + mach`` and ``1 - mach``.
    """
    flow = FlowState(u0=mach)
    grid = new_grid(J, float(J), origin=(-J / 2.0, -J / 2.0))
    params = SchemeParams.for_grid(grid, cfl_fraction=cfl_fraction, flow=flow)
    speed = direction + mach
    center = -direction * (probe_distance / 2.0 + 50.0)
    fields = plane_pulse_fields(grid, speed, center, width, params.dt)
    start = -direction * probe_distance / 2.0
    probes = (
        ProbeSampler(grid, (start, 0.0)),
        ProbeSampler(grid, (start + direction * probe_distance, 0.0)),
    )
    t_end = (probe_distance + 50.0 + 4.0 * math.sqrt(width)) / abs(speed)
    steps = int(math.ceil(t_end / params.dt))
    stepper = make_stepper("advective", params, SigmaProfile.zero(grid), flow)
    result = advance(fields, stepper, steps, params.dt, probes=probes, log_every=0)
    return measure_pulse_speed(*result.series, distance=probe_distance)


class ReductionResult(NamedTuple):
    times: np.ndarray
    exact: np.ndarray
    direct: np.ndarray
    transformed: np.ndarray
    error_direct: float
    error_transformed: float
    error_between: float


def _l2(values: np.ndarray, dt: float) -> float:
    return float(np.sqrt(np.sum(values**2) * dt))


def run_reduction(spec: ExperimentSpec) -> ReductionResult:
    """
    Downstream plane pulse on a flow along ``x``, stepped two ways.

    The direct run uses the advective stepper without layers. The transformed
    run uses the free stepper at celerity ``sqrt(1 - M0^2)`` on
    ``(p~, xi~ / sqrt(1 - M0^2))`` over the dilated grid, and its probe is
    mapped back with ``from_tilde`` and read at ``t' = t + tx x`` through a
    ``TimeLevelInterpolator``. Both are compared with the exact pulse.
    """
    flow = spec.flow
    if not flow.is_flow_aligned() or flow.c0 != 1.0:
        raise InvalidFlowState("the reduction experiment needs a scaled flow along x")
    options = spec.options
    center = float(options.get("pulse_center", -50.0))
    width = float(options.get("pulse_width", 100.0))
    probe_x = float(options.get("probe_x", 50.0))
    t_end = float(options.get("t_end", 100.0))
    mach = flow.u0
    speed = 1.0 + mach
    pulse = _pulse(width)

    def exact(x, t):
        return pulse(x - center - speed * t)

    logger.info("Starting %s at M0=%g", spec.name, mach)
    grid = spec.grid(0)
    params = SchemeParams.for_grid(grid, cfl_fraction=spec.cfl_fraction, flow=flow)
    steps = int(math.ceil(t_end / params.dt))
    stepper = make_stepper("advective", params, SigmaProfile.zero(grid), flow)
    direct = advance(
        plane_pulse_fields(grid, speed, center, width, params.dt),
        stepper,
        steps,
        params.dt,
        probes=(ProbeSampler(grid, (probe_x, 0.0)),),
        log_every=0,
    ).series[0]
    times = direct.array("times")

    lmap = make_map(flow)
    shrink = modified_celerity(flow)
    origin = (grid.origin[0] * lmap.ax, grid.origin[1] * lmap.ax)
    grid_t = StaggeredGrid(grid.J, grid.L * lmap.ax, 0, 0, origin)
    params_t = SchemeParams.for_grid(
        grid_t, celerity=shrink, cfl_fraction=spec.cfl_fraction
    )

    def tilde_at(station, t_prime):
        X, _ = grid_t.mesh(station)
        x = X / lmap.ax
        t = t_prime - lmap.tx * x
        p = exact(x, t)
        return to_tilde(lmap, flow, p, speed * p, 0.0)

    p_tilde, _, _ = tilde_at(Station.CENTER, 0.0)
    _, xi_tilde, _ = tilde_at(Station.X_EDGE, 0.5 * params_t.dt)
    fields = FieldSet(
        grid_t,
        p_tilde,
        np.zeros(grid_t.shape(Station.CENTER)),
        xi_tilde / shrink,
        np.zeros(grid_t.shape(Station.Y_EDGE)),
    ).enforce_dirichlet()

    probe_t = ProbeSampler(grid_t, (probe_x * lmap.ax, 0.0))
    targets = times + lmap.tx * probe_x
    interpolator = TimeLevelInterpolator()
    mapped = []
    previous_xi = probe_t.read(fields.xi, Station.X_EDGE)
    level = 0
    while len(mapped) < len(targets):
        fields = step_free(fields, params_t)
        level += 1
        now = level * params_t.dt
        current_xi = probe_t.read(fields.xi, Station.X_EDGE)
        xi_hat = 0.5 * (previous_xi + current_xi)
        previous_xi = current_xi
        p_tilde_probe = probe_t.read(fields.pressure, Station.CENTER)
        p_mapped, _, _ = from_tilde(lmap, flow, p_tilde_probe, shrink * xi_hat, 0.0)
        interpolator.push(now, p_mapped)
        while len(mapped) < len(targets) and targets[len(mapped)] <= now:
            mapped.append(interpolator.at(targets[len(mapped)]))

    reference = exact(probe_x, times)
    direct_p = direct.array("p")
    mapped = np.asarray(mapped)
    result = ReductionResult(
        times,
        reference,
        direct_p,
        mapped,
        _l2(direct_p - reference, params.dt),
        _l2(mapped - reference, params.dt),
        _l2(direct_p - mapped, params.dt),
    )
    logger.info(
        "%s: direct error %.3e, transformed error %.3e, difference %.3e",
        spec.name,
        result.error_direct,
        result.error_transformed,
        result.error_between,
    )
    return result


def write_probe_series(out_dir: str | os.PathLike, series) -> list[str]:
    """Write ``probe_<k>.csv`` for each series."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for k, record in enumerate(series):
        path = os.path.join(out_dir, f"probe_{k}.csv")
        record.to_csv(path)
        paths.append(path)
    logger.info("Wrote %d probe files to %s", len(paths), out_dir)
    return paths


def write_error_csv(path: str | os.PathLike, error: ErrorSeries) -> None:
    """``step,time,abs_error,running_l2`` rows."""
    with open(path, "w", newline="", encoding="utf8") as out:
        writer = csv.writer(out)
        writer.writerow(["step", "time", "abs_error", "running_l2"])
        for row in zip(error.steps, error.times, error.errors, error.running):
            writer.writerow([int(row[0])] + [repr(float(v)) for v in row[1:]])


def write_summary_csv(path: str | os.PathLike, rows) -> None:
    """``layers,u0,v0,final_l2`` rows."""
    with open(path, "w", newline="", encoding="utf8") as out:
        writer = csv.writer(out)
        writer.writerow(["layers", "u0", "v0", "final_l2"])
        for layers, u0, v0, total in rows:
            writer.writerow(
                [layers, repr(float(u0)), repr(float(v0)), repr(float(total))]
            )


def write_experiment(out_dir: str | os.PathLike, results) -> list[str]:
    """
    Write physical-study results.

    Each flow gets ``flow_<k>/layers_<n>/`` holding ``probe_0.csv`` and
    ``error_l2.csv``, plus a ``reference.csv``; ``summary.csv`` gathers the
    final L2 errors.
    """
    os.makedirs(out_dir, exist_ok=True)
    written = []
    flows = []
    for result in results:
        if result.flow not in flows:
            flows.append(result.flow)
    for k, flow in enumerate(flows):
        flow_dir = os.path.join(out_dir, f"flow_{k}")
        os.makedirs(flow_dir, exist_ok=True)
        reference_written = False
        for result in (r for r in results if r.flow == flow):
            if not reference_written:
                path = os.path.join(flow_dir, "reference.csv")
                result.reference.to_csv(path)
                written.append(path)
                reference_written = True
            layer_dir = os.path.join(flow_dir, f"layers_{result.layers}")
            written.extend(write_probe_series(layer_dir, [result.series]))
            path = os.path.join(layer_dir, "error_l2.csv")
            write_error_csv(path, result.error)
            written.append(path)
    summary = os.path.join(out_dir, "summary.csv")
    write_summary_csv(summary, summary_rows(results))
    written.append(summary)
    logger.info("Wrote %d files to %s", len(written), out_dir)
    return written


class ExperimentRegistry:
    """
    Canned experiments by name.

    Every table in ``experiment_tables`` is loaded on construction and exposed
    as an attribute.

    Parameters
    ----------
    tables_dir: str, optional
        Directory of ``YAML`` tables; ``None`` loads none.
    other: dict, optional
        Additional experiments, as ``ExperimentSpec`` objects or table
        mappings.

    Examples
    --------
    >>> from ansys.acoustics import ExperimentRegistry
    >>> registry = ExperimentRegistry()
    >>> registry.pbm1.x_max
    5.0
    """

    def __init__(self, tables_dir: Optional[str] = _tables_dir, other: dict = None):
        if tables_dir:
            for file_name in sorted(os.listdir(tables_dir)):
                if not file_name.endswith(".yaml"):
                    continue
                with open(os.path.join(tables_dir, file_name), "r") as table_yaml:
                    tables = yaml.safe_load(table_yaml)
                for name, table in tables.items():
                    setattr(self, name, ExperimentSpec.from_table(name, table))

        for name, spec in (other or {}).items():
            if not isinstance(spec, ExperimentSpec):
                spec = ExperimentSpec.from_table(name, spec)
            setattr(self, name, spec)

    def __str__(self):
        return ", ".join(self.__dict__)

    def __setattr__(self, name: str, spec) -> None:
        if hasattr(self, name):
            raise ExperimentAlreadyRegistered(name)
        self.__dict__[name] = spec

    def __iter__(self):
        for item in self.__dict__:
            yield getattr(self, item)

    def get(self, name: str) -> ExperimentSpec:
        """Experiment ``name``, raising ``UnknownExperiment`` when absent."""
        if name not in self.__dict__:
            raise UnknownExperiment(name, list(self.__dict__))
        return self.__dict__[name]


class MismatchedSeries(ValueError):
    """Raised when two series cannot be compared sample by sample."""

    def __init__(self, reason: str):
        super().__init__(f"Series cannot be compared: {reason}.")


class UnknownExperiment(ValueError):
    """Raised when an experiment name is not registered."""

    def __init__(self, name: str, known):
        super().__init__(
            f"`{name}` is not a registered experiment; known: {', '.join(known)}."
        )


class ExperimentAlreadyRegistered(ValueError):
    """Raised when an experiment name has previously been registered."""

    def __init__(self, name: str):
        super().__init__(f"Unable to override `{name}` it has already been registered.")
