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
Explicit staggered time stepping.

Pressures live at entire times ``t^n`` and impulses at semi-entire times
``t^(n+1/2)``. One step advances the split pressures from the current
impulses, then the impulses from the new pressures; the outer boundary keeps
zero normal impulse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
import logging
import math
import os
from typing import TYPE_CHECKING, Callable, Optional

import numpy as np

from ansys.acoustics import _stencils as st
from ansys.acoustics._constants import _check_finite_enabled
from ansys.acoustics.flow import FlowState
from ansys.acoustics.grid import FieldSet, StaggeredGrid, write_snapshot, zero_fields
from ansys.acoustics.pml import SigmaProfile
from ansys.acoustics.probes import ProbeSampler, ProbeSeries
from ansys.acoustics.stations import Station

if TYPE_CHECKING:  # pragma: no cover
    from ansys.acoustics.config import SimulationConfig

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)

ICN_ITERATIONS = 3


def cfl_limit(grid: StaggeredGrid, celerity: float = 1.0) -> float:
    """
    Largest stable time step ``(1/c) / sqrt(1/dx^2 + 1/dy^2)``.

    Examples
    --------
    >>> from ansys.acoustics import new_grid
    >>> round(cfl_limit(new_grid(10, 10.0)), 9)
    0.707106781
    """
    return (1.0 / celerity) / math.sqrt(1.0 / grid.dx**2 + 1.0 / grid.dy**2)


def advective_cfl_limit(grid: StaggeredGrid, flow: FlowState) -> float:
    """Fastest-characteristic bound, using ``c0 (1 + M0)``."""
    return cfl_limit(grid, flow.c0 * (1.0 + flow.mach()))


@dataclass(frozen=True)
class SchemeParams:
    """
    Time step and scheme ratio.

    Parameters
    ----------
    dt: float
        Time step.
    sigma_ratio: float
        ``dt / dx``.
    cfl_fraction: float
        Fraction of the stability limit that ``dt`` represents.
    celerity: float, optional
        Wave speed of the schemes, the sound speed ``c0`` of the run. One for
        the scaled system; the transformed system runs at ``sqrt(1 - M0^2)``.
    """

    dt: float
    sigma_ratio: float
    cfl_fraction: float = 0.95
    celerity: float = 1.0

    def __post_init__(self):
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise InvalidSchemeParams(f"dt={self.dt!r} must be positive")
        if not (self.celerity > 0 and math.isfinite(self.celerity)):
            raise InvalidSchemeParams(f"celerity={self.celerity!r} must be positive")

    @property
    def ratio(self) -> float:
        """Effective scheme ratio ``celerity * dt / dx``."""
        return self.celerity * self.sigma_ratio

    @classmethod
    def for_grid(
        cls,
        grid: StaggeredGrid,
        celerity: float = 1.0,
        cfl_fraction: float = 0.95,
        flow: Optional[FlowState] = None,
        allow_unstable: bool = False,
    ) -> SchemeParams:
        """
        Parameters at ``cfl_fraction`` of the stability limit.

        With a moving ``flow`` the advective limit is used instead.

        Raises
        ------
        TimeStepAboveLimit
            If ``cfl_fraction`` exceeds one and ``allow_unstable`` is false.
        """
        if not cfl_fraction > 0:
            raise InvalidSchemeParams(f"cfl_fraction={cfl_fraction!r} must be positive")
        if flow is not None and not flow.is_at_rest:
            limit = advective_cfl_limit(grid, flow)
        else:
            limit = cfl_limit(grid, celerity)
        dt = cfl_fraction * limit
        if cfl_fraction > 1.0 and not allow_unstable:
            raise TimeStepAboveLimit(dt, limit)
        return cls(
            dt=dt,
            sigma_ratio=dt / grid.dx,
            cfl_fraction=cfl_fraction,
            celerity=celerity,
        )


def step_free(fields: FieldSet, params: SchemeParams) -> FieldSet:
    """
    One leapfrog step of the free scheme.

    ``p^(n+1) = p^n - s [(xi_(i+1) - xi_i) + (zeta_(j+1) - zeta_j)]`` applied
    to the split parts, then
    ``xi^(n+3/2) = xi^(n+1/2) - s (p_(i+1/2) - p_(i-1/2))`` and likewise for
    ``zeta``, with ``s`` the scheme ratio.
    """
    ratio = params.ratio
    p_x = fields.p_x - ratio * st.x_difference_to_centers(fields.xi)
    p_y = fields.p_y - ratio * st.y_difference_to_centers(fields.zeta)
    pressure = p_x + p_y
    xi = fields.xi - ratio * st.x_difference_to_edges(pressure)
    zeta = fields.zeta - ratio * st.y_difference_to_edges(pressure)
    level = fields.time_level + 1
    return FieldSet(fields.grid, p_x, p_y, xi, zeta, level).enforce_dirichlet()


def _damping(rate: np.ndarray, dt: float, ratio: float):
    s = rate * dt
    return (2.0 - s) / (2.0 + s), 2.0 * ratio / (2.0 + s)


def step_pml(fields: FieldSet, params: SchemeParams, profile: SigmaProfile) -> FieldSet:
    """
    One step of the split-field scheme with time-centered damping.

    Each unknown is multiplied by ``(2 - sigma dt) / (2 + sigma dt)`` and its
    spatial difference by ``2 s / (2 + sigma dt)``. With zero coefficients the
    result equals ``step_free`` bit for bit.
    """
    dt, ratio = params.dt, params.ratio
    decay_px, gain_px = _damping(profile.sigma_x(Station.CENTER), dt, ratio)
    decay_py, gain_py = _damping(profile.sigma_y(Station.CENTER), dt, ratio)
    decay_xi, gain_xi = _damping(profile.sigma_x(Station.X_EDGE), dt, ratio)
    decay_zeta, gain_zeta = _damping(profile.sigma_y(Station.Y_EDGE), dt, ratio)

    p_x = decay_px * fields.p_x - gain_px * st.x_difference_to_centers(fields.xi)
    p_y = decay_py * fields.p_y - gain_py * st.y_difference_to_centers(fields.zeta)
    pressure = p_x + p_y
    xi = decay_xi * fields.xi - gain_xi * st.x_difference_to_edges(pressure)
    zeta = decay_zeta * fields.zeta - gain_zeta * st.y_difference_to_edges(pressure)
    level = fields.time_level + 1
    return FieldSet(fields.grid, p_x, p_y, xi, zeta, level).enforce_dirichlet()


def step_advective_pml(
    fields: FieldSet, params: SchemeParams, profile: SigmaProfile, flow: FlowState
) -> FieldSet:
    """
    One step of the absorbing scheme on a uniform subsonic flow.

    The pressure parts are advanced explicitly from the impulses at
    ``t^(n+1/2)``. The impulse equations couple ``xi`` and ``zeta`` through
    the advective fluxes and the cross damping terms; they are advanced with
    an iterated Crank-Nicolson loop in which every term but the own damping is
    evaluated at the mean of the old and predicted levels, and the own damping
    is time-centered exactly as in ``step_pml``.

    The unknowns are those of ``step_pml``: the impulses are scaled by ``c0``
    so that the sound speed enters only through ``params.ratio``. The flow
    enters through its Mach components. With zero velocity the step equals
    ``step_pml`` bit for bit, whatever ``c0``.
    """
    dt, ratio = params.dt, params.ratio
    extra = dt / ratio
    mx, my = flow.u0 / flow.c0, flow.v0 / flow.c0
    shrink = math.sqrt(1.0 - flow.mach() ** 2)
    gap = 1.0 - flow.mach() ** 2

    sx_c = profile.sigma_x(Station.CENTER)
    sy_c = profile.sigma_y(Station.CENTER)
    sx_xe = profile.sigma_x(Station.X_EDGE)
    sy_xe = profile.sigma_y(Station.X_EDGE)
    sx_ye = profile.sigma_x(Station.Y_EDGE)
    sy_ye = profile.sigma_y(Station.Y_EDGE)

    decay_px, gain_px = _damping(shrink * sx_c, dt, ratio)
    decay_py, gain_py = _damping(shrink * sy_c, dt, ratio)
    xi_c = st.x_edges_to_centers(fields.xi)
    zeta_c = st.y_edges_to_centers(fields.zeta)
    p_x = decay_px * fields.p_x - gain_px * (
        st.x_difference_to_centers(fields.xi) + extra * (mx / shrink * sx_c * xi_c)
    )
    p_y = decay_py * fields.p_y - gain_py * (
        st.y_difference_to_centers(fields.zeta)
        + extra * (my / shrink * sy_c * zeta_c)
    )
    pressure = p_x + p_y

    decay_xi, gain_xi = _damping((1.0 + (mx**2 - my**2)) / shrink * sx_xe, dt, ratio)
    decay_zeta, gain_zeta = _damping(
        (1.0 + (my**2 - mx**2)) / shrink * sy_ye, dt, ratio
    )

    # explicit parts: pressure gradient and split-pressure coupling at t^(n+1)
    dp_xe = gap * st.x_difference_to_edges(pressure)
    dp_ye = gap * st.y_difference_to_edges(pressure)
    coupling_xi = extra * (
        mx
        * shrink
        * (sx_xe * st.centers_to_x_edges(p_x) + sy_xe * st.centers_to_x_edges(p_y))
    )
    coupling_zeta = extra * (
        my
        * shrink
        * (sx_ye * st.centers_to_y_edges(p_x) + sy_ye * st.centers_to_y_edges(p_y))
    )
    cross_xi = extra * (mx * my * (sx_xe + sy_xe) / shrink)
    cross_zeta = extra * (mx * my * (sx_ye + sy_ye) / shrink)

    xi_old, zeta_old = fields.xi, fields.zeta
    xi_new, zeta_new = xi_old, zeta_old
    for _ in range(ICN_ITERATIONS):
        xi_mid = 0.5 * (xi_old + xi_new)
        zeta_mid = 0.5 * (zeta_old + zeta_new)
        xi_mid_c = st.x_edges_to_centers(xi_mid)
        zeta_mid_c = st.y_edges_to_centers(zeta_mid)
        xi_next = decay_xi * xi_old - gain_xi * (
            dp_xe
            + st.x_difference_to_edges(2.0 * mx * xi_mid_c + my * zeta_mid_c)
            + st.corners_y_difference_to_x_edges(mx * st.y_edges_to_corners(zeta_mid))
            + coupling_xi
            + cross_xi * st.y_edges_to_x_edges(zeta_mid)
        )
        zeta_next = decay_zeta * zeta_old - gain_zeta * (
            dp_ye
            + st.corners_x_difference_to_y_edges(my * st.x_edges_to_corners(xi_mid))
            + st.y_difference_to_edges(mx * xi_mid_c + 2.0 * my * zeta_mid_c)
            + coupling_zeta
            + cross_zeta * st.x_edges_to_y_edges(xi_mid)
        )
        xi_new, zeta_new = xi_next, zeta_next

    return FieldSet(
        fields.grid, p_x, p_y, xi_new, zeta_new, fields.time_level + 1
    ).enforce_dirichlet()


class SourceKind(Enum):
    """Whether a source sets the initial data or forces every step."""

    INITIAL_CONDITION = "initial_condition"
    TIME_FORCING = "time_forcing"


class SourceTarget(Enum):
    """
    Unknowns receiving the excitation.

    ``VM2`` injects ``(d psi/dy, -d psi/dx)`` into ``(xi, zeta)``, the
    direction of the generalized eigenvector that is not an eigenvector of the
    principal symbol.
    """

    P = "p"
    XI = "xi"
    ZETA = "zeta"
    IMPULSES = "impulses"
    VM2 = "vm2"

    @property
    def is_rotational(self) -> bool:
        return self is not SourceTarget.P


class Waveform(Enum):
    """Time profiles ``psi(t)``."""

    CONSTANT = "constant"
    SINE = "sine"
    DECAY = "decay"
    ZERO = "zero"


@dataclass(frozen=True)
class Source:
    """
    Gaussian excitation ``exp(-ln2 ((x - xa)^2 + (y - ya)^2) / width) psi(t)``.

    The spatial profile is sampled at each target's own staggered station.
    Initial-condition sources ignore the waveform and set
    ``amplitude * profile`` at level 0.
    """

    kind: SourceKind = SourceKind.TIME_FORCING
    center: tuple = (0.0, 0.0)
    width: float = 9.0
    waveform: Waveform = Waveform.SINE
    amplitude: float = 1.0
    frequency: float = 1.0
    decay_rate: float = 1.0
    target: SourceTarget = SourceTarget.P
    hard_set: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", SourceKind(self.kind))
        object.__setattr__(self, "waveform", Waveform(self.waveform))
        object.__setattr__(self, "target", SourceTarget(self.target))
        center = (float(self.center[0]), float(self.center[1]))
        object.__setattr__(self, "center", center)

    def waveform_value(self, t: float) -> float:
        """``psi(t)`` without the amplitude."""
        if self.waveform is Waveform.CONSTANT:
            return 1.0
        if self.waveform is Waveform.SINE:
            return math.sin(math.pi * self.frequency * t)
        if self.waveform is Waveform.DECAY:
            return math.exp(-self.decay_rate * t)
        return 0.0


@lru_cache(maxsize=64)
def _gaussian(
    grid: StaggeredGrid, station: Station, center: tuple, width: float
) -> np.ndarray:
    X, Y = grid.mesh(station)
    values = np.exp(-LN2 * ((X - center[0]) ** 2 + (Y - center[1]) ** 2) / width)
    values.setflags(write=False)
    return values


@lru_cache(maxsize=32)
def source_profiles(grid: StaggeredGrid, source: Source) -> dict:
    """
    Spatial data injected into each unknown, keyed by field name.

    Raises
    ------
    SourceOutsideDomain
        If the source center is outside the grid.
    """
    xa, ya = source.center
    if not grid.contains(xa, ya):
        raise SourceOutsideDomain(source.center, grid)
    w = source.width
    target = source.target
    if target is SourceTarget.P:
        return {"p_x": _gaussian(grid, Station.CENTER, source.center, w)}
    if target is SourceTarget.XI:
        return {"xi": _gaussian(grid, Station.X_EDGE, source.center, w)}
    if target is SourceTarget.ZETA:
        return {"zeta": _gaussian(grid, Station.Y_EDGE, source.center, w)}
    if target is SourceTarget.IMPULSES:
        return {
            "xi": _gaussian(grid, Station.X_EDGE, source.center, w),
            "zeta": _gaussian(grid, Station.Y_EDGE, source.center, w),
        }
    _, y_xe = grid.mesh(Station.X_EDGE)
    x_ye, _ = grid.mesh(Station.Y_EDGE)
    xi = _gaussian(grid, Station.X_EDGE, source.center, w) * (
        -2.0 * LN2 * (y_xe - ya) / w
    )
    zeta = _gaussian(grid, Station.Y_EDGE, source.center, w) * (
        2.0 * LN2 * (x_ye - xa) / w
    )
    xi.setflags(write=False)
    zeta.setflags(write=False)
    return {"xi": xi, "zeta": zeta}


def apply_source(fields: FieldSet, source: Source, t: float, dt: float) -> FieldSet:
    """
    Inject ``source`` into a copy of ``fields``.

    Time forcing adds ``dt * amplitude * psi(t) * profile`` to each target
    (or sets ``amplitude * psi(t) * profile`` when ``hard_set``). Initial
    conditions set the targets only at time level 0.
    """
    profiles = source_profiles(fields.grid, source)
    out = fields.copy()
    if source.kind is SourceKind.INITIAL_CONDITION:
        if fields.time_level != 0:
            return out
        for name, profile in profiles.items():
            setattr(out, name, source.amplitude * profile)
        if "p_x" in profiles:
            out.p_y = np.zeros_like(out.p_y)
        return out.enforce_dirichlet()

    strength = source.amplitude * source.waveform_value(t)
    for name, profile in profiles.items():
        if source.hard_set:
            setattr(out, name, strength * profile)
        else:
            setattr(out, name, getattr(out, name) + dt * strength * profile)
    return out.enforce_dirichlet()


class GrowthMonitor:
    """
    Observer recording the max norm of the fields after every step.

    Parameters
    ----------
    early_steps: int, optional
        Number of leading steps whose maximum is the growth reference.
    limit: float, optional
        Growth factor at which ``exceeded`` becomes true.
    """

    def __init__(self, early_steps: int = 50, limit: float = math.inf):
        self.early_steps = early_steps
        self.limit = limit
        self.history: list[float] = []

    def __call__(self, step: int, fields: FieldSet) -> None:
        self.history.append(fields.max_norm())

    @property
    def early_max(self) -> float:
        return max(self.history[: self.early_steps], default=0.0)

    def growth(self) -> float:
        """Largest recorded norm over the early maximum."""
        early = self.early_max
        if early == 0.0:
            return 0.0 if not self.history or max(self.history) == 0.0 else math.inf
        return max(self.history) / early

    @property
    def exceeded(self) -> bool:
        return self.growth() > self.limit


@dataclass
class RunResult:
    """Outputs of ``run`` and ``advance``."""

    series: list
    snapshots: list = field(default_factory=list)
    fields: Optional[FieldSet] = None
    steps: int = 0


Stepper = Callable[[FieldSet], FieldSet]


def make_stepper(
    name: str, params: SchemeParams, profile: SigmaProfile, flow: FlowState
) -> Stepper:
    """
    Bind one of ``free``, ``pml`` or ``advective`` to its parameters.

    Raises
    ------
    UnknownStepper
        For any other name.
    """
    if name == "free":
        return lambda fields: step_free(fields, params)
    if name == "pml":
        return lambda fields: step_pml(fields, params, profile)
    if name == "advective":
        return lambda fields: step_advective_pml(fields, params, profile, flow)
    raise UnknownStepper(name)


def advance(
    fields: FieldSet,
    stepper: Stepper,
    steps: int,
    dt: float,
    source: Optional[Source] = None,
    probes: tuple = (),
    observer: Optional[Callable[[int, FieldSet], object]] = None,
    snapshot_every: int = 0,
    out_dir: Optional[str | os.PathLike] = None,
    check_finite: Optional[bool] = None,
    log_every: int = 100,
    stop: Optional[Callable[[], bool]] = None,
) -> RunResult:
    """
    Advance ``fields`` by ``steps`` steps, recording every probe at every level.

    Parameters
    ----------
    fields: FieldSet
        Initial unknowns, already holding any initial-condition data.
    stepper: Callable
        One time step.
    steps: int
        Number of steps.
    dt: float
        Time step, used for forcing times and probe time axes.
    source: Source, optional
        Time forcing applied before each step at ``t^(n+1/2)``.
    probes: tuple[ProbeSampler], optional
        Observation points.
    observer: Callable, optional
        Called as ``observer(step, fields)`` after each step.
    snapshot_every: int, optional
        Write a pressure snapshot every that many steps, 0 disables.
    out_dir: str, optional
        Directory of the snapshot files.
    check_finite: bool, optional
        Raise on NaN/Inf; defaults to the ``PYANSYS_ACOUSTICS_CHECK_FINITE``
        environment switch.
    log_every: int, optional
        Progress logging period.
    stop: Callable, optional
        Checked after each step; ends the run early when it returns true.

    Returns
    -------
    RunResult
    """
    if check_finite is None:
        check_finite = _check_finite_enabled()
    forcing = None
    if source is not None and source.kind is SourceKind.TIME_FORCING:
        forcing = source

    series = [ProbeSeries(sampler.location) for sampler in probes]
    for sampler, record in zip(probes, series):
        record.record(0, dt, sampler.sample(fields))

    snapshots = []
    done = 0
    for n in range(steps):
        if forcing is not None:
            fields = apply_source(fields, forcing, (n + 0.5) * dt, dt)
        fields = stepper(fields)
        done = n + 1
        if check_finite and not fields.is_finite():
            raise NonFiniteField(done)
        for sampler, record in zip(probes, series):
            record.record(done, dt, sampler.sample(fields))
        if snapshot_every and done % snapshot_every == 0 and out_dir is not None:
            path = os.path.join(out_dir, f"snapshot_{done:06d}.txt")
            write_snapshot(path, fields, done * dt)
            snapshots.append(path)
        if observer is not None:
            observer(done, fields)
        if log_every and done % log_every == 0:
            logger.debug("step %d/%d, max norm %.6e", done, steps, fields.max_norm())
        if stop is not None and stop():
            break

    return RunResult(series, snapshots, fields, done)


def run(
    config: SimulationConfig,
    out_dir: Optional[str | os.PathLike] = None,
    observer: Optional[Callable[[int, FieldSet], object]] = None,
) -> RunResult:
    """
    Run a full simulation described by ``config``.

    Identical configurations give bit-identical results.

    Parameters
    ----------
    config: SimulationConfig
        Validated configuration.
    out_dir: str, optional
        Directory for snapshots; probe CSVs are written by the caller.
    observer: Callable, optional
        Called as ``observer(step, fields)`` after each step.

    Returns
    -------
    RunResult
    """
    grid = config.build_grid()
    flow = config.build_flow()
    params = config.build_scheme(grid, flow)
    profile = config.build_profile(grid, params)
    source = config.build_source()
    stepper = make_stepper(config["scheme.stepper"], params, profile, flow)

    logger.debug(
        "run: J=%d dx=%g dt=%.6g ratio=%.6g stepper=%s sigma_max=%g cfl_limit=%.6g",
        grid.J,
        grid.dx,
        params.dt,
        params.ratio,
        config["scheme.stepper"],
        profile.sigma_max,
        cfl_limit(grid, params.celerity),
    )
    if source.target.is_rotational:
        logger.warning(
            "Source target `%s` injects vorticity; "
            "results leave the irrotational regime",
            source.target.value,
        )

    fields = zero_fields(grid)
    if source.kind is SourceKind.INITIAL_CONDITION:
        fields = apply_source(fields, source, 0.0, params.dt)
    else:
        # validates the source position before stepping
        source_profiles(grid, source)

    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
    probes = tuple(
        ProbeSampler(grid, location, config["probe.mode"]) for location in config.probes
    )
    return advance(
        fields,
        stepper,
        config["scheme.steps"],
        params.dt,
        source=source,
        probes=probes,
        observer=observer,
        snapshot_every=config["snapshot.every"],
        out_dir=out_dir,
        check_finite=None if config["run.check_finite"] else False,
        log_every=config["run.log_every"],
    )


class InvalidSchemeParams(ValueError):
    """Raised when the time step or the celerity is not positive."""

    def __init__(self, reason: str):
        super().__init__(f"Invalid scheme parameters: {reason}.")


class SourceOutsideDomain(ValueError):
    """Raised when a source center is not inside the grid."""

    def __init__(self, center, grid: StaggeredGrid):
        super().__init__(f"Source center {center} is outside the domain of {grid}.")


class TimeStepAboveLimit(ValueError):
    """Raised when a time step exceeds the stability limit."""

    def __init__(self, dt: float, limit: float):
        super().__init__(
            f"Time step {dt:.6g} exceeds the stability limit {limit:.6g}; "
            "pass `allow_unstable=True` to run it anyway."
        )


class NonFiniteField(FloatingPointError):
    """Raised when a field holds NaN or Inf after a step."""

    def __init__(self, step: int):
        self.step = step
        super().__init__(f"Non-finite field value first detected after step {step}.")


class UnknownStepper(ValueError):
    """Raised when a stepper name is not recognized."""

    def __init__(self, name: str):
        super().__init__(
            f"`{name}` is not a stepper; use `free`, `pml` or `advective`."
        )
