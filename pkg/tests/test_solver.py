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

import logging
import math

import numpy as np
import pytest

from ansys.acoustics._constants import CHECK_FINITE_ENV
from ansys.acoustics.config import SimulationConfig
from ansys.acoustics.flow import FlowState
from ansys.acoustics.grid import FieldSet, new_grid, read_snapshot, zero_fields
from ansys.acoustics.pml import SigmaProfile, polynomial_profile
from ansys.acoustics.probes import ProbeSampler
from ansys.acoustics.solver import (
    GrowthMonitor,
    InvalidSchemeParams,
    NonFiniteField,
    SchemeParams,
    Source,
    SourceKind,
    SourceOutsideDomain,
    SourceTarget,
    TimeStepAboveLimit,
    UnknownStepper,
    advance,
    advective_cfl_limit,
    apply_source,
    cfl_limit,
    make_stepper,
    run,
    source_profiles,
    step_advective_pml,
    step_free,
    step_pml,
)
from ansys.acoustics.stations import Station


def _random_fields(grid, seed=0):
    rng = np.random.default_rng(seed)
    return FieldSet(
        grid,
        rng.standard_normal(grid.shape(Station.CENTER)),
        rng.standard_normal(grid.shape(Station.CENTER)),
        rng.standard_normal(grid.shape(Station.X_EDGE)),
        rng.standard_normal(grid.shape(Station.Y_EDGE)),
    ).enforce_dirichlet()


def _assert_same(a, b):
    for name in ("p_x", "p_y", "xi", "zeta"):
        np.testing.assert_array_equal(getattr(a, name), getattr(b, name))


def _pulse_fields(grid, center=(0.0, 0.0), width=9.0):
    source = Source(
        kind=SourceKind.INITIAL_CONDITION,
        center=center,
        width=width,
        target=SourceTarget.P,
    )
    return apply_source(zero_fields(grid), source, 0.0, 1.0)


def _small_config(**changes):
    values = {
        "grid": {"J": 24, "L": 24.0},
        "pml": {"cells": 4},
        "scheme": {"steps": 30},
        "source": {"center": [12.0, 12.0]},
        "probes": [[14.0, 12.0], [6.0, 9.5]],
        "run": {"log_every": 0},
    }
    values.update(changes)
    return SimulationConfig(values)


def test_cfl_limits():
    grid = new_grid(10, 10.0)
    assert cfl_limit(grid) == pytest.approx(1.0 / math.sqrt(2.0))
    assert cfl_limit(grid, 2.0) == pytest.approx(0.5 / math.sqrt(2.0))
    flow = FlowState(u0=0.3, v0=0.4)
    assert advective_cfl_limit(grid, flow) == pytest.approx(cfl_limit(grid) / 1.5)


def test_scheme_params_for_grid():
    grid = new_grid(20, 10.0)
    params = SchemeParams.for_grid(grid, cfl_fraction=0.5)
    assert params.dt == pytest.approx(0.5 * cfl_limit(grid))
    assert params.sigma_ratio == pytest.approx(params.dt / 0.5)
    assert params.ratio == params.sigma_ratio
    slow = SchemeParams.for_grid(grid, celerity=0.5)
    assert slow.ratio == pytest.approx(0.95 / math.sqrt(2.0))
    moving = SchemeParams.for_grid(grid, flow=FlowState(u0=0.5))
    assert moving.dt == pytest.approx(0.95 * cfl_limit(grid) / 1.5)


def test_scheme_params_errors():
    grid = new_grid(20, 10.0)
    with pytest.raises(TimeStepAboveLimit):
        SchemeParams.for_grid(grid, cfl_fraction=1.01)
    unstable = SchemeParams.for_grid(grid, cfl_fraction=1.01, allow_unstable=True)
    assert unstable.cfl_fraction == 1.01
    with pytest.raises(InvalidSchemeParams):
        SchemeParams.for_grid(grid, cfl_fraction=0.0)
    with pytest.raises(InvalidSchemeParams):
        SchemeParams(dt=0.0, sigma_ratio=0.0)
    with pytest.raises(InvalidSchemeParams):
        SchemeParams(dt=0.1, sigma_ratio=0.1, celerity=float("nan"))


def test_pml_step_without_layers_is_free_step():
    grid = new_grid(16, 16.0)
    fields = _random_fields(grid)
    params = SchemeParams.for_grid(grid)
    stepped = step_pml(fields, params, SigmaProfile.zero(grid))
    _assert_same(stepped, step_free(fields, params))


def test_advective_step_at_rest_is_pml_step():
    grid = new_grid(20, 20.0, 5)
    fields = _random_fields(grid, 1)
    params = SchemeParams.for_grid(grid)
    profile = polynomial_profile(grid, 1.2)
    expected = step_pml(fields, params, profile)
    actual = step_advective_pml(fields, params, profile, FlowState())
    _assert_same(actual, expected)
    assert actual.time_level == fields.time_level + 1


def test_advective_step_at_rest_ignores_the_sound_speed():
    grid = new_grid(20, 20.0, 5)
    flow = FlowState(c0=2.0)
    params = SchemeParams.for_grid(grid, celerity=flow.c0, flow=flow)
    profile = polynomial_profile(grid, 1.2)
    expected = actual = _random_fields(grid, 4)
    for _ in range(50):
        expected = step_pml(expected, params, profile)
        actual = step_advective_pml(actual, params, profile, flow)
    _assert_same(actual, expected)
    assert actual.is_finite()


def test_advective_step_depends_on_the_mach_numbers_only():
    grid = new_grid(20, 20.0, 5)
    fields = _random_fields(grid, 5)
    fast = SchemeParams(dt=0.2, sigma_ratio=0.2, celerity=2.0)
    slow = SchemeParams(dt=0.4, sigma_ratio=0.4, celerity=1.0)
    a, b = fields, fields
    for _ in range(20):
        a = step_advective_pml(
            a, fast, polynomial_profile(grid, 1.2), FlowState(u0=1.0, v0=0.4, c0=2.0)
        )
        b = step_advective_pml(
            b, slow, polynomial_profile(grid, 0.6), FlowState(u0=0.5, v0=0.2)
        )
    for name in ("p_x", "p_y", "xi", "zeta"):
        np.testing.assert_allclose(
            getattr(a, name), getattr(b, name), rtol=1e-10, atol=1e-12
        )


def test_steps_hold_dirichlet_edges():
    grid = new_grid(16, 16.0, 3)
    params = SchemeParams.for_grid(grid, flow=FlowState(u0=0.2, v0=0.3))
    profile = polynomial_profile(grid, 1.0)
    fields = _random_fields(grid, 2)
    for result in (
        step_free(fields, params),
        step_pml(fields, params, profile),
        step_advective_pml(fields, params, profile, FlowState(u0=0.2, v0=0.3)),
    ):
        assert not result.xi[:, 0].any()
        assert not result.xi[:, -1].any()
        assert not result.zeta[0, :].any()
        assert not result.zeta[-1, :].any()


def _uniform_profile(grid, sigma_x, sigma_y=0.0):
    J = grid.J
    return SigmaProfile(
        grid,
        np.full(J, float(sigma_x)),
        np.full(J + 1, float(sigma_x)),
        np.full(J, float(sigma_y)),
        np.full(J + 1, float(sigma_y)),
        max(sigma_x, sigma_y),
        1,
        "constant",
    )


def _uniform_pressure(grid, p_x=1.0, p_y=0.0):
    return FieldSet(
        grid,
        np.full(grid.shape(Station.CENTER), p_x),
        np.full(grid.shape(Station.CENTER), p_y),
        np.zeros(grid.shape(Station.X_EDGE)),
        np.zeros(grid.shape(Station.Y_EDGE)),
    )


def test_damping_factor_vanishes_at_sigma_dt_two():
    grid = new_grid(8, 8.0)
    params = SchemeParams(dt=0.5, sigma_ratio=0.5)
    sigma_x = np.zeros(grid.J)
    sigma_x[3] = 4.0
    profile = SigmaProfile(
        grid,
        sigma_x,
        np.zeros(grid.J + 1),
        np.zeros(grid.J),
        np.zeros(grid.J + 1),
        4.0,
        1,
        "constant",
    )
    stepped = step_pml(_uniform_pressure(grid), params, profile)
    assert not stepped.p_x[:, 3].any()
    assert (np.delete(stepped.p_x, 3, axis=1) == 1.0).all()


def test_uniform_damping_decays_geometrically():
    grid = new_grid(8, 8.0)
    params = SchemeParams(dt=0.5, sigma_ratio=0.5)
    profile = _uniform_profile(grid, 1.0, 1.0)
    fields = _uniform_pressure(grid)
    for n in range(1, 11):
        fields = step_pml(fields, params, profile)
        np.testing.assert_allclose(fields.p_x, 0.6**n, rtol=1e-12)
        assert not fields.p_y.any()
        assert not fields.xi.any() and not fields.zeta.any()


def test_constant_state_is_preserved():
    grid = new_grid(12, 12.0, 3)
    flow = FlowState(u0=0.3, v0=-0.2)
    params = SchemeParams.for_grid(grid, flow=flow)
    zero = SigmaProfile.zero(grid)
    free = advective = _uniform_pressure(grid, 0.5, 0.5)
    for _ in range(5):
        free = step_free(free, params)
        advective = step_advective_pml(advective, params, zero, flow)
    for result in (free, advective):
        np.testing.assert_array_equal(result.pressure, 1.0)
        assert not result.xi.any() and not result.zeta.any()


def test_free_step_keeps_mirror_symmetry():
    grid = new_grid(20, 20.0, origin=(-10.0, -10.0))
    fields = _pulse_fields(grid)
    params = SchemeParams.for_grid(grid)
    for _ in range(15):
        fields = step_free(fields, params)
    pressure = fields.pressure
    np.testing.assert_allclose(pressure, pressure[:, ::-1], atol=1e-13)
    np.testing.assert_allclose(pressure, pressure.T, atol=1e-13)


def test_layers_absorb_a_pulse():
    grid = new_grid(40, 40.0, 10, origin=(-20.0, -20.0))
    params = SchemeParams.for_grid(grid)
    profile = polynomial_profile(grid, 0.8)
    fields = _pulse_fields(grid)
    initial = np.max(np.abs(fields.pressure))
    stepper = make_stepper("pml", params, profile, FlowState())
    result = advance(fields, stepper, 400, params.dt)
    assert np.max(np.abs(result.fields.pressure)) < 0.02 * initial


@pytest.mark.parametrize("flow", [FlowState(u0=0.5), FlowState(u0=1.0, c0=2.0)])
def test_advective_step_stays_bounded(flow):
    grid = new_grid(40, 40.0, 10, origin=(-20.0, -20.0))
    params = SchemeParams.for_grid(grid, celerity=flow.c0, flow=flow)
    profile = polynomial_profile(grid, 0.8 * flow.c0)
    fields = _pulse_fields(grid)
    monitor = GrowthMonitor(early_steps=10)
    stepper = make_stepper("advective", params, profile, flow)
    result = advance(fields, stepper, 300, params.dt, observer=monitor)
    assert result.fields.is_finite()
    assert monitor.growth() < 10.0


def test_unknown_stepper():
    grid = new_grid(8, 8.0)
    with pytest.raises(UnknownStepper):
        make_stepper(
            "upwind", SchemeParams.for_grid(grid), SigmaProfile.zero(grid), FlowState()
        )


def test_vm2_source_is_nearly_divergence_free():
    grid = new_grid(40, 20.0, origin=(-10.0, -10.0))
    source = Source(center=(0.5, -0.25), target="vm2")
    profiles = source_profiles(grid, source)
    xi, zeta = profiles["xi"], profiles["zeta"]
    divergence = (xi[:, 1:] - xi[:, :-1]) + (zeta[1:, :] - zeta[:-1, :])
    assert np.max(np.abs(divergence)) < 0.02 * np.max(np.abs(xi))
    assert source.target.is_rotational
    assert not Source().target.is_rotational


def test_source_outside_domain():
    grid = new_grid(8, 8.0)
    with pytest.raises(SourceOutsideDomain):
        source_profiles(grid, Source(center=(9.0, 4.0)))


def test_time_forcing_adds_and_hard_set_overwrites():
    grid = new_grid(10, 10.0)
    fields = _random_fields(grid, 3)
    source = Source(center=(5.0, 5.0), waveform="decay", amplitude=2.0, decay_rate=0.5)
    profile = source_profiles(grid, source)["p_x"]
    strength = 2.0 * math.exp(-0.5 * 0.25)

    forced = apply_source(fields, source, 0.25, 0.1)
    np.testing.assert_allclose(forced.p_x, fields.p_x + 0.1 * strength * profile)
    np.testing.assert_array_equal(forced.p_y, fields.p_y)

    hard = Source(
        center=(5.0, 5.0),
        waveform="decay",
        amplitude=2.0,
        decay_rate=0.5,
        hard_set=True,
    )
    overwritten = apply_source(fields, hard, 0.25, 0.1)
    np.testing.assert_allclose(overwritten.p_x, strength * profile)


def test_initial_condition_only_at_level_zero():
    grid = new_grid(10, 10.0)
    source = Source(kind="initial_condition", center=(5.0, 5.0), target="impulses")
    start = apply_source(_random_fields(grid, 4), source, 0.0, 0.1)
    profiles = source_profiles(grid, source)
    np.testing.assert_array_equal(start.xi[:, 1:-1], profiles["xi"][:, 1:-1])
    assert not start.xi[:, 0].any()

    later = _random_fields(grid, 5)
    later.time_level = 3
    _assert_same(apply_source(later, source, 0.3, 0.1), later)


def test_growth_monitor():
    grid = new_grid(8, 8.0)
    fields = _random_fields(grid)
    monitor = GrowthMonitor(early_steps=2, limit=5.0)
    assert monitor.growth() == 0.0
    for step, factor in enumerate((1.0, 2.0, 3.0, 8.0), start=1):
        monitor(step, fields.scaled(factor))
    assert monitor.growth() == pytest.approx(4.0)
    assert not monitor.exceeded
    monitor(5, fields.scaled(20.0))
    assert monitor.exceeded


def _poisoning_stepper(at_step):
    def stepper(fields):
        out = fields.copy()
        out.time_level += 1
        if out.time_level == at_step:
            out.p_x[2, 2] = math.nan
        return out

    return stepper


def test_non_finite_field_reports_step():
    grid = new_grid(8, 8.0)
    with pytest.raises(NonFiniteField) as error:
        advance(zero_fields(grid), _poisoning_stepper(3), 10, 0.1, check_finite=True)
    assert error.value.step == 3


def test_non_finite_check_can_be_disabled(monkeypatch):
    monkeypatch.setenv(CHECK_FINITE_ENV, "0")
    grid = new_grid(8, 8.0)
    result = advance(zero_fields(grid), _poisoning_stepper(3), 5, 0.1)
    assert result.steps == 5
    assert not result.fields.is_finite()


def test_advance_records_probes_and_stops():
    grid = new_grid(8, 8.0)
    calls = []
    probes = (ProbeSampler(grid, (4.0, 4.0)),)
    result = advance(
        zero_fields(grid),
        _poisoning_stepper(-1),
        10,
        0.5,
        probes=probes,
        observer=lambda step, fields: calls.append(step),
        stop=lambda: len(calls) == 4,
    )
    assert result.steps == 4
    assert calls == [1, 2, 3, 4]
    assert result.series[0].steps == [0, 1, 2, 3, 4]
    assert result.series[0].times[-1] == 2.0


def test_advance_writes_snapshots(tmp_path):
    grid = new_grid(8, 8.0)
    params = SchemeParams.for_grid(grid)
    result = advance(
        _pulse_fields(grid, (4.0, 4.0)),
        make_stepper("free", params, SigmaProfile.zero(grid), FlowState()),
        5,
        params.dt,
        snapshot_every=2,
        out_dir=tmp_path,
    )
    assert len(result.snapshots) == 2
    snapshot = read_snapshot(result.snapshots[-1])
    assert snapshot.time == pytest.approx(4 * params.dt)
    assert snapshot.J == 8


def test_run_is_deterministic():
    first = run(_small_config())
    second = run(_small_config())
    assert first.steps == 30
    assert len(first.series) == 2
    for a, b in zip(first.series, second.series):
        assert a == b
    _assert_same(first.fields, second.fields)


def test_run_is_linear_in_the_amplitude():
    base = run(_small_config())
    doubled = run(_small_config(**{"source.amplitude": 2.0}))
    for a, b in zip(base.series, doubled.series):
        scale = np.max(np.abs(a.array("p")))
        assert scale > 0.0
        np.testing.assert_allclose(b.array("p"), 2.0 * a.array("p"), atol=1e-13 * scale)


def test_run_initial_condition(tmp_path):
    config = _small_config(
        **{
            "source.kind": "initial_condition",
            "snapshot.every": 10,
            "scheme.stepper": "free",
        }
    )
    result = run(config, out_dir=tmp_path / "out")
    assert len(result.snapshots) == 3
    assert result.series[0].p[0] > 0.0


def test_run_warns_on_rotational_sources(caplog):
    with caplog.at_level(logging.WARNING, logger="ansys.acoustics.solver"):
        run(_small_config(**{"source.target": "xi", "scheme.steps": 2}))
    assert "injects vorticity" in caplog.text
