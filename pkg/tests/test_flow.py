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

import math

import numpy as np
import pytest

from ansys.acoustics.flow import (
    FlowState,
    InvalidFlowState,
    LorentzMap,
    SupersonicFlow,
    TimeLevelInterpolator,
    TimeLevelOutOfRange,
    advective_system_residual,
    aligned_from_tilde,
    aligned_map,
    aligned_to_tilde,
    convected_wave_residual,
    derivative_transform,
    fields_from_tilde,
    fields_to_tilde,
    from_tilde,
    from_tilde_3d,
    inverse_map,
    inverse_map_3d,
    irrotational_plane_wave,
    make_map,
    map_spacetime,
    map_spacetime_3d,
    modified_celerity,
    to_tilde,
    to_tilde_3d,
    transformed_plane_wave,
    transformed_system_residual,
)
from ansys.acoustics.grid import FieldSet, new_grid
from ansys.acoustics.stations import Station

FLOWS = [
    FlowState(u0=0.5),
    FlowState(u0=0.3535533905932738, v0=0.3535533905932738),
    FlowState(u0=0.48507125007266594, v0=0.12126781251816648),
    FlowState(u0=-0.2, v0=0.6),
    FlowState(u0=102.0, v0=-51.0, c0=340.0),
]


def test_flow_state_validation():
    assert FlowState(u0=0.5).mach() == 0.5
    assert FlowState().is_at_rest
    assert FlowState(u0=0.1).is_flow_aligned()
    assert not FlowState(u0=0.1, v0=0.1).is_flow_aligned()
    assert FlowState(w0=0.1).dimension == 3
    with pytest.raises(SupersonicFlow):
        FlowState(u0=1.0)
    with pytest.raises(SupersonicFlow):
        FlowState(u0=0.8, v0=0.8)
    with pytest.raises(InvalidFlowState):
        FlowState(c0=0.0)
    with pytest.raises(InvalidFlowState):
        FlowState(u0=float("nan"))
    with pytest.raises(InvalidFlowState):
        FlowState(rho0=-1.0)


def test_zero_flow_is_identity():
    lmap = make_map(FlowState())
    assert lmap.is_identity()
    assert to_tilde(lmap, FlowState(), 1.5, -2.0, 0.25) == (1.5, -2.0, 0.25)
    assert modified_celerity(FlowState(c0=2.0)) == 2.0


def test_to_tilde_values():
    flow = FlowState(u0=0.5)
    p_tilde, xi_tilde, zeta_tilde = to_tilde(make_map(flow), flow, 1.0, 1.0, 0.0)
    assert p_tilde == pytest.approx(1.666666667)
    assert xi_tilde == pytest.approx(1.154700538)
    assert zeta_tilde == 0.0


def test_from_tilde_values():
    flow = FlowState(u0=0.5, v0=0.5)
    lmap = make_map(flow)
    assert lmap.alpha == pytest.approx(1.0 / 3.0)
    _, xi_prime, zeta_prime = from_tilde(lmap, flow, 0.0, 1.0, 0.0)
    assert xi_prime == pytest.approx(0.866025404)
    assert zeta_prime == pytest.approx(-0.288675135)


def test_modified_celerity_values():
    assert modified_celerity(FlowState(u0=0.5)) == pytest.approx(0.866025404)
    assert modified_celerity(FlowState(u0=0.8 * 340.0, c0=340.0)) == pytest.approx(
        204.0
    )


@pytest.mark.parametrize("flow", FLOWS)
def test_space_time_round_trip(flow):
    rng = np.random.default_rng(7)
    lmap = make_map(flow)
    x, y, t = rng.uniform(-100.0, 100.0, (3, 50))
    back = inverse_map(lmap, *map_spacetime(lmap, x, y, t))
    for original, recovered in zip((x, y, t), back):
        np.testing.assert_allclose(recovered, original, rtol=0, atol=1e-12)


@pytest.mark.parametrize("flow", FLOWS)
def test_unknowns_round_trip(flow):
    rng = np.random.default_rng(9)
    lmap = make_map(flow)
    p, xi, zeta = rng.standard_normal((3, 40))
    back = from_tilde(lmap, flow, *to_tilde(lmap, flow, p, xi, zeta))
    for original, recovered in zip((p, xi, zeta), back):
        np.testing.assert_allclose(recovered, original, rtol=0, atol=1e-12)


def test_three_dimensional_round_trips():
    flow = FlowState(u0=0.3, v0=-0.2, w0=0.4)
    lmap = make_map(flow)
    rng = np.random.default_rng(1)
    coordinates = rng.uniform(-10.0, 10.0, (4, 30))
    back = inverse_map_3d(lmap, *map_spacetime_3d(lmap, *coordinates))
    np.testing.assert_allclose(np.array(back), coordinates, rtol=0, atol=1e-12)
    unknowns = rng.standard_normal((4, 30))
    back = from_tilde_3d(flow, *to_tilde_3d(flow, *unknowns))
    np.testing.assert_allclose(np.array(back), unknowns, rtol=0, atol=1e-12)
    with pytest.raises(InvalidFlowState):
        to_tilde(lmap, flow, 1.0, 1.0, 1.0)


@pytest.mark.parametrize("flow", FLOWS[:4])
def test_three_dimensional_transform_reduces_to_planar(flow):
    lmap = make_map(flow)
    rng = np.random.default_rng(3)
    p, xi, zeta = rng.standard_normal((3, 20))
    planar = to_tilde(lmap, flow, p, xi, zeta)
    spatial = to_tilde_3d(flow, p, xi, zeta, np.zeros_like(p))
    for a, b in zip(planar, spatial[:3]):
        np.testing.assert_allclose(a, b, rtol=0, atol=1e-12)
    np.testing.assert_allclose(spatial[3], 0.0, atol=1e-12)


@pytest.mark.parametrize("mach", [0.1, 0.5, -0.7, 0.95])
def test_aligned_formulas_match_planar_ones(mach):
    flow = FlowState(u0=mach)
    general = make_map(flow)
    aligned = aligned_map(flow)
    for name in ("ax", "ay", "tx", "ty", "alpha"):
        expected = pytest.approx(getattr(aligned, name), rel=1e-12, abs=1e-12)
        assert getattr(general, name) == expected
    rng = np.random.default_rng(5)
    p, xi, zeta = rng.standard_normal((3, 25))
    aligned_fields = aligned_to_tilde(flow, p, xi, zeta)
    for a, b in zip(to_tilde(general, flow, p, xi, zeta), aligned_fields):
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)
    for a, b in zip(aligned_from_tilde(flow, *aligned_fields), (p, xi, zeta)):
        np.testing.assert_allclose(a, b, rtol=0, atol=1e-12)


def test_aligned_formulas_reject_cross_flow():
    flow = FlowState(u0=0.3, v0=0.1)
    with pytest.raises(InvalidFlowState):
        aligned_map(flow)
    with pytest.raises(InvalidFlowState):
        aligned_to_tilde(flow, 1.0, 1.0, 1.0)


def test_aligned_map_values():
    lmap = make_map(FlowState(u0=0.6))
    assert lmap.ax == pytest.approx(1.25)
    assert lmap.tx == pytest.approx(0.6 / 0.64)
    assert lmap.ay == 1.0 and lmap.ty == 0.0


@pytest.mark.parametrize("flow", FLOWS)
def test_plane_wave_solves_the_advective_system(flow):
    wave = irrotational_plane_wave(flow, 0.7, -0.4)
    residuals = advective_system_residual(flow, wave.derivatives())
    scale = abs(wave.omega) * max(abs(wave.p), abs(wave.xi), abs(wave.zeta))
    for residual in residuals:
        assert abs(residual) < 1e-12 * scale


@pytest.mark.parametrize("flow", FLOWS)
def test_transformed_plane_wave_solves_the_transformed_system(flow):
    wave = transformed_plane_wave(flow, irrotational_plane_wave(flow, 0.3, 0.9))
    scale = abs(wave.omega) * max(abs(wave.p), abs(wave.xi), abs(wave.zeta))
    for residual in transformed_system_residual(flow, wave):
        assert abs(residual) < 1e-12 * scale


@pytest.mark.parametrize("flow", FLOWS)
def test_convected_wave_equation(flow):
    kx, ky = 1.1, 0.4
    wave = irrotational_plane_wave(flow, kx, ky)
    w = wave.omega
    second = {
        "tt": -(w**2),
        "xt": w * kx,
        "yt": w * ky,
        "xx": -(kx**2),
        "xy": -kx * ky,
        "yy": -(ky**2),
    }
    assert abs(convected_wave_residual(flow, second)) < 1e-12 * w**2


@pytest.mark.parametrize("flow", FLOWS[:3])
def test_derivative_transform_chain_rule(flow):
    wave = irrotational_plane_wave(flow, 0.5, 0.25)
    transformed = transformed_plane_wave(flow, wave)
    primed = np.array(
        [1j * transformed.kx, 1j * transformed.ky, -1j * transformed.omega]
    )
    original = derivative_transform(make_map(flow)) @ primed
    np.testing.assert_allclose(
        original, [1j * wave.kx, 1j * wave.ky, -1j * wave.omega], rtol=0, atol=1e-12
    )


def test_plane_wave_needs_a_wavevector():
    with pytest.raises(InvalidFlowState):
        irrotational_plane_wave(FlowState(), 0.0, 0.0)


def test_field_transforms_round_trip():
    flow = FLOWS[2]
    grid = new_grid(6, 3.0)
    rng = np.random.default_rng(12)
    fields = FieldSet(
        grid,
        rng.standard_normal(grid.shape(Station.CENTER)),
        rng.standard_normal(grid.shape(Station.CENTER)),
        rng.standard_normal(grid.shape(Station.X_EDGE)),
        rng.standard_normal(grid.shape(Station.Y_EDGE)),
    )
    tilde = fields_to_tilde(fields, flow)
    assert tilde.p.shape == (6, 6)
    back = fields_from_tilde(tilde, flow)
    collocated = fields_to_tilde(fields, FlowState())
    for a, b in zip(back, collocated):
        np.testing.assert_allclose(a, b, rtol=0, atol=1e-12)


def test_time_level_interpolator():
    interp = TimeLevelInterpolator()
    assert interp.span is None
    assert not interp.covers(0.0)
    interp.push(0.0, 1.0)
    interp.push(1.0, 3.0)
    assert interp.at(0.25) == 1.5
    interp.push(2.0, np.array([0.0, 10.0]))
    assert len(interp) == 2
    assert interp.span == (1.0, 2.0)
    np.testing.assert_allclose(interp.at(1.5), [1.5, 6.5])
    with pytest.raises(TimeLevelOutOfRange):
        interp.at(0.5)
    with pytest.raises(TimeLevelOutOfRange):
        interp.push(2.0, 1.0)


def test_lorentz_map_defaults():
    assert LorentzMap().is_identity()
    assert not LorentzMap(ax=2.0).is_identity()
