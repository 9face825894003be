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
Provides the ``FlowState`` and ``LorentzMap`` classes.

A uniform subsonic background flow is removed from the linearized acoustic
system by a space dilation plus a time tilt of the coordinates, together with a
linear change of the unknowns. This module holds those maps, their inverses and
the residuals used to check them on analytic plane waves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
import math
from typing import NamedTuple, Union

import numpy as np

from ansys.acoustics.grid import FieldSet, centered_impulses

Number = Union[float, np.ndarray]


@dataclass(frozen=True)
class FlowState:
    """
    Prescribed uniform background flow.

    Parameters
    ----------
    u0, v0, w0: float
        Components of the background velocity. ``w0`` is zero for planar flows.
    c0: float
        Sound speed.
    rho0: float
        Background density.

    Examples
    --------
    >>> from ansys.acoustics import FlowState
    >>> FlowState(u0=0.5).mach()
    0.5
    """

    u0: float = 0.0
    v0: float = 0.0
    w0: float = 0.0
    c0: float = 1.0
    rho0: float = 1.0

    def __post_init__(self):
        for name in ("u0", "v0", "w0", "c0", "rho0"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidFlowState(f"{name}={getattr(self, name)!r} is not finite")
        if not self.c0 > 0:
            raise InvalidFlowState(f"sound speed c0={self.c0} must be positive")
        if not self.rho0 > 0:
            raise InvalidFlowState(f"density rho0={self.rho0} must be positive")
        if self.mach() >= 1.0:
            raise SupersonicFlow(self.mach())

    def mach(self) -> float:
        """Mach number ``|u| / c0``."""
        return math.sqrt(self.u0**2 + self.v0**2 + self.w0**2) / self.c0

    def is_flow_aligned(self) -> bool:
        """Whether the flow is along ``x`` only."""
        return self.v0 == 0.0 and self.w0 == 0.0

    @property
    def dimension(self) -> int:
        return 3 if self.w0 != 0.0 else 2

    @property
    def is_at_rest(self) -> bool:
        return self.u0 == 0.0 and self.v0 == 0.0 and self.w0 == 0.0


@dataclass(frozen=True)
class LorentzMap:
    """
    Coefficients of the space-time map ``x' = ax x``, ``t' = t + tx x + ...``.

    ``alpha``, ``beta`` and ``gamma`` couple the ``(x, y)``, ``(x, z)`` and
    ``(y, z)`` impulses in the transformed system.
    """

    ax: float = 1.0
    ay: float = 1.0
    az: float = 1.0
    tx: float = 0.0
    ty: float = 0.0
    tz: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0

    def is_identity(self) -> bool:
        return self == LorentzMap()


def _shrink(component: float, c0: float) -> float:
    return math.sqrt(1.0 - component**2 / c0**2)


def make_map(flow: FlowState) -> LorentzMap:
    """
    Build the space-time map that removes ``flow`` from the acoustic system.

    Parameters
    ----------
    flow: FlowState
        Subsonic background flow, planar or three-dimensional.

    Returns
    -------
    LorentzMap
    """
    c0 = flow.c0
    su = _shrink(flow.u0, c0)
    sv = _shrink(flow.v0, c0)
    sw = _shrink(flow.w0, c0)
    tilt = c0**2 * (1.0 - flow.mach() ** 2)
    return LorentzMap(
        ax=1.0 / su,
        ay=1.0 / sv,
        az=1.0 / sw,
        tx=flow.u0 / tilt,
        ty=flow.v0 / tilt,
        tz=flow.w0 / tilt,
        alpha=flow.u0 * flow.v0 / (c0**2 * su * sv),
        beta=flow.u0 * flow.w0 / (c0**2 * su * sw),
        gamma=flow.v0 * flow.w0 / (c0**2 * sv * sw),
    )


def map_spacetime(lmap: LorentzMap, x: Number, y: Number, t: Number):
    """Map ``(x, y, t)`` to ``(x', y', t')``."""
    return lmap.ax * x, lmap.ay * y, t + lmap.tx * x + lmap.ty * y


def inverse_map(lmap: LorentzMap, x_prime: Number, y_prime: Number, t_prime: Number):
    """Map ``(x', y', t')`` back to ``(x, y, t)``."""
    x = x_prime / lmap.ax
    y = y_prime / lmap.ay
    return x, y, t_prime - lmap.tx * x - lmap.ty * y


def map_spacetime_3d(lmap: LorentzMap, x: Number, y: Number, z: Number, t: Number):
    """Map ``(x, y, z, t)`` to the transformed coordinates."""
    return (
        lmap.ax * x,
        lmap.ay * y,
        lmap.az * z,
        t + lmap.tx * x + lmap.ty * y + lmap.tz * z,
    )


def inverse_map_3d(lmap: LorentzMap, x_prime, y_prime, z_prime, t_prime):
    """Inverse of ``map_spacetime_3d``."""
    x = x_prime / lmap.ax
    y = y_prime / lmap.ay
    z = z_prime / lmap.az
    return x, y, z, t_prime - lmap.tx * x - lmap.ty * y - lmap.tz * z


def _require_planar(flow: FlowState):
    if flow.w0 != 0.0:
        raise InvalidFlowState(f"w0={flow.w0} needs the three-dimensional transform")


def to_tilde(lmap: LorentzMap, flow: FlowState, p_prime, xi_prime, zeta_prime):
    """
    Change of unknowns ``(p', xi', zeta') -> (p~, xi~, zeta~)`` for planar flows.

    Parameters
    ----------
    lmap: LorentzMap
        Map built from ``flow``.
    flow: FlowState
        Planar subsonic flow.
    p_prime, xi_prime, zeta_prime: float or numpy.ndarray
        Pressure and impulses expressed in the transformed coordinates.

    Returns
    -------
    tuple
        ``(p~, xi~, zeta~)``.
    """
    _require_planar(flow)
    c0 = flow.c0
    gap = 1.0 - flow.mach() ** 2
    su = 1.0 / lmap.ax
    sv = 1.0 / lmap.ay
    cross = flow.u0 * flow.v0 / c0**2
    p_tilde = p_prime + (flow.u0 * xi_prime + flow.v0 * zeta_prime) / gap
    xi_tilde = su * (sv**2 * xi_prime + cross * zeta_prime) / gap
    zeta_tilde = sv * (cross * xi_prime + su**2 * zeta_prime) / gap
    return p_tilde, xi_tilde, zeta_tilde


def from_tilde(lmap: LorentzMap, flow: FlowState, p_tilde, xi_tilde, zeta_tilde):
    """Inverse of ``to_tilde``."""
    _require_planar(flow)
    gap = 1.0 - flow.mach() ** 2
    xi_prime = (xi_tilde - lmap.alpha * zeta_tilde) / lmap.ax
    zeta_prime = (zeta_tilde - lmap.alpha * xi_tilde) / lmap.ay
    p_prime = p_tilde - (flow.u0 * xi_prime + flow.v0 * zeta_prime) / gap
    return p_prime, xi_prime, zeta_prime


def _coupling_matrix(lmap: LorentzMap) -> np.ndarray:
    return np.array(
        [
            [1.0, -lmap.alpha, -lmap.beta],
            [-lmap.alpha, 1.0, -lmap.gamma],
            [-lmap.beta, -lmap.gamma, 1.0],
        ]
    )


def to_tilde_3d(flow: FlowState, p_prime, xi_prime, zeta_prime, chi_prime):
    """
    Change of unknowns for a three-dimensional flow.

    The impulses solve ``C (xi~, zeta~, chi~) = (xi'/su, zeta'/sv, chi'/sw)``
    where ``C`` holds the three coupling coefficients.

    Returns
    -------
    tuple
        ``(p~, xi~, zeta~, chi~)``.
    """
    lmap = make_map(flow)
    gap = 1.0 - flow.mach() ** 2
    flux = flow.u0 * xi_prime + flow.v0 * zeta_prime + flow.w0 * chi_prime
    p_tilde = p_prime + flux / gap
    rhs = np.stack(
        np.broadcast_arrays(
            np.asarray(xi_prime, dtype=float) * lmap.ax,
            np.asarray(zeta_prime, dtype=float) * lmap.ay,
            np.asarray(chi_prime, dtype=float) * lmap.az,
        ),
        axis=-1,
    )
    solved = np.einsum("ij,...j->...i", np.linalg.inv(_coupling_matrix(lmap)), rhs)
    return p_tilde, solved[..., 0], solved[..., 1], solved[..., 2]


def from_tilde_3d(flow: FlowState, p_tilde, xi_tilde, zeta_tilde, chi_tilde):
    """Inverse of ``to_tilde_3d``."""
    lmap = make_map(flow)
    gap = 1.0 - flow.mach() ** 2
    xi_prime = (xi_tilde - lmap.alpha * zeta_tilde - lmap.beta * chi_tilde) / lmap.ax
    zeta_prime = (zeta_tilde - lmap.alpha * xi_tilde - lmap.gamma * chi_tilde) / lmap.ay
    chi_prime = (chi_tilde - lmap.beta * xi_tilde - lmap.gamma * zeta_tilde) / lmap.az
    flux = flow.u0 * xi_prime + flow.v0 * zeta_prime + flow.w0 * chi_prime
    p_prime = p_tilde - flux / gap
    return p_prime, xi_prime, zeta_prime, chi_prime


def modified_celerity(flow: FlowState) -> float:
    """Propagation speed ``c0 sqrt(1 - M0^2)`` in the transformed coordinates."""
    return flow.c0 * math.sqrt(1.0 - flow.mach() ** 2)


def aligned_map(flow: FlowState) -> LorentzMap:
    """Space-time map for a flow along ``x``, from the one-dimensional formulas."""
    if not flow.is_flow_aligned():
        raise InvalidFlowState(f"flow ({flow.u0}, {flow.v0}, {flow.w0}) is not along x")
    mach = flow.u0 / flow.c0
    return LorentzMap(
        ax=1.0 / math.sqrt(1.0 - mach**2),
        tx=flow.u0 / (flow.c0**2 - flow.u0**2),
    )


def aligned_to_tilde(flow: FlowState, p_prime, xi_prime, zeta_prime):
    """Change of unknowns for a flow along ``x``."""
    if not flow.is_flow_aligned():
        raise InvalidFlowState(f"flow ({flow.u0}, {flow.v0}, {flow.w0}) is not along x")
    mach = flow.u0 / flow.c0
    return (
        p_prime + flow.u0 * xi_prime / (1.0 - mach**2),
        xi_prime / math.sqrt(1.0 - mach**2),
        zeta_prime,
    )


def aligned_from_tilde(flow: FlowState, p_tilde, xi_tilde, zeta_tilde):
    """Inverse of ``aligned_to_tilde``."""
    if not flow.is_flow_aligned():
        raise InvalidFlowState(f"flow ({flow.u0}, {flow.v0}, {flow.w0}) is not along x")
    mach = flow.u0 / flow.c0
    xi_prime = xi_tilde * math.sqrt(1.0 - mach**2)
    return p_tilde - flow.u0 * xi_prime / (1.0 - mach**2), xi_prime, zeta_tilde


def derivative_transform(lmap: LorentzMap) -> np.ndarray:
    """
    Chain-rule matrix from transformed to original derivatives.

    Returns
    -------
    numpy.ndarray
        ``T`` with ``(d/dx, d/dy, d/dt) = T @ (d/dx', d/dy', d/dt')``.
    """
    return np.array(
        [
            [lmap.ax, 0.0, lmap.tx],
            [0.0, lmap.ay, lmap.ty],
            [0.0, 0.0, 1.0],
        ]
    )


def convected_wave_residual(flow: FlowState, derivatives: dict):
    """
    Residual of the convected wave equation for supplied second derivatives.

    ``derivatives`` maps ``"tt"``, ``"xt"``, ``"yt"``, ``"xx"``, ``"xy"`` and
    ``"yy"`` to values of the corresponding second derivatives of ``p``.
    """
    u0, v0 = flow.u0, flow.v0
    return (
        derivatives["tt"]
        + 2.0 * u0 * derivatives["xt"]
        + 2.0 * v0 * derivatives["yt"]
        + u0**2 * derivatives["xx"]
        + 2.0 * u0 * v0 * derivatives["xy"]
        + v0**2 * derivatives["yy"]
        - flow.c0**2 * (derivatives["xx"] + derivatives["yy"])
    )


class PlaneWave(NamedTuple):
    """Complex amplitudes of ``exp(i (kx x + ky y - omega t))`` fields."""

    kx: float
    ky: float
    omega: float
    p: complex
    xi: complex
    zeta: complex

    def derivatives(self) -> dict:
        """First derivatives of each field, keyed like ``"xi_t"``."""
        out = {}
        for name in ("p", "xi", "zeta"):
            amplitude = getattr(self, name)
            out[f"{name}_t"] = -1j * self.omega * amplitude
            out[f"{name}_x"] = 1j * self.kx * amplitude
            out[f"{name}_y"] = 1j * self.ky * amplitude
        return out


def irrotational_plane_wave(
    flow: FlowState, kx: float, ky: float, amplitude: complex = 1.0
) -> PlaneWave:
    """
    Downstream-propagating acoustic plane wave on ``flow``.

    The frequency follows the convected dispersion ``omega = k.u0 + c0 |k|``
    and the impulses are ``p (n / c0 + u0 / c0^2)`` with ``n = k / |k|``.
    """
    norm = math.hypot(kx, ky)
    if norm == 0.0:
        raise InvalidFlowState("plane wave needs a nonzero wavevector")
    c0 = flow.c0
    omega = kx * flow.u0 + ky * flow.v0 + c0 * norm
    return PlaneWave(
        kx,
        ky,
        omega,
        amplitude,
        amplitude * (kx / norm / c0 + flow.u0 / c0**2),
        amplitude * (ky / norm / c0 + flow.v0 / c0**2),
    )


def transformed_plane_wave(flow: FlowState, wave: PlaneWave) -> PlaneWave:
    """Express ``wave`` in the transformed coordinates and unknowns."""
    lmap = make_map(flow)
    p_t, xi_t, zeta_t = to_tilde(lmap, flow, wave.p, wave.xi, wave.zeta)
    return PlaneWave(
        (wave.kx + wave.omega * lmap.tx) / lmap.ax,
        (wave.ky + wave.omega * lmap.ty) / lmap.ay,
        wave.omega,
        p_t,
        xi_t,
        zeta_t,
    )


def advective_system_residual(flow: FlowState, derivatives: dict):
    """
    Residuals of the conservative linearized advective system.

    ``derivatives`` holds first derivatives keyed ``"p_t"``, ``"xi_x"`` and so on.

    Returns
    -------
    tuple
        Residuals of the pressure, ``xi`` and ``zeta`` equations.
    """
    d = derivatives
    u0, v0, c2 = flow.u0, flow.v0, flow.c0**2
    mass = d["p_t"] + c2 * (d["xi_x"] + d["zeta_y"])
    shear_x = u0 * d["zeta_x"] + v0 * d["xi_x"] - u0 * v0 / c2 * d["p_x"]
    shear_y = u0 * d["zeta_y"] + v0 * d["xi_y"] - u0 * v0 / c2 * d["p_y"]
    momentum_x = (
        d["xi_t"] + 2.0 * u0 * d["xi_x"] + (c2 - u0**2) / c2 * d["p_x"] + shear_y
    )
    momentum_y = (
        d["zeta_t"] + shear_x + 2.0 * v0 * d["zeta_y"] + (c2 - v0**2) / c2 * d["p_y"]
    )
    return mass, momentum_x, momentum_y


def transformed_system_residual(flow: FlowState, values: PlaneWave, derivatives=None):
    """
    Residuals of the transformed non-advective system.

    Parameters
    ----------
    flow: FlowState
        Planar background flow.
    values: PlaneWave
        Fields in transformed coordinates and unknowns.
    derivatives: dict, optional
        First derivatives in the transformed coordinates. Taken from ``values``
        when omitted.

    Returns
    -------
    tuple
        Residuals of the pressure, ``xi~`` and ``zeta~`` equations.
    """
    d = derivatives if derivatives is not None else values.derivatives()
    alpha = make_map(flow).alpha
    c2 = flow.c0**2
    gap = 1.0 - flow.mach() ** 2
    mass = (
        d["p_t"]
        + c2 * (d["xi_x"] - alpha * d["zeta_x"])
        + c2 * (d["zeta_y"] - alpha * d["xi_y"])
    )
    return mass, d["xi_t"] + gap * d["p_x"], d["zeta_t"] + gap * d["p_y"]


class CollocatedFields(NamedTuple):
    """Pressure and impulses sampled at the same points."""

    p: np.ndarray
    xi: np.ndarray
    zeta: np.ndarray


def _collocate(fields) -> CollocatedFields:
    if isinstance(fields, FieldSet):
        xi_c, zeta_c = centered_impulses(fields)
        return CollocatedFields(fields.pressure, xi_c, zeta_c)
    return CollocatedFields(*fields)


def fields_to_tilde(fields, flow: FlowState) -> CollocatedFields:
    """
    Apply ``to_tilde`` pointwise to whole fields.

    A ``FieldSet`` is first collocated at the cell centers.
    """
    values = _collocate(fields)
    return CollocatedFields(*to_tilde(make_map(flow), flow, *values))


def fields_from_tilde(fields, flow: FlowState) -> CollocatedFields:
    """Apply ``from_tilde`` pointwise to whole fields."""
    values = _collocate(fields)
    return CollocatedFields(*from_tilde(make_map(flow), flow, *values))


class TimeLevelInterpolator:
    """
    Linear interpolation between the two most recent time levels.

    Transformed time depends on position, so a fixed original-time sample
    falls between two transformed levels at a different place for every
    point.

    Examples
    --------
    >>> interp = TimeLevelInterpolator()
    >>> interp.push(0.0, 1.0)
    >>> interp.push(1.0, 3.0)
    >>> interp.at(0.25)
    1.5
    """

    def __init__(self, tolerance: float = 1e-12):
        self._levels = deque(maxlen=2)
        self._tolerance = tolerance

    def push(self, time: float, values) -> None:
        if self._levels and time <= self._levels[-1][0]:
            raise TimeLevelOutOfRange(time, self.span)
        self._levels.append((float(time), values))

    @property
    def span(self) -> tuple[float, float] | None:
        if not self._levels:
            return None
        return self._levels[0][0], self._levels[-1][0]

    def __len__(self):
        return len(self._levels)

    def covers(self, time) -> bool:
        if len(self._levels) < 2:
            return False
        t0, t1 = self.span
        times = np.asarray(time)
        tolerance = self._tolerance
        return bool(np.all(times >= t0 - tolerance) and np.all(times <= t1 + tolerance))

    def at(self, time):
        """
        Interpolant at ``time``, a scalar or an array broadcast against values.

        Raises
        ------
        TimeLevelOutOfRange
            If any requested time is outside the stored levels.
        """
        if not self.covers(time):
            raise TimeLevelOutOfRange(time, self.span)
        (t0, v0), (t1, v1) = self._levels
        weight = (np.asarray(time) - t0) / (t1 - t0)
        result = (1.0 - weight) * np.asarray(v0) + weight * np.asarray(v1)
        return float(result) if np.ndim(result) == 0 else result


class SupersonicFlow(ValueError):
    """Raised when the background flow is sonic or supersonic."""

    def __init__(self, mach: float):
        super().__init__(f"Mach number {mach:.6g} is not strictly subsonic.")


class InvalidFlowState(ValueError):
    """Raised when flow parameters are not physical."""

    def __init__(self, reason: str):
        super().__init__(f"Invalid flow state: {reason}.")


class TimeLevelOutOfRange(ValueError):
    """Raised when interpolation is requested outside the stored levels."""

    def __init__(self, time, span):
        times = np.asarray(time)
        super().__init__(
            f"Requested time(s) in [{times.min():.6g}, {times.max():.6g}] "
            f"are not inside the stored levels {span}."
        )
