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
Provides the ``SigmaProfile`` class and the absorbing-layer right-hand sides.

Every right-hand side returns a ``FieldSet`` of time derivatives shaped like
its input. The operators are written as a flux part plus a zero-order damping
part, so that wherever the absorbing coefficients vanish they coincide with the
free operators exactly.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
import logging
import math
import os

import numpy as np

from ansys.acoustics import _stencils as st
from ansys.acoustics.flow import FlowState, InvalidFlowState
from ansys.acoustics.grid import FieldSet, StaggeredGrid
from ansys.acoustics.stations import Station

logger = logging.getLogger(__name__)


@dataclass
class SigmaProfile:
    """
    Samplings of the absorbing coefficients along each axis.

    ``*_at_centers`` hold the coefficient at half-integer positions ``i+1/2``
    (length ``J``) and ``*_at_edges`` at integer positions ``i``
    (length ``J+1``). Pressure equations read the center samples along their
    own axis; impulse equations read the edge samples.
    """

    grid: StaggeredGrid
    sigma_x_at_centers: np.ndarray
    sigma_x_at_edges: np.ndarray
    sigma_y_at_centers: np.ndarray
    sigma_y_at_edges: np.ndarray
    sigma_max: float = 0.0
    ramp_exponent: int = 2
    kind: str = field(default="polynomial")

    def __post_init__(self):
        J = self.grid.J
        for name, size in (
            ("sigma_x_at_centers", J),
            ("sigma_x_at_edges", J + 1),
            ("sigma_y_at_centers", J),
            ("sigma_y_at_edges", J + 1),
        ):
            values = np.asarray(getattr(self, name), dtype=np.float64)
            if values.shape != (size,):
                raise InvalidSigmaProfile(
                    f"{name} has shape {values.shape}, expected ({size},)"
                )
            if not np.isfinite(values).all() or (values < 0).any():
                raise InvalidSigmaProfile(f"{name} must be finite and non-negative")
            setattr(self, name, values)

    @classmethod
    def zero(cls, grid: StaggeredGrid) -> SigmaProfile:
        """All-zero profile on ``grid``."""
        J = grid.J
        return cls(
            grid,
            np.zeros(J),
            np.zeros(J + 1),
            np.zeros(J),
            np.zeros(J + 1),
            0.0,
            2,
            "zero",
        )

    def is_zero(self) -> bool:
        return not (
            self.sigma_x_at_centers.any()
            or self.sigma_x_at_edges.any()
            or self.sigma_y_at_centers.any()
            or self.sigma_y_at_edges.any()
        )

    def sigma_x(self, station: Station) -> np.ndarray:
        """
        ``sigma_x`` sampled for a field on ``station``, as a ``(1, nx)`` row.
        """
        if station.offset_x == 0.0:
            return self.sigma_x_at_edges[np.newaxis, :]
        return self.sigma_x_at_centers[np.newaxis, :]

    def sigma_y(self, station: Station) -> np.ndarray:
        """
        ``sigma_y`` sampled for a field on ``station``, as a ``(ny, 1)`` column.
        """
        if station.offset_y == 0.0:
            return self.sigma_y_at_edges[:, np.newaxis]
        return self.sigma_y_at_centers[:, np.newaxis]


def _depth_in_cells(positions: np.ndarray, cells: int, J: int) -> np.ndarray:
    """Distance from the interior into either layer, in cells."""
    return np.maximum(np.maximum(cells - positions, positions - (J - cells)), 0.0)


def _check_sigma(value, name: str):
    numeric = isinstance(value, (int, float, np.floating))
    if not (numeric and math.isfinite(value) and value >= 0):
        raise InvalidSigmaProfile(f"{name}={value!r} must be a non-negative number")


def polynomial_profile(
    grid: StaggeredGrid, sigma_max: float, ramp_exponent: int = 2
) -> SigmaProfile:
    """
    Polynomial ramp ``sigma_max (d / delta) ** ramp_exponent``.

    ``d`` is the depth into the layer measured from the interface and
    ``delta`` the layer thickness, so the coefficient is zero at the interface
    and reaches ``sigma_max`` on the outer boundary.

    Parameters
    ----------
    grid: StaggeredGrid
        Grid carrying the layer thicknesses.
    sigma_max: float
        Peak coefficient.
    ramp_exponent: int, optional
        Polynomial degree, at least 1.

    Returns
    -------
    SigmaProfile
    """
    _check_sigma(sigma_max, "sigma_max")
    integral = isinstance(ramp_exponent, int) and not isinstance(ramp_exponent, bool)
    if not integral or ramp_exponent < 1:
        raise InvalidSigmaProfile(
            f"ramp_exponent={ramp_exponent!r} must be an integer >= 1"
        )

    J = grid.J
    centers = np.arange(J) + 0.5
    edges = np.arange(J + 1, dtype=float)

    def ramp(positions, cells):
        if cells == 0:
            return np.zeros_like(positions)
        depth = _depth_in_cells(positions, cells, J)
        return sigma_max * (depth / cells) ** ramp_exponent

    return SigmaProfile(
        grid,
        ramp(centers, grid.pml_cells_x),
        ramp(edges, grid.pml_cells_x),
        ramp(centers, grid.pml_cells_y),
        ramp(edges, grid.pml_cells_y),
        float(sigma_max),
        ramp_exponent,
        "polynomial",
    )


def constant_profile(grid: StaggeredGrid, sigma_value: float) -> SigmaProfile:
    """
    Coefficient ``sigma_value`` at every station strictly inside the layers.

    Stations on the interface and in the interior get zero.
    """
    _check_sigma(sigma_value, "sigma_value")
    J = grid.J
    centers = np.arange(J) + 0.5
    edges = np.arange(J + 1, dtype=float)

    def plateau(positions, cells):
        depth = _depth_in_cells(positions, cells, J)
        return np.where(depth > 0.0, float(sigma_value), 0.0)

    return SigmaProfile(
        grid,
        plateau(centers, grid.pml_cells_x),
        plateau(edges, grid.pml_cells_x),
        plateau(centers, grid.pml_cells_y),
        plateau(edges, grid.pml_cells_y),
        float(sigma_value),
        1,
        "constant",
    )


def default_sigma_max(
    grid: StaggeredGrid, celerity: float = 1.0, coefficient: float = 8.0
) -> float:
    """
    Peak coefficient ``coefficient * celerity / delta`` for the thickest layer.

    Returns zero on a grid without layers.
    """
    cells = max(grid.pml_cells_x, grid.pml_cells_y)
    if cells == 0:
        return 0.0
    return coefficient * celerity / (cells * grid.dx)


def _layer_integral(profile: SigmaProfile, cells: int, depth_cells: float) -> float:
    """Integral of the coefficient from the interface to ``depth_cells``."""
    if cells == 0 or depth_cells <= 0:
        return 0.0
    depth_cells = min(depth_cells, cells)
    dx = profile.grid.dx
    if profile.kind == "constant":
        return profile.sigma_max * depth_cells * dx
    if profile.kind == "zero":
        return 0.0
    m = profile.ramp_exponent
    return profile.sigma_max * cells * dx / (m + 1) * (depth_cells / cells) ** (m + 1)


def theoretical_reflection(
    profile: SigmaProfile, celerity: float = 1.0, axis: str = "x"
) -> float:
    """
    Normal-incidence round-trip reflection ``exp(-2 int sigma / c)``.
    """
    cells = profile.grid.pml_cells_x if axis == "x" else profile.grid.pml_cells_y
    return math.exp(-2.0 * _layer_integral(profile, cells, cells) / celerity)


def decay_bound(
    profile: SigmaProfile, depth_cells: float, ky_over_omega: float, axis: str = "y"
) -> float:
    """
    Attenuation envelope ``exp(-(ky / omega) int_0^depth sigma)`` inside a layer.
    """
    cells = profile.grid.pml_cells_y if axis == "y" else profile.grid.pml_cells_x
    return math.exp(-ky_over_omega * _layer_integral(profile, cells, depth_cells))


def write_profile_csv(path: str | os.PathLike, profile: SigmaProfile) -> None:
    """Dump the ``x`` coefficient samplings, one row per edge index."""
    grid = profile.grid
    x_edges, _ = grid.coordinates(Station.X_EDGE)
    x_centers, _ = grid.coordinates(Station.CENTER)
    with open(path, "w", newline="", encoding="utf8") as out:
        writer = csv.writer(out)
        writer.writerow(
            [
                "index",
                "edge_position",
                "center_position",
                "sigma_x_center",
                "sigma_x_edge",
            ]
        )
        for i in range(grid.J + 1):
            inside = i < grid.J
            writer.writerow(
                [
                    i,
                    repr(float(x_edges[i])),
                    repr(float(x_centers[i])) if inside else "",
                    repr(float(profile.sigma_x_at_centers[i])) if inside else "",
                    repr(float(profile.sigma_x_at_edges[i])),
                ]
            )
    logger.info("Wrote sigma profile to %s", path)


def _rates(fields: FieldSet, dp_x, dp_y, dxi, dzeta) -> FieldSet:
    rates = FieldSet(fields.grid, dp_x, dp_y, dxi, dzeta, fields.time_level)
    return rates.enforce_dirichlet()


def free_rhs(fields: FieldSet, celerity: float = 1.0) -> FieldSet:
    """
    Free acoustic system on the staggered grid.

    With ``celerity`` one this is the scaled system; other values give the
    wave speed ``celerity`` with impulses scaled so that both equations share
    it.
    """
    grid = fields.grid
    pressure = fields.pressure
    return _rates(
        fields,
        -(celerity * st.x_difference_to_centers(fields.xi) / grid.dx),
        -(celerity * st.y_difference_to_centers(fields.zeta) / grid.dy),
        -(celerity * st.x_difference_to_edges(pressure) / grid.dx),
        -(celerity * st.y_difference_to_edges(pressure) / grid.dy),
    )


def _no_flow_flux(fields: FieldSet, c0: float) -> tuple:
    grid = fields.grid
    pressure = fields.pressure
    return (
        -(c0**2 * st.x_difference_to_centers(fields.xi) / grid.dx),
        -(c0**2 * st.y_difference_to_centers(fields.zeta) / grid.dy),
        -(st.x_difference_to_edges(pressure) / grid.dx),
        -(st.y_difference_to_edges(pressure) / grid.dy),
    )


def pml_rhs_no_flow(
    fields: FieldSet, profile: SigmaProfile, flow: FlowState
) -> FieldSet:
    """
    Split-field absorbing system without flow.

    ``dp_x/dt = -sigma_x p_x - c0^2 dxi/dx`` and
    ``dxi/dt = -sigma_x xi - dp/dx``, with the ``y`` equations alike.

    Parameters
    ----------
    fields: FieldSet
        Current unknowns.
    profile: SigmaProfile
        Coefficients on the same grid.
    flow: FlowState
        Supplies ``c0``. Must be at rest.

    Returns
    -------
    FieldSet
        Time derivatives of each unknown.

    Raises
    ------
    InvalidFlowState
        If ``flow`` carries a mean velocity; ``pml_rhs_advective`` covers that.
    """
    if not flow.is_at_rest:
        raise InvalidFlowState(f"flow ({flow.u0}, {flow.v0}, {flow.w0}) is not at rest")
    flux_px, flux_py, flux_xi, flux_zeta = _no_flow_flux(fields, flow.c0)
    return _rates(
        fields,
        flux_px - profile.sigma_x(Station.CENTER) * fields.p_x,
        flux_py - profile.sigma_y(Station.CENTER) * fields.p_y,
        flux_xi - profile.sigma_x(Station.X_EDGE) * fields.xi,
        flux_zeta - profile.sigma_y(Station.Y_EDGE) * fields.zeta,
    )


def advective_rhs(fields: FieldSet, flow: FlowState) -> FieldSet:
    """
    Conservative linearized advective system.

    ``dxi/dt = -d/dx(2 u0 xi + (1 - u0^2/c0^2) p)
    - d/dy(u0 zeta + v0 xi - u0 v0 p / c0^2)`` and symmetrically for ``zeta``.
    The cross fluxes are formed at the cell corners; corners on the outer
    boundary are held at zero.
    """
    grid = fields.grid
    u0, v0, c2 = flow.u0, flow.v0, flow.c0**2
    pressure = fields.pressure
    xi_c = st.x_edges_to_centers(fields.xi)
    zeta_c = st.y_edges_to_centers(fields.zeta)

    p_corner = st.x_edges_to_corners(st.centers_to_x_edges(pressure))
    shear_corner = (
        u0 * st.y_edges_to_corners(fields.zeta)
        + v0 * st.x_edges_to_corners(fields.xi)
        - u0 * v0 / c2 * p_corner
    )
    normal_x = 2.0 * u0 * xi_c + (c2 - u0**2) / c2 * pressure
    normal_y = 2.0 * v0 * zeta_c + (c2 - v0**2) / c2 * pressure

    return _rates(
        fields,
        -(c2 * st.x_difference_to_centers(fields.xi) / grid.dx),
        -(c2 * st.y_difference_to_centers(fields.zeta) / grid.dy),
        -(
            st.x_difference_to_edges(normal_x) / grid.dx
            + st.corners_y_difference_to_x_edges(shear_corner) / grid.dy
        ),
        -(
            st.corners_x_difference_to_y_edges(shear_corner) / grid.dx
            + st.y_difference_to_edges(normal_y) / grid.dy
        ),
    )


def _advective_flux(fields: FieldSet, flow: FlowState) -> tuple:
    grid = fields.grid
    u0, v0, c0 = flow.u0, flow.v0, flow.c0
    gap = 1.0 - flow.mach() ** 2
    pressure = fields.pressure
    xi_c = st.x_edges_to_centers(fields.xi)
    zeta_c = st.y_edges_to_centers(fields.zeta)
    return (
        -(c0**2 * st.x_difference_to_centers(fields.xi) / grid.dx),
        -(c0**2 * st.y_difference_to_centers(fields.zeta) / grid.dy),
        -(
            st.x_difference_to_edges(2.0 * u0 * xi_c + v0 * zeta_c) / grid.dx
            + gap * st.x_difference_to_edges(pressure) / grid.dx
            + st.corners_y_difference_to_x_edges(
                u0 * st.y_edges_to_corners(fields.zeta)
            )
            / grid.dy
        ),
        -(
            st.corners_x_difference_to_y_edges(v0 * st.x_edges_to_corners(fields.xi))
            / grid.dx
            + st.y_difference_to_edges(u0 * xi_c + 2.0 * v0 * zeta_c) / grid.dy
            + gap * st.y_difference_to_edges(pressure) / grid.dy
        ),
    )


def pml_rhs_advective(
    fields: FieldSet, profile: SigmaProfile, flow: FlowState
) -> FieldSet:
    """
    Split-field absorbing system on a uniform subsonic flow.

    The flux part uses the irrotational form of the advective system, in which
    the pressure gradient carries ``1 - M0^2``. The damping part holds every
    zero-order term in ``sigma_x``, ``sigma_y``, ``u0`` and ``v0``. Fields that
    are needed off their own station are moved with two- or four-point means.
    The unknowns are physical, as in ``pml_rhs_no_flow``, to which this reduces
    at zero velocity for any ``c0``.

    Parameters
    ----------
    fields: FieldSet
        Current unknowns.
    profile: SigmaProfile
        Coefficients on the same grid.
    flow: FlowState
        Subsonic planar flow.

    Returns
    -------
    FieldSet
        Time derivatives of each unknown.
    """
    u0, v0, c2 = flow.u0, flow.v0, flow.c0**2
    shrink = math.sqrt(1.0 - flow.mach() ** 2)
    flux_px, flux_py, flux_xi, flux_zeta = _advective_flux(fields, flow)

    sx_c = profile.sigma_x(Station.CENTER)
    sy_c = profile.sigma_y(Station.CENTER)
    sx_xe = profile.sigma_x(Station.X_EDGE)
    sy_xe = profile.sigma_y(Station.X_EDGE)
    sx_ye = profile.sigma_x(Station.Y_EDGE)
    sy_ye = profile.sigma_y(Station.Y_EDGE)

    xi_c = st.x_edges_to_centers(fields.xi)
    zeta_c = st.y_edges_to_centers(fields.zeta)
    px_xe = st.centers_to_x_edges(fields.p_x)
    py_xe = st.centers_to_x_edges(fields.p_y)
    px_ye = st.centers_to_y_edges(fields.p_x)
    py_ye = st.centers_to_y_edges(fields.p_y)
    zeta_xe = st.y_edges_to_x_edges(fields.zeta)
    xi_ye = st.x_edges_to_y_edges(fields.xi)

    damp_px = shrink * sx_c * fields.p_x + u0 / shrink * sx_c * xi_c
    damp_py = shrink * sy_c * fields.p_y + v0 / shrink * sy_c * zeta_c
    damp_xi = (
        (1.0 + (u0**2 - v0**2) / c2) / shrink * sx_xe * fields.xi
        + u0 * shrink / c2 * (sx_xe * px_xe + sy_xe * py_xe)
        + u0 * v0 * (sx_xe + sy_xe) / (c2 * shrink) * zeta_xe
    )
    damp_zeta = (
        (1.0 + (v0**2 - u0**2) / c2) / shrink * sy_ye * fields.zeta
        + v0 * shrink / c2 * (sx_ye * px_ye + sy_ye * py_ye)
        + u0 * v0 * (sx_ye + sy_ye) / (c2 * shrink) * xi_ye
    )
    return _rates(
        fields,
        flux_px - damp_px,
        flux_py - damp_py,
        flux_xi - damp_xi,
        flux_zeta - damp_zeta,
    )


def advective_flux_rhs(fields: FieldSet, flow: FlowState) -> FieldSet:
    """Flux part of ``pml_rhs_advective``, the operator used outside the layers."""
    return _rates(fields, *_advective_flux(fields, flow))


class InvalidSigmaProfile(ValueError):
    """Raised when absorbing coefficients are negative, non-finite or misshapen."""

    def __init__(self, reason: str):
        super().__init__(f"Invalid absorbing profile: {reason}.")
