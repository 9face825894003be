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
"""Provides the ``StaggeredGrid`` and ``FieldSet`` classes."""

from __future__ import annotations

from dataclasses import dataclass
import math
import os
from typing import NamedTuple

import numpy as np

from ansys.acoustics.stations import Station


class StaggeredGrid:
    """
    Square staggered grid with optional absorbing layers on every side.

    The domain is ``[x0, x0 + L] x [y0, y0 + L]`` split into ``J`` cells per
    direction with ``dx = dy = L / J``. Pressure lives at cell centers, the
    impulse ``xi`` on vertical edges and ``zeta`` on horizontal edges.

    Parameters
    ----------
    J: int
        Number of cells per direction, at least 4.
    L: float
        Side length of the domain.
    pml_cells_x: int, optional
        Thickness in cells of the left and right absorbing layers.
    pml_cells_y: int, optional
        Thickness in cells of the bottom and top absorbing layers.
    origin: tuple[float, float], optional
        Position of the lower-left domain corner.

    Examples
    --------
    >>> from ansys.acoustics import StaggeredGrid
    >>> grid = StaggeredGrid(J=100, L=100.0, pml_cells_x=45, pml_cells_y=45)
    >>> grid.dx
    1.0
    """

    def __init__(
        self,
        J: int,
        L: float,
        pml_cells_x: int = 0,
        pml_cells_y: int = 0,
        origin: tuple[float, float] = (0.0, 0.0),
    ):
        if isinstance(J, bool) or not isinstance(J, (int, np.integer)) or J < 4:
            raise InvalidGridConfiguration(
                f"cell count J={J!r} must be an integer >= 4"
            )
        if not L > 0 or not math.isfinite(L):
            raise InvalidGridConfiguration(f"side length L={L!r} must be positive")
        for name, cells in (("pml_cells_x", pml_cells_x), ("pml_cells_y", pml_cells_y)):
            if (
                isinstance(cells, bool)
                or not isinstance(cells, (int, np.integer))
                or cells < 0
            ):
                raise InvalidGridConfiguration(
                    f"{name}={cells!r} must be a non-negative integer"
                )
            if 2 * cells >= J:
                raise InvalidGridConfiguration(
                    f"{name}={cells} leaves no interior in a {J}-cell grid"
                )

        self._J = int(J)
        self._L = float(L)
        self._pml_cells_x = int(pml_cells_x)
        self._pml_cells_y = int(pml_cells_y)
        self._origin = (float(origin[0]), float(origin[1]))
        self._dx = self._L / self._J

    @property
    def J(self) -> int:
        """Number of cells per direction."""
        return self._J

    @property
    def L(self) -> float:
        """Side length of the domain."""
        return self._L

    @property
    def dx(self) -> float:
        """Spacing along ``x``."""
        return self._dx

    @property
    def dy(self) -> float:
        """Spacing along ``y``, always equal to ``dx``."""
        return self._dx

    @property
    def pml_cells_x(self) -> int:
        """Thickness of the x-facing layers in cells."""
        return self._pml_cells_x

    @property
    def pml_cells_y(self) -> int:
        """Thickness of the y-facing layers in cells."""
        return self._pml_cells_y

    @property
    def origin(self) -> tuple[float, float]:
        """Position of the lower-left corner of the domain."""
        return self._origin

    @property
    def interior_bounds(self) -> tuple[float, float, float, float]:
        """Physical box ``(xmin, xmax, ymin, ymax)`` free of absorbing layers."""
        x0, y0 = self._origin
        return (
            x0 + self._pml_cells_x * self._dx,
            x0 + (self._J - self._pml_cells_x) * self._dx,
            y0 + self._pml_cells_y * self._dx,
            y0 + (self._J - self._pml_cells_y) * self._dx,
        )

    def shape(self, station: Station) -> tuple[int, int]:
        """Array shape ``(ny, nx)`` of a field stored on ``station``."""
        return station.shape(self._J)

    def size(self, station: Station) -> int:
        """Number of entries of a field stored on ``station``."""
        ny, nx = self.shape(station)
        return ny * nx

    def coordinates(self, station: Station) -> tuple[np.ndarray, np.ndarray]:
        """
        Station positions along each axis.

        Parameters
        ----------
        station: Station
            Staggered location.

        Returns
        -------
        tuple[numpy.ndarray, numpy.ndarray]
            One-dimensional ``x`` positions (length ``nx``) and ``y`` positions
            (length ``ny``).
        """
        ny, nx = self.shape(station)
        x0, y0 = self._origin
        xs = x0 + (np.arange(nx) + station.offset_x) * self._dx
        ys = y0 + (np.arange(ny) + station.offset_y) * self._dx
        return xs, ys

    def mesh(self, station: Station) -> tuple[np.ndarray, np.ndarray]:
        """Two-dimensional ``(X, Y)`` position arrays shaped like the field."""
        xs, ys = self.coordinates(station)
        return np.meshgrid(xs, ys)

    def position(self, station: Station, i: int, j: int) -> tuple[float, float]:
        """Physical position of the station with indices ``(i, j)``."""
        x0, y0 = self._origin
        return (
            x0 + (i + station.offset_x) * self._dx,
            y0 + (j + station.offset_y) * self._dx,
        )

    def flat_index(self, station: Station, i: int, j: int) -> int:
        """
        Index of ``(i, j)`` in the flat, x-fastest storage of ``station``.

        Raises
        ------
        UnknownStation
            If ``(i, j)`` is outside the station layout.
        """
        ny, nx = self.shape(station)
        if not (0 <= i < nx and 0 <= j < ny):
            raise UnknownStation(station, i, j)
        return j * nx + i

    def unflatten(self, station: Station, k: int) -> tuple[int, int]:
        """Inverse of ``flat_index``."""
        ny, nx = self.shape(station)
        if not 0 <= k < nx * ny:
            raise UnknownStation(station, k, None)
        j, i = divmod(k, nx)
        return i, j

    def contains(self, x: float, y: float) -> bool:
        """Whether ``(x, y)`` lies in the closed domain."""
        x0, y0 = self._origin
        return x0 <= x <= x0 + self._L and y0 <= y <= y0 + self._L

    def nearest_index(self, station: Station, x: float, y: float) -> tuple[int, int]:
        """Indices of the ``station`` location closest to ``(x, y)``."""
        ny, nx = self.shape(station)
        x0, y0 = self._origin
        i = math.floor((x - x0) / self._dx - station.offset_x + 0.5)
        j = math.floor((y - y0) / self._dx - station.offset_y + 0.5)
        return min(max(i, 0), nx - 1), min(max(j, 0), ny - 1)

    def _key(self):
        return (self._J, self._L, self._pml_cells_x, self._pml_cells_y, self._origin)

    def __eq__(self, other):
        if not isinstance(other, StaggeredGrid):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"StaggeredGrid(J={self._J}, L={self._L}, pml_cells_x={self._pml_cells_x}, "
            f"pml_cells_y={self._pml_cells_y}, origin={self._origin})"
        )


def new_grid(
    J: int,
    L: float,
    pml_cells_x: int = 0,
    pml_cells_y: int | None = None,
    origin: tuple[float, float] = (0.0, 0.0),
) -> StaggeredGrid:
    """
    Build a validated staggered grid.

    Parameters
    ----------
    J: int
        Number of cells per direction.
    L: float
        Side length.
    pml_cells_x: int, optional
        Layer thickness along ``x`` in cells.
    pml_cells_y: int, optional
        Layer thickness along ``y`` in cells, defaults to ``pml_cells_x``.
    origin: tuple[float, float], optional
        Lower-left corner.

    Returns
    -------
    StaggeredGrid
    """
    if pml_cells_y is None:
        pml_cells_y = pml_cells_x
    return StaggeredGrid(J, L, pml_cells_x, pml_cells_y, origin)


@dataclass
class FieldSet:
    """
    Unknowns of one simulation at a given time level.

    ``p_x`` and ``p_y`` are the split parts of the pressure at time ``t^n``;
    ``xi`` and ``zeta`` are the impulses at ``t^(n+1/2)``.
    """

    grid: StaggeredGrid
    p_x: np.ndarray
    p_y: np.ndarray
    xi: np.ndarray
    zeta: np.ndarray
    time_level: int = 0

    def __post_init__(self):
        expected = (
            ("p_x", Station.CENTER),
            ("p_y", Station.CENTER),
            ("xi", Station.X_EDGE),
            ("zeta", Station.Y_EDGE),
        )
        for name, station in expected:
            array = np.ascontiguousarray(getattr(self, name), dtype=np.float64)
            if array.shape != self.grid.shape(station):
                raise InvalidGridConfiguration(
                    f"field {name} has shape {array.shape}, "
                    f"expected {self.grid.shape(station)}"
                )
            setattr(self, name, array)

    @property
    def pressure(self) -> np.ndarray:
        """Total pressure ``p_x + p_y``."""
        return self.p_x + self.p_y

    def copy(self) -> FieldSet:
        return FieldSet(
            self.grid,
            self.p_x.copy(),
            self.p_y.copy(),
            self.xi.copy(),
            self.zeta.copy(),
            self.time_level,
        )

    def scaled(self, factor: float) -> FieldSet:
        """Return every field multiplied by ``factor``."""
        return FieldSet(
            self.grid,
            factor * self.p_x,
            factor * self.p_y,
            factor * self.xi,
            factor * self.zeta,
            self.time_level,
        )

    def max_norm(self) -> float:
        """Largest absolute entry over all fields."""
        return float(
            max(
                np.max(np.abs(self.p_x)),
                np.max(np.abs(self.p_y)),
                np.max(np.abs(self.xi)),
                np.max(np.abs(self.zeta)),
            )
        )

    def energy(self) -> float:
        """Discrete ``1/2 sum(p_x^2 + p_y^2 + xi^2 + zeta^2) dx dy``."""
        total = (
            np.sum(self.p_x**2)
            + np.sum(self.p_y**2)
            + np.sum(self.xi**2)
            + np.sum(self.zeta**2)
        )
        return float(0.5 * total * self.grid.dx * self.grid.dy)

    def is_finite(self) -> bool:
        return bool(
            np.isfinite(self.p_x).all()
            and np.isfinite(self.p_y).all()
            and np.isfinite(self.xi).all()
            and np.isfinite(self.zeta).all()
        )

    def enforce_dirichlet(self) -> FieldSet:
        """Zero the normal impulse on the outer boundary, in place."""
        self.xi[:, 0] = 0.0
        self.xi[:, -1] = 0.0
        self.zeta[0, :] = 0.0
        self.zeta[-1, :] = 0.0
        return self


def zero_fields(grid: StaggeredGrid) -> FieldSet:
    """Return all-zero fields at time level 0 on ``grid``."""
    return FieldSet(
        grid,
        np.zeros(grid.shape(Station.CENTER)),
        np.zeros(grid.shape(Station.CENTER)),
        np.zeros(grid.shape(Station.X_EDGE)),
        np.zeros(grid.shape(Station.Y_EDGE)),
        0,
    )


def centered_impulses(fields: FieldSet) -> tuple[np.ndarray, np.ndarray]:
    """``xi`` and ``zeta`` averaged onto the cell centers."""
    xi_c = 0.5 * (fields.xi[:, 1:] + fields.xi[:, :-1])
    zeta_c = 0.5 * (fields.zeta[1:, :] + fields.zeta[:-1, :])
    return xi_c, zeta_c


class Snapshot(NamedTuple):
    """Content of a pressure snapshot file."""

    time: float
    J: int
    dx: float
    pressure: np.ndarray


def write_snapshot(path: str | os.PathLike, fields: FieldSet, time: float) -> None:
    """
    Write the total pressure as a plain-text matrix.

    The first line is ``# t=<time> J=<J> dx=<dx>``; each following line holds
    one row ``j`` of whitespace-separated values, ``i`` increasing. Values use
    the shortest decimal that reads back to the same double.
    """
    pressure = fields.pressure
    with open(path, "w", encoding="utf8") as out:
        out.write(f"# t={float(time)!r} J={fields.grid.J} dx={fields.grid.dx!r}\n")
        for row in pressure:
            out.write(" ".join(repr(float(value)) for value in row))
            out.write("\n")


def read_snapshot(path: str | os.PathLike) -> Snapshot:
    """Read a file produced by ``write_snapshot``."""
    with open(path, "r", encoding="utf8") as source:
        header = source.readline()
        rows = [line.split() for line in source if line.strip()]

    if not header.startswith("#"):
        raise MalformedSnapshot(path, "missing header line")
    entries = dict(item.split("=", 1) for item in header[1:].split())
    try:
        time = float(entries["t"])
        J = int(entries["J"])
        dx = float(entries["dx"])
    except (KeyError, ValueError) as error:
        raise MalformedSnapshot(path, f"bad header {header.strip()!r}") from error

    pressure = np.array([[float(value) for value in row] for row in rows])
    if pressure.shape != (J, J):
        raise MalformedSnapshot(path, f"expected {J}x{J} values, got {pressure.shape}")
    return Snapshot(time, J, dx, pressure)


class InvalidGridConfiguration(ValueError):
    """Raised when grid parameters or field shapes are inconsistent."""

    def __init__(self, reason: str):
        super().__init__(f"Invalid grid configuration: {reason}.")


class UnknownStation(ValueError):
    """Raised when an index does not address a station of the grid."""

    def __init__(self, station: Station, i, j):
        location = f"flat index {i}" if j is None else f"index ({i}, {j})"
        super().__init__(f"`{station.name}` has no {location}.")


class MalformedSnapshot(ValueError):
    """Raised when a snapshot file cannot be parsed."""

    def __init__(self, path, reason: str):
        super().__init__(f"`{path}` is not a pressure snapshot: {reason}.")
