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
"""Provides the ``ProbeSeries`` and ``ProbeSampler`` classes."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from enum import Enum
import logging
import math
import os

import numpy as np

from ansys.acoustics.grid import FieldSet, StaggeredGrid
from ansys.acoustics.stations import Station

logger = logging.getLogger(__name__)

CSV_HEADER = ["step", "time", "p", "xi", "zeta", "impulse_time"]


class ProbeMode(Enum):
    """How a probe reads a staggered field."""

    INTERPOLATE = "interpolate"
    NEAREST = "nearest"


class ProbeSampler:
    """
    Reads ``p``, ``xi`` and ``zeta`` at one physical point.

    Each field is read on its own stations, either by bilinear interpolation
    between the four surrounding stations or from the nearest one. Points
    outside the station hull of a field are clipped to it.

    Parameters
    ----------
    grid: StaggeredGrid
        Grid of the sampled fields.
    location: tuple[float, float]
        Physical probe position.
    mode: ProbeMode or str, optional
        ``"interpolate"`` (default) or ``"nearest"``.
    """

    def __init__(self, grid: StaggeredGrid, location, mode=ProbeMode.INTERPOLATE):
        self.grid = grid
        self.location = (float(location[0]), float(location[1]))
        self.mode = ProbeMode(mode)
        self._stencils = {
            station: self._weights(station)
            for station in (Station.CENTER, Station.X_EDGE, Station.Y_EDGE)
        }

    def _weights(self, station: Station) -> list[tuple[int, int, float]]:
        x, y = self.location
        if self.mode is ProbeMode.NEAREST:
            i, j = self.grid.nearest_index(station, x, y)
            return [(j, i, 1.0)]

        ny, nx = self.grid.shape(station)
        x0, y0 = self.grid.origin
        fx = (x - x0) / self.grid.dx - station.offset_x
        fy = (y - y0) / self.grid.dy - station.offset_y
        i0 = min(max(math.floor(fx), 0), nx - 2)
        j0 = min(max(math.floor(fy), 0), ny - 2)
        wx = fx - i0
        wy = fy - j0
        if not (0.0 <= wx <= 1.0 and 0.0 <= wy <= 1.0):
            logger.warning(
                "Probe at (%g, %g) is outside the %s stations and is clipped",
                x,
                y,
                station.name,
            )
            wx = min(max(wx, 0.0), 1.0)
            wy = min(max(wy, 0.0), 1.0)
        return [
            (j0, i0, (1.0 - wx) * (1.0 - wy)),
            (j0, i0 + 1, wx * (1.0 - wy)),
            (j0 + 1, i0, (1.0 - wx) * wy),
            (j0 + 1, i0 + 1, wx * wy),
        ]

    def read(self, values: np.ndarray, station: Station) -> float:
        """Sample one array stored on ``station``."""
        stencil = self._stencils[station]
        return float(sum(w * values[j, i] for j, i, w in stencil if w != 0.0))

    def sample(self, fields: FieldSet) -> tuple[float, float, float]:
        """``(p, xi, zeta)`` at the probe."""
        return (
            self.read(fields.pressure, Station.CENTER),
            self.read(fields.xi, Station.X_EDGE),
            self.read(fields.zeta, Station.Y_EDGE),
        )


@dataclass
class ProbeSeries:
    """
    Time series of the unknowns at one observation point.

    Pressure samples belong to ``times`` (entire steps ``n dt``); impulse
    samples belong to ``impulse_times`` (semi-entire steps ``(n + 1/2) dt``).
    """

    location: tuple[float, float]
    steps: list = field(default_factory=list)
    times: list = field(default_factory=list)
    p: list = field(default_factory=list)
    xi: list = field(default_factory=list)
    zeta: list = field(default_factory=list)
    impulse_times: list = field(default_factory=list)

    def record(self, step: int, dt: float, values: tuple[float, float, float]) -> None:
        self.steps.append(int(step))
        self.times.append(step * dt)
        self.impulse_times.append((step + 0.5) * dt)
        p, xi, zeta = values
        self.p.append(p)
        self.xi.append(xi)
        self.zeta.append(zeta)

    def __len__(self):
        return len(self.steps)

    def array(self, name: str) -> np.ndarray:
        """One column as a ``numpy`` array."""
        return np.asarray(getattr(self, name), dtype=np.float64)

    def scaled(self, factor: float) -> ProbeSeries:
        return ProbeSeries(
            self.location,
            list(self.steps),
            list(self.times),
            [factor * v for v in self.p],
            [factor * v for v in self.xi],
            [factor * v for v in self.zeta],
            list(self.impulse_times),
        )

    def to_csv(self, path: str | os.PathLike) -> None:
        """Write ``step,time,p,xi,zeta,impulse_time`` rows."""
        with open(path, "w", newline="", encoding="utf8") as out:
            writer = csv.writer(out)
            writer.writerow(CSV_HEADER)
            columns = (self.times, self.p, self.xi, self.zeta, self.impulse_times)
            for step, *values in zip(self.steps, *columns):
                writer.writerow([step] + [repr(float(v)) for v in values])

    @classmethod
    def from_csv(
        cls, path: str | os.PathLike, location=(math.nan, math.nan)
    ) -> ProbeSeries:
        """Read a file written by ``to_csv``; ``impulse_time`` is optional."""
        series = cls(tuple(location))
        with open(path, "r", newline="", encoding="utf8") as source:
            for row in csv.DictReader(source):
                series.steps.append(int(row["step"]))
                series.times.append(float(row["time"]))
                series.p.append(float(row["p"]))
                series.xi.append(float(row["xi"]))
                series.zeta.append(float(row["zeta"]))
                impulse_time = row.get("impulse_time")
                series.impulse_times.append(
                    float(impulse_time) if impulse_time not in (None, "") else math.nan
                )
        return series
