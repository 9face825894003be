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

from ansys.acoustics.grid import FieldSet, new_grid
from ansys.acoustics.probes import CSV_HEADER, ProbeMode, ProbeSampler, ProbeSeries
from ansys.acoustics.stations import Station


def _linear_fields(grid):
    def linear(station, a, b, c):
        X, Y = grid.mesh(station)
        return a + b * X + c * Y

    return FieldSet(
        grid,
        linear(Station.CENTER, 1.0, 2.0, -1.0),
        np.zeros(grid.shape(Station.CENTER)),
        linear(Station.X_EDGE, 0.5, -3.0, 0.25),
        linear(Station.Y_EDGE, -2.0, 1.0, 4.0),
    )


def test_bilinear_reads_are_exact_on_linear_fields():
    grid = new_grid(10, 5.0, origin=(-2.5, -2.5))
    fields = _linear_fields(grid)
    x, y = 0.37, -1.13
    p, xi, zeta = ProbeSampler(grid, (x, y)).sample(fields)
    assert p == pytest.approx(1.0 + 2.0 * x - y)
    assert xi == pytest.approx(0.5 - 3.0 * x + 0.25 * y)
    assert zeta == pytest.approx(-2.0 + x + 4.0 * y)


def test_nearest_mode_reads_one_station():
    grid = new_grid(10, 10.0)
    fields = _linear_fields(grid)
    sampler = ProbeSampler(grid, (3.4, 6.7), "nearest")
    assert sampler.mode is ProbeMode.NEAREST
    p, xi, zeta = sampler.sample(fields)
    assert p == pytest.approx(1.0 + 2.0 * 3.5 - 6.5)
    assert xi == pytest.approx(0.5 - 3.0 * 3.0 + 0.25 * 6.5)
    assert zeta == pytest.approx(-2.0 + 3.5 + 4.0 * 7.0)


def test_probe_on_a_station_reads_it():
    grid = new_grid(8, 8.0)
    values = np.arange(64, dtype=float).reshape(8, 8)
    sampler = ProbeSampler(grid, (2.5, 5.5))
    assert sampler.read(values, Station.CENTER) == values[5, 2]


def test_probe_outside_the_stations_is_clipped(caplog):
    grid = new_grid(8, 8.0)
    with caplog.at_level(logging.WARNING, logger="ansys.acoustics.probes"):
        sampler = ProbeSampler(grid, (0.1, 4.0))
    assert "clipped" in caplog.text
    values = np.tile(np.arange(8, dtype=float), (8, 1))
    assert sampler.read(values, Station.CENTER) == 0.0


def test_unknown_mode():
    with pytest.raises(ValueError):
        ProbeSampler(new_grid(8, 8.0), (4.0, 4.0), "cubic")


def test_series_record_times():
    series = ProbeSeries((1.0, 2.0))
    for step in range(3):
        series.record(step, 0.5, (step, -step, 2.0 * step))
    assert len(series) == 3
    assert series.times == [0.0, 0.5, 1.0]
    assert series.impulse_times == [0.25, 0.75, 1.25]
    np.testing.assert_array_equal(series.array("zeta"), [0.0, 2.0, 4.0])
    doubled = series.scaled(2.0)
    assert doubled.p == [0, 2, 4]
    assert doubled.times == series.times


def test_series_csv(tmp_path):
    series = ProbeSeries((0.0, 0.0))
    series.record(0, 0.1, (1.0 / 3.0, 0.0, -1e-300))
    series.record(1, 0.1, (math.pi, 2.5, 7.0))
    path = tmp_path / "probe_0.csv"
    series.to_csv(path)
    assert path.read_text().splitlines()[0] == ",".join(CSV_HEADER)
    loaded = ProbeSeries.from_csv(path, (0.0, 0.0))
    assert loaded == series


def test_series_csv_without_impulse_time(tmp_path):
    path = tmp_path / "probe.csv"
    path.write_text("step,time,p,xi,zeta\n0,0.0,1.0,2.0,3.0\n")
    loaded = ProbeSeries.from_csv(path)
    assert loaded.p == [1.0]
    assert math.isnan(loaded.impulse_times[0])
    assert math.isnan(loaded.location[0])
