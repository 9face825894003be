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

import pytest

from ansys.acoustics.stations import Station


@pytest.mark.parametrize(
    "station, shape",
    [
        (Station.CENTER, (10, 10)),
        (Station.X_EDGE, (10, 11)),
        (Station.Y_EDGE, (11, 10)),
        (Station.CORNER, (11, 11)),
    ],
)
def test_shapes(station, shape):
    assert station.shape(10) == shape


def test_offsets():
    assert (Station.CENTER.offset_x, Station.CENTER.offset_y) == (0.5, 0.5)
    assert (Station.X_EDGE.offset_x, Station.X_EDGE.offset_y) == (0.0, 0.5)
    assert (Station.Y_EDGE.offset_x, Station.Y_EDGE.offset_y) == (0.5, 0.0)
    assert Station.CORNER.value == (0.0, 0.0)


def test_counts():
    assert Station.X_EDGE.count_x(4) == 5
    assert Station.X_EDGE.count_y(4) == 4
    assert Station.Y_EDGE.count_y(4) == 5
