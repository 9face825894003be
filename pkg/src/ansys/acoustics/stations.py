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
"""Provides the ``Station`` class."""

from enum import Enum


class Station(Enum):
    """
    Supplies the staggered locations on which unknowns are stored.

    The value of each member is its half-index offset ``(offset_x, offset_y)``
    inside the cell ``]i dx, (i+1) dx[ x ]j dy, (j+1) dy[``.

    Attributes
    ----------
    CENTER
        Cell centers ``(i+1/2, j+1/2)``, carrying ``p``, ``p_x`` and ``p_y``.
    X_EDGE
        Vertical edges ``(i, j+1/2)``, carrying the impulse ``xi``.
    Y_EDGE
        Horizontal edges ``(i+1/2, j)``, carrying the impulse ``zeta``.
    CORNER
        Cell corners ``(i, j)``, carrying the vorticity diagnostic.
    """

    CENTER = (0.5, 0.5)
    X_EDGE = (0.0, 0.5)
    Y_EDGE = (0.5, 0.0)
    CORNER = (0.0, 0.0)

    @property
    def offset_x(self) -> float:
        """Half-index offset of the station along ``x``."""
        return self.value[0]

    @property
    def offset_y(self) -> float:
        """Half-index offset of the station along ``y``."""
        return self.value[1]

    def count_x(self, cells: int) -> int:
        """Number of stations along ``x`` for ``cells`` cells."""
        return cells + 1 if self.offset_x == 0.0 else cells

    def count_y(self, cells: int) -> int:
        """Number of stations along ``y`` for ``cells`` cells."""
        return cells + 1 if self.offset_y == 0.0 else cells

    def shape(self, cells: int) -> tuple[int, int]:
        """
        Array shape of a field living on this station.

        Arrays are row-major with ``x`` fastest, so the shape is ``(ny, nx)``.

        Parameters
        ----------
        cells: int
            Number of cells per direction.

        Returns
        -------
        tuple[int, int]
        """
        return self.count_y(cells), self.count_x(cells)
