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
Difference and averaging kernels between staggered stations.

Every kernel works on whole arrays shaped as ``Station.shape`` describes and
returns a new array. Differences are undivided, ``a[i+1] - a[i]``; callers
scale by ``dt/dx`` or ``1/dx``. Entries that would need a value from outside
the domain are left at zero: these are exactly the Dirichlet boundary edges
and corners, which the schemes never update.
"""

import numpy as np


def x_difference_to_centers(xi: np.ndarray) -> np.ndarray:
    """``xi[i+1] - xi[i]`` at cell centers."""
    return xi[:, 1:] - xi[:, :-1]


def y_difference_to_centers(zeta: np.ndarray) -> np.ndarray:
    """``zeta[j+1] - zeta[j]`` at cell centers."""
    return zeta[1:, :] - zeta[:-1, :]


def x_difference_to_edges(center: np.ndarray) -> np.ndarray:
    """``c[i+1/2] - c[i-1/2]`` at x-edges, zero on the two boundary columns."""
    ny, nx = center.shape
    out = np.zeros((ny, nx + 1))
    out[:, 1:-1] = center[:, 1:] - center[:, :-1]
    return out


def y_difference_to_edges(center: np.ndarray) -> np.ndarray:
    """``c[j+1/2] - c[j-1/2]`` at y-edges, zero on the two boundary rows."""
    ny, nx = center.shape
    out = np.zeros((ny + 1, nx))
    out[1:-1, :] = center[1:, :] - center[:-1, :]
    return out


def x_edges_to_centers(xi: np.ndarray) -> np.ndarray:
    return 0.5 * (xi[:, 1:] + xi[:, :-1])


def y_edges_to_centers(zeta: np.ndarray) -> np.ndarray:
    return 0.5 * (zeta[1:, :] + zeta[:-1, :])


def centers_to_x_edges(center: np.ndarray) -> np.ndarray:
    """Two-point mean of cell values onto interior x-edges."""
    ny, nx = center.shape
    out = np.zeros((ny, nx + 1))
    out[:, 1:-1] = 0.5 * (center[:, 1:] + center[:, :-1])
    return out


def centers_to_y_edges(center: np.ndarray) -> np.ndarray:
    """Two-point mean of cell values onto interior y-edges."""
    ny, nx = center.shape
    out = np.zeros((ny + 1, nx))
    out[1:-1, :] = 0.5 * (center[1:, :] + center[:-1, :])
    return out


def y_edges_to_x_edges(zeta: np.ndarray) -> np.ndarray:
    """Four-neighbor mean of ``zeta`` at the interior ``xi`` stations."""
    ny1, nx = zeta.shape
    out = np.zeros((ny1 - 1, nx + 1))
    out[:, 1:-1] = 0.25 * (
        zeta[:-1, :-1] + zeta[:-1, 1:] + zeta[1:, :-1] + zeta[1:, 1:]
    )
    return out


def x_edges_to_y_edges(xi: np.ndarray) -> np.ndarray:
    """Four-neighbor mean of ``xi`` at the interior ``zeta`` stations."""
    ny, nx1 = xi.shape
    out = np.zeros((ny + 1, nx1 - 1))
    out[1:-1, :] = 0.25 * (xi[:-1, :-1] + xi[:-1, 1:] + xi[1:, :-1] + xi[1:, 1:])
    return out


def y_edges_to_corners(zeta: np.ndarray) -> np.ndarray:
    """Mean of the two ``zeta`` values left and right of each interior corner column."""
    ny1, nx = zeta.shape
    out = np.zeros((ny1, nx + 1))
    out[:, 1:-1] = 0.5 * (zeta[:, :-1] + zeta[:, 1:])
    return out


def x_edges_to_corners(xi: np.ndarray) -> np.ndarray:
    """Mean of the two ``xi`` values below and above each interior corner row."""
    ny, nx1 = xi.shape
    out = np.zeros((ny + 1, nx1))
    out[1:-1, :] = 0.5 * (xi[:-1, :] + xi[1:, :])
    return out


def corners_y_difference_to_x_edges(corner: np.ndarray) -> np.ndarray:
    """``c[j+1] - c[j]`` from corners onto x-edges."""
    return corner[1:, :] - corner[:-1, :]


def corners_x_difference_to_y_edges(corner: np.ndarray) -> np.ndarray:
    """``c[i+1] - c[i]`` from corners onto y-edges."""
    return corner[:, 1:] - corner[:, :-1]


def x_edges_y_difference_to_corners(values: np.ndarray) -> np.ndarray:
    """``v[j+1/2] - v[j-1/2]`` of an x-edge field at interior corners."""
    ny, nx1 = values.shape
    out = np.zeros((ny + 1, nx1))
    out[1:-1, 1:-1] = values[1:, 1:-1] - values[:-1, 1:-1]
    return out


def y_edges_x_difference_to_corners(values: np.ndarray) -> np.ndarray:
    """``v[i+1/2] - v[i-1/2]`` of a y-edge field at interior corners."""
    ny1, nx = values.shape
    out = np.zeros((ny1, nx + 1))
    out[1:-1, 1:-1] = values[1:-1, 1:] - values[1:-1, :-1]
    return out
