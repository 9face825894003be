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

#
# index-by-index versions of the array kernels, kept deliberately naive
#


def loop_step_free(p_x, p_y, xi, zeta, ratio):
    J = p_x.shape[0]
    p_x = p_x.copy()
    p_y = p_y.copy()
    xi = xi.copy()
    zeta = zeta.copy()
    for j in range(J):
        for i in range(J):
            p_x[j, i] = p_x[j, i] - ratio * (xi[j, i + 1] - xi[j, i])
            p_y[j, i] = p_y[j, i] - ratio * (zeta[j + 1, i] - zeta[j, i])
    p = p_x + p_y
    for j in range(J):
        for i in range(1, J):
            xi[j, i] = xi[j, i] - ratio * (p[j, i] - p[j, i - 1])
    for j in range(1, J):
        for i in range(J):
            zeta[j, i] = zeta[j, i] - ratio * (p[j, i] - p[j - 1, i])
    xi[:, 0] = xi[:, -1] = 0.0
    zeta[0, :] = zeta[-1, :] = 0.0
    return p_x, p_y, xi, zeta


def loop_step_pml(p_x, p_y, xi, zeta, profile, dt, ratio):
    J = p_x.shape[0]
    p_x = p_x.copy()
    p_y = p_y.copy()
    xi = xi.copy()
    zeta = zeta.copy()
    for j in range(J):
        for i in range(J):
            sx = profile.sigma_x_at_centers[i] * dt
            sy = profile.sigma_y_at_centers[j] * dt
            p_x[j, i] = (
                (2.0 - sx) * p_x[j, i] - 2.0 * ratio * (xi[j, i + 1] - xi[j, i])
            ) / (2.0 + sx)
            p_y[j, i] = (
                (2.0 - sy) * p_y[j, i] - 2.0 * ratio * (zeta[j + 1, i] - zeta[j, i])
            ) / (2.0 + sy)
    p = p_x + p_y
    for j in range(J):
        for i in range(1, J):
            s = profile.sigma_x_at_edges[i] * dt
            xi[j, i] = (
                (2.0 - s) * xi[j, i] - 2.0 * ratio * (p[j, i] - p[j, i - 1])
            ) / (2.0 + s)
    for j in range(1, J):
        for i in range(J):
            s = profile.sigma_y_at_edges[j] * dt
            zeta[j, i] = (
                (2.0 - s) * zeta[j, i] - 2.0 * ratio * (p[j, i] - p[j - 1, i])
            ) / (2.0 + s)
    xi[:, 0] = xi[:, -1] = 0.0
    zeta[0, :] = zeta[-1, :] = 0.0
    return p_x, p_y, xi, zeta


def loop_step_advective_pml(p_x, p_y, xi, zeta, profile, dt, ratio, flow, sweeps=3):
    J = p_x.shape[0]
    extra = dt / ratio
    mx = flow.u0 / flow.c0
    my = flow.v0 / flow.c0
    gap = 1.0 - flow.mach() ** 2
    shrink = math.sqrt(gap)
    sxc = profile.sigma_x_at_centers
    sxe = profile.sigma_x_at_edges
    syc = profile.sigma_y_at_centers
    sye = profile.sigma_y_at_edges

    def damping(rate):
        s = rate * dt
        return (2.0 - s) / (2.0 + s), 2.0 * ratio / (2.0 + s)

    new_px = np.zeros_like(p_x)
    new_py = np.zeros_like(p_y)
    for j in range(J):
        for i in range(J):
            decay, gain = damping(shrink * sxc[i])
            xi_c = 0.5 * (xi[j, i + 1] + xi[j, i])
            new_px[j, i] = decay * p_x[j, i] - gain * (
                (xi[j, i + 1] - xi[j, i]) + extra * (mx / shrink * sxc[i] * xi_c)
            )
            decay, gain = damping(shrink * syc[j])
            zeta_c = 0.5 * (zeta[j + 1, i] + zeta[j, i])
            new_py[j, i] = decay * p_y[j, i] - gain * (
                (zeta[j + 1, i] - zeta[j, i]) + extra * (my / shrink * syc[j] * zeta_c)
            )
    p = new_px + new_py

    def xi_center(values, j, i):
        return 0.5 * (values[j, i + 1] + values[j, i])

    def zeta_center(values, j, i):
        return 0.5 * (values[j + 1, i] + values[j, i])

    xi_new = xi.copy()
    zeta_new = zeta.copy()
    for _ in range(sweeps):
        xi_mid = 0.5 * (xi + xi_new)
        zeta_mid = 0.5 * (zeta + zeta_new)
        xi_next = np.zeros_like(xi)
        zeta_next = np.zeros_like(zeta)
        for j in range(J):
            for i in range(1, J):
                decay, gain = damping((1.0 + (mx**2 - my**2)) / shrink * sxe[i])
                normal = (
                    2.0 * mx * xi_center(xi_mid, j, i)
                    + my * zeta_center(zeta_mid, j, i)
                ) - (
                    2.0 * mx * xi_center(xi_mid, j, i - 1)
                    + my * zeta_center(zeta_mid, j, i - 1)
                )
                shear = mx * 0.5 * (zeta_mid[j + 1, i - 1] + zeta_mid[j + 1, i]) - (
                    mx * 0.5 * (zeta_mid[j, i - 1] + zeta_mid[j, i])
                )
                coupling = extra * (
                    mx
                    * shrink
                    * (
                        sxe[i] * 0.5 * (new_px[j, i] + new_px[j, i - 1])
                        + syc[j] * 0.5 * (new_py[j, i] + new_py[j, i - 1])
                    )
                )
                around = 0.25 * (
                    zeta_mid[j, i - 1]
                    + zeta_mid[j, i]
                    + zeta_mid[j + 1, i - 1]
                    + zeta_mid[j + 1, i]
                )
                cross = extra * (mx * my * (sxe[i] + syc[j]) / shrink) * around
                xi_next[j, i] = decay * xi[j, i] - gain * (
                    gap * (p[j, i] - p[j, i - 1]) + normal + shear + coupling + cross
                )
        for j in range(1, J):
            for i in range(J):
                decay, gain = damping((1.0 + (my**2 - mx**2)) / shrink * sye[j])
                normal = (
                    mx * xi_center(xi_mid, j, i)
                    + 2.0 * my * zeta_center(zeta_mid, j, i)
                ) - (
                    mx * xi_center(xi_mid, j - 1, i)
                    + 2.0 * my * zeta_center(zeta_mid, j - 1, i)
                )
                shear = my * 0.5 * (xi_mid[j - 1, i + 1] + xi_mid[j, i + 1]) - (
                    my * 0.5 * (xi_mid[j - 1, i] + xi_mid[j, i])
                )
                coupling = extra * (
                    my
                    * shrink
                    * (
                        sxc[i] * 0.5 * (new_px[j, i] + new_px[j - 1, i])
                        + sye[j] * 0.5 * (new_py[j, i] + new_py[j - 1, i])
                    )
                )
                around = 0.25 * (
                    xi_mid[j - 1, i]
                    + xi_mid[j - 1, i + 1]
                    + xi_mid[j, i]
                    + xi_mid[j, i + 1]
                )
                cross = extra * (mx * my * (sxc[i] + sye[j]) / shrink) * around
                zeta_next[j, i] = decay * zeta[j, i] - gain * (
                    gap * (p[j, i] - p[j - 1, i]) + shear + normal + coupling + cross
                )
        xi_new, zeta_new = xi_next, zeta_next
    return new_px, new_py, xi_new, zeta_new


def loop_vorticity(xi, zeta, dx):
    """Curl of impulses at a fluid at rest, interior corners only."""
    J = xi.shape[0]
    out = np.zeros((J + 1, J + 1))
    for j in range(1, J):
        for i in range(1, J):
            out[j, i] = (xi[j, i] - xi[j - 1, i]) / dx - (
                zeta[j, i] - zeta[j, i - 1]
            ) / dx
    return out


def loop_reflection(omega, sigma1, sigma2, ky_i, ky_t):
    """Solve the interface relations for ``(R, T)`` as a 2x2 complex system."""
    incident = 1j * ky_i / (1j * omega + sigma1)
    transmitted = 1j * ky_t / (1j * omega + sigma2)
    # T - R = 1 ; transmitted T + incident R = incident
    matrix = np.array([[-1.0, 1.0], [incident, transmitted]], dtype=complex)
    rhs = np.array([1.0, incident], dtype=complex)
    R, T = np.linalg.solve(matrix, rhs)
    return R, T
