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
Plane-wave and symbol analysis of the split absorbing system.

Unknowns are ordered ``W = (p_x, p_y, xi, zeta)`` and the free part of the
system reads ``dW/dt + A dW/dx + B dW/dy = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Callable, NamedTuple, Union

import numpy as np

from ansys.acoustics import _stencils as st
from ansys.acoustics.flow import FlowState
from ansys.acoustics.grid import FieldSet


@dataclass(frozen=True)
class PlaneWaveContext:
    """
    Wavenumbers, frequency and interface absorption of a plane-wave problem.

    ``sigma1`` is the absorption on the incident side of the interface and
    ``sigma2`` on the transmitted side.
    """

    kx: float
    ky: float
    omega: float
    sigma1: float = 0.0
    sigma2: float = 0.0
    c0: float = 1.0

    @classmethod
    def from_angle(
        cls,
        omega: float,
        theta: float,
        c0: float = 1.0,
        sigma1: float = 0.0,
        sigma2: float = 0.0,
    ) -> PlaneWaveContext:
        """
        Propagating wave at incidence ``theta`` from the interface normal.

        ``kx = (omega / c0) sin(theta)`` and ``ky = (omega / c0) cos(theta)``.
        """
        k = omega / c0
        return cls(k * math.sin(theta), k * math.cos(theta), omega, sigma1, sigma2, c0)

    def dispersion_residual(self) -> float:
        """``ky^2 - (omega^2 / c0^2 - kx^2)``, zero for propagating free waves."""
        return self.ky**2 - (self.omega**2 / self.c0**2 - self.kx**2)


class ReflectionResult(NamedTuple):
    R: complex
    T: complex


def reflection_coefficient(
    ctx: PlaneWaveContext, ky_i: float | None = None, ky_t: float | None = None
) -> ReflectionResult:
    """
    Reflection and transmission at an interface between two absorptions.

    Continuity of ``zeta`` gives
    ``(i ky_t / (i omega + sigma2)) (1 + R) = (i ky_i / (i omega + sigma1)) (1 - R)``
    and continuity of pressure ``T = 1 + R``.

    Parameters
    ----------
    ctx: PlaneWaveContext
        Frequency and absorptions.
    ky_i, ky_t: float, optional
        Incident and transmitted normal wavenumbers, ``ctx.ky`` by default.

    Returns
    -------
    ReflectionResult

    Raises
    ------
    DegenerateInterface
        If ``omega`` is zero or the relation cannot be solved for ``R``.
    """
    ky_i = ctx.ky if ky_i is None else ky_i
    ky_t = ctx.ky if ky_t is None else ky_t
    if ctx.omega == 0.0:
        raise DegenerateInterface("omega is zero")
    transmitted = 1j * ky_t / (1j * ctx.omega + ctx.sigma2)
    incident = 1j * ky_i / (1j * ctx.omega + ctx.sigma1)
    if transmitted + incident == 0:
        raise DegenerateInterface("incident and transmitted admittances cancel")
    R = (incident - transmitted) / (transmitted + incident)
    return ReflectionResult(complex(R), complex(1.0 + R))


def reflection_sweep(
    omega: float, sigma1: float, sigma2_values, angles, c0: float = 1.0
) -> list:
    """
    ``(angle, sigma2, R, T)`` rows over every ``(sigma2, angle)`` pair.
    """
    rows = []
    for sigma2 in sigma2_values:
        for angle in angles:
            ctx = PlaneWaveContext.from_angle(omega, angle, c0, sigma1, sigma2)
            result = reflection_coefficient(ctx)
            rows.append((angle, sigma2, result.R, result.T))
    return rows


def _check_wavevector(kx: float, ky: float):
    if kx == 0 and ky == 0:
        raise ZeroWavevector()


def symbol_matrices(c0: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Flux matrices ``A`` and ``B`` of the free split system."""
    A = np.zeros((4, 4))
    A[0, 2] = c0**2
    A[2, 0] = A[2, 1] = 1.0
    B = np.zeros((4, 4))
    B[1, 3] = c0**2
    B[3, 0] = B[3, 1] = 1.0
    return A, B


def principal_symbol(kx: float, ky: float, c0: float = 1.0) -> np.ndarray:
    """
    ``M = i kx A + i ky B``.

    Raises
    ------
    ZeroWavevector
        If ``kx`` and ``ky`` are both zero.
    """
    _check_wavevector(kx, ky)
    A, B = symbol_matrices(c0)
    return 1j * kx * A + 1j * ky * B


def m_squared(kx: float, ky: float, c0: float = 1.0) -> np.ndarray:
    M = principal_symbol(kx, ky, c0)
    return M @ M


def v_m2(kx: float, ky: float) -> np.ndarray:
    """``(0, 0, ky, -kx)``, in the kernel of ``M^2`` but not of ``M``."""
    return np.array([0.0, 0.0, ky, -kx], dtype=complex)


def kernel_action(kx: float, ky: float, c0: float = 1.0) -> np.ndarray:
    """``M v_m2 = i kx ky c0^2 (1, -1, 0, 0)``."""
    return principal_symbol(kx, ky, c0) @ v_m2(kx, ky)


@dataclass
class SymbolDecomposition:
    """
    Closed-form eigenstructure of the principal symbol.

    ``pairs`` lists ``(eigenvalue, unit eigenvector)`` for the three distinct
    eigenvalues; zero is double but carries a single eigenvector.
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    pairs: list
    kernel_m2: list

    def residuals(self) -> list[float]:
        """``max |M v - lambda v|`` for each listed pair."""
        return [
            float(np.max(np.abs(self.matrix @ v - lam * v))) for lam, v in self.pairs
        ]


def symbol_eigen(kx: float, ky: float, c0: float = 1.0) -> SymbolDecomposition:
    """
    Eigenvalues ``{0, 0, +i c0 |k|, -i c0 |k|}`` with their eigenvectors.

    ``+-i c0 |k|`` has eigenvector ``(+-c0 kx^2/|k|, +-c0 ky^2/|k|, kx, ky)``
    and zero has ``(-1, 1, 0, 0)``. The kernel of ``M^2`` is spanned by
    ``(1, -1, 0, 0)`` and ``(0, 0, ky, -kx)``.
    """
    M = principal_symbol(kx, ky, c0)
    norm = math.hypot(kx, ky)
    root = 1j * c0 * norm

    def unit(vector):
        vector = np.asarray(vector, dtype=complex)
        return vector / np.linalg.norm(vector)

    pairs = [
        (0j, unit([-1.0, 1.0, 0.0, 0.0])),
        (root, unit([c0 * kx**2 / norm, c0 * ky**2 / norm, kx, ky])),
        (-root, unit([-c0 * kx**2 / norm, -c0 * ky**2 / norm, kx, ky])),
    ]
    return SymbolDecomposition(
        matrix=M,
        eigenvalues=np.array([0j, 0j, root, -root]),
        pairs=pairs,
        kernel_m2=[np.array([1.0, -1.0, 0.0, 0.0], dtype=complex), v_m2(kx, ky)],
    )


def damped_mode_ode(sigma_star, phi0, t):
    """
    Solution ``phi0 exp(-sigma* t)`` of ``dphi/dt + sigma* phi = 0``.

    Raises
    ------
    NonPositiveAbsorption
        If ``sigma_star`` is negative.
    """
    if np.any(np.asarray(sigma_star) < 0):
        raise NonPositiveAbsorption("sigma_star", sigma_star, strict=False)
    return phi0 * np.exp(-np.asarray(sigma_star) * np.asarray(t))


_TOY_PROFILES = {
    "constant": lambda t: 1.0,
    "decay": lambda t: math.exp(-t),
    "sine": lambda t: math.sin(math.pi * t),
    "zero": lambda t: 0.0,
}


class ToySeries(NamedTuple):
    times: np.ndarray
    u: np.ndarray
    v: np.ndarray


def toy_1d_model(
    sigma1: float,
    sigma2: float,
    psi: Union[str, Callable[[float], float]],
    t_end: float,
    dt: float,
) -> ToySeries:
    """
    Amplitudes of the one-dimensional non-hyperbolic model.

    ``v`` multiplies the Dirac mass and ``u`` its derivative::

        dv/dt + sigma2 v = psi(t)
        du/dt + sigma1 u = -v

    integrated with the trapezoidal rule, solved in closed form at each step.

    Parameters
    ----------
    sigma1, sigma2: float
        Strictly positive absorptions.
    psi: str or Callable
        ``"constant"``, ``"decay"``, ``"sine"``, ``"zero"`` or a function of time.
    t_end: float
        Final time.
    dt: float
        Step, at most ``0.1 / max(sigma1, sigma2)``.

    Returns
    -------
    ToySeries
    """
    if not sigma1 > 0:
        raise NonPositiveAbsorption("sigma1", sigma1)
    if not sigma2 > 0:
        raise NonPositiveAbsorption("sigma2", sigma2)
    limit = 0.1 / max(sigma1, sigma2)
    if not 0 < dt <= limit:
        raise UnresolvedRate(dt, limit)
    forcing = _TOY_PROFILES[psi] if isinstance(psi, str) else psi

    steps = int(round(t_end / dt))
    times = np.arange(steps + 1) * dt
    psi_values = np.array([forcing(t) for t in times], dtype=float)
    u = np.zeros(steps + 1)
    v = np.zeros(steps + 1)
    a1, a2 = sigma1 * dt, sigma2 * dt
    for n in range(steps):
        forcing_sum = psi_values[n] + psi_values[n + 1]
        v[n + 1] = ((2.0 - a2) * v[n] + dt * forcing_sum) / (2.0 + a2)
        u[n + 1] = ((2.0 - a1) * u[n] - dt * (v[n] + v[n + 1])) / (2.0 + a1)
    return ToySeries(times, u, v)


def toy_steady_state(
    sigma1: float, sigma2: float, psi: float = 1.0
) -> tuple[float, float]:
    """Limits of ``(u, v)`` for constant ``psi``: ``(-psi / (s1 s2), psi / s2)``."""
    return -psi / (sigma1 * sigma2), psi / sigma2


def half_space_decay(sigma: float, depth: float, ky: float, omega: float) -> float:
    """Attenuation ``exp(-(ky / omega) sigma depth)`` across a constant layer."""
    if omega == 0.0:
        raise DegenerateInterface("omega is zero")
    return math.exp(-(ky / omega) * sigma * depth)


def vorticity(fields: FieldSet, flow: FlowState) -> np.ndarray:
    """
    Discrete curl ``du/dy - dv/dx`` of the acoustic velocity at cell corners.

    Velocities are recovered as ``u = (xi - rho u0) / rho0`` with
    ``rho = p / c0^2``. Corners on the outer boundary are left at zero.
    """
    grid = fields.grid
    pressure = fields.pressure
    c2 = flow.c0**2
    rho_xe = st.centers_to_x_edges(pressure) / c2
    rho_ye = st.centers_to_y_edges(pressure) / c2
    u = (fields.xi - rho_xe * flow.u0) / flow.rho0
    v = (fields.zeta - rho_ye * flow.v0) / flow.rho0
    return (
        st.x_edges_y_difference_to_corners(u) / grid.dy
        - st.y_edges_x_difference_to_corners(v) / grid.dx
    )


class ZeroWavevector(ValueError):
    """Raised when the symbol is requested at ``k = 0``."""

    def __init__(self):
        super().__init__("The principal symbol needs a nonzero wavevector.")


class NonPositiveAbsorption(ValueError):
    """Raised when an absorption coefficient violates its sign requirement."""

    def __init__(self, name: str, value, strict: bool = True):
        bound = "strictly positive" if strict else "non-negative"
        super().__init__(f"`{name}`={value!r} must be {bound}.")


class DegenerateInterface(ValueError):
    """Raised when the interface relation has no unique solution."""

    def __init__(self, reason: str):
        super().__init__(f"Degenerate interface: {reason}.")


class UnresolvedRate(ValueError):
    """Raised when a time step does not resolve the damping rates."""

    def __init__(self, dt: float, limit: float):
        super().__init__(f"Time step {dt!r} must be positive and at most {limit!r}.")
