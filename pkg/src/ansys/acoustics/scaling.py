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
Provides the ``ReferenceScales`` class.

The canned experiments work in scaled units in which the sound speed is one::

    dp/dt + dxi/dx + dzeta/dy = 0
    dxi/dt + dp/dx = 0
    dzeta/dt + dp/dy = 0

with ``x* = y*`` the reference length, ``t* = x* / c0`` and
``xi* = zeta* = p* / c0``.
"""

from dataclasses import dataclass
from enum import Enum
import math

from ansys.acoustics.flow import FlowState


class ScaledQuantity(Enum):
    """Kinds of quantities that ``ReferenceScales`` converts."""

    LENGTH = "length"
    TIME = "time"
    PRESSURE = "pressure"
    IMPULSE = "impulse"
    VELOCITY = "velocity"
    RATE = "rate"


@dataclass(frozen=True)
class ReferenceScales:
    """
    Reference sound speed, length and pressure.

    Parameters
    ----------
    c0: float
        Reference sound speed.
    length: float
        Reference length, shared by both directions.
    pressure: float
        Reference pressure.

    Examples
    --------
    >>> from ansys.acoustics.scaling import ReferenceScales, ScaledQuantity
    >>> scales = ReferenceScales(c0=340.0, length=2.0, pressure=1.0)
    >>> scales.to_scaled(170.0, ScaledQuantity.VELOCITY)
    0.5
    """

    c0: float = 1.0
    length: float = 1.0
    pressure: float = 1.0

    def __post_init__(self):
        for name in ("c0", "length", "pressure"):
            value = getattr(self, name)
            if not (
                isinstance(value, (int, float)) and math.isfinite(value) and value > 0
            ):
                raise InvalidReferenceScale(name, value)

    @property
    def time(self) -> float:
        """Reference time ``length / c0``."""
        return self.length / self.c0

    @property
    def impulse(self) -> float:
        """Reference impulse ``pressure / c0``."""
        return self.pressure / self.c0

    def scale(self, kind: ScaledQuantity) -> float:
        """Reference value used for ``kind``."""
        kind = ScaledQuantity(kind)
        return {
            ScaledQuantity.LENGTH: self.length,
            ScaledQuantity.TIME: self.time,
            ScaledQuantity.PRESSURE: self.pressure,
            ScaledQuantity.IMPULSE: self.impulse,
            ScaledQuantity.VELOCITY: self.c0,
            ScaledQuantity.RATE: 1.0 / self.time,
        }[kind]

    def to_scaled(self, value, kind: ScaledQuantity):
        """Divide a physical ``value`` by its reference scale."""
        return value / self.scale(kind)

    def to_physical(self, value, kind: ScaledQuantity):
        """Multiply a scaled ``value`` by its reference scale."""
        return value * self.scale(kind)

    @classmethod
    def from_flow(cls, flow: FlowState, length: float = 1.0, pressure: float = 1.0):
        """Scales whose velocity reference is the sound speed of ``flow``."""
        return cls(c0=flow.c0, length=length, pressure=pressure)


def scaled_flow(flow: FlowState, scales: ReferenceScales) -> FlowState:
    """
    Express ``flow`` in scaled units.

    Velocities become Mach components, ``c0`` and ``rho0`` become one.

    Raises
    ------
    InvalidReferenceScale
        If the reference speed differs from the sound speed of ``flow``.
    """
    if not math.isclose(flow.c0, scales.c0, rel_tol=1e-12):
        raise InvalidReferenceScale("c0", scales.c0, f"flow sound speed is {flow.c0}")
    return FlowState(
        u0=scales.to_scaled(flow.u0, ScaledQuantity.VELOCITY),
        v0=scales.to_scaled(flow.v0, ScaledQuantity.VELOCITY),
        w0=scales.to_scaled(flow.w0, ScaledQuantity.VELOCITY),
        c0=1.0,
        rho0=1.0,
    )


class InvalidReferenceScale(ValueError):
    """Raised when a reference scale is not a positive finite number."""

    def __init__(self, name: str, value, reason: str = "must be positive and finite"):
        super().__init__(f"Reference scale `{name}`={value!r} {reason}.")
