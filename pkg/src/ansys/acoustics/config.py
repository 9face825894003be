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
"""Provides the ``SimulationConfig`` class."""

from __future__ import annotations

import copy
import logging
import os
from typing import Optional

import yaml

from ansys.acoustics._constants import _defaults
from ansys.acoustics.flow import FlowState
from ansys.acoustics.grid import StaggeredGrid
from ansys.acoustics.pml import (
    SigmaProfile,
    constant_profile,
    default_sigma_max,
    polynomial_profile,
)
from ansys.acoustics.probes import ProbeMode
from ansys.acoustics.solver import (
    SchemeParams,
    Source,
    SourceKind,
    SourceTarget,
    Waveform,
)

logger = logging.getLogger(__name__)

_CHOICES = {
    "pml.profile": ("quadratic", "polynomial", "constant"),
    "scheme.stepper": ("free", "pml", "advective"),
    "source.kind": tuple(kind.value for kind in SourceKind),
    "source.waveform": tuple(waveform.value for waveform in Waveform),
    "source.target": tuple(target.value for target in SourceTarget),
    "probe.mode": tuple(mode.value for mode in ProbeMode),
}

_PAIRS = ("grid.origin", "source.center")


def _flatten(values: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in values.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        else:
            flat[name] = value
    return flat


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _pair(key: str, value) -> tuple[float, float]:
    if isinstance(value, str):
        value = value.split(",")
    try:
        x, y = value
        return float(x), float(y)
    except (TypeError, ValueError):
        raise InvalidConfigValue(key, value, "an `[x, y]` pair or an `x,y` string")


class SimulationConfig:
    """
    Validated simulation settings.

    Settings are addressed by flat dotted keys such as ``grid.J``. A user
    mapping may be nested or flat; every key it omits falls back to the
    package defaults in ``cfg.yaml``.

    Parameters
    ----------
    values: dict, optional
        User settings.

    Examples
    --------
    >>> from ansys.acoustics import SimulationConfig
    >>> config = SimulationConfig({"grid": {"J": 50}, "scheme.steps": 10})
    >>> config["grid.J"], config["scheme.steps"]
    (50, 10)
    """

    def __init__(self, values: Optional[dict] = None):
        self._values = _flatten(copy.deepcopy(_defaults))
        for key, value in _flatten(values or {}).items():
            if key not in self._values:
                raise UnknownConfigKey(key)
            self._values[key] = self._coerce(key, value)
        self._validate()

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> SimulationConfig:
        """Read a ``YAML`` mapping; an empty file selects every default."""
        with open(path, "r", encoding="utf8") as config_yaml:
            values = yaml.safe_load(config_yaml)
        if values is None:
            values = {}
        if not isinstance(values, dict):
            raise InvalidConfigValue(str(path), values, "a mapping of settings")
        logger.debug("Read %d settings from %s", len(values), path)
        return cls(values)

    def _coerce(self, key: str, value):
        default = self._values[key]
        if key in _PAIRS:
            return _pair(key, value)
        if key == "probes":
            if not isinstance(value, (list, tuple)):
                raise InvalidConfigValue(key, value, "a list of probe positions")
            return [_pair(key, probe) for probe in value]
        if key in _CHOICES:
            if value not in _CHOICES[key]:
                choices = ", ".join(_CHOICES[key])
                raise InvalidConfigValue(key, value, f"one of {choices}")
            return value
        if isinstance(default, bool):
            if not isinstance(value, bool):
                raise InvalidConfigValue(key, value, "true or false")
            return value
        if isinstance(default, int):
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidConfigValue(key, value, "an integer")
            return value
        if isinstance(default, float) or default is None:
            if value is None and default is None:
                return None
            if not _is_number(value):
                raise InvalidConfigValue(key, value, "a number")
            return float(value)
        return value

    def _validate(self):
        for key in _PAIRS:
            self._values[key] = _pair(key, self._values[key])
        self._values["probes"] = [
            _pair("probes", probe) for probe in self._values["probes"]
        ]
        for key in ("grid.J", "scheme.steps"):
            if self._values[key] <= 0:
                raise InvalidConfigValue(key, self._values[key], "a positive integer")
        for key in ("pml.cells", "snapshot.every", "run.log_every"):
            if self._values[key] < 0:
                raise InvalidConfigValue(
                    key, self._values[key], "a non-negative integer"
                )
        flow = self.build_flow()
        if not flow.is_at_rest and self._values["scheme.stepper"] != "advective":
            raise InvalidConfigValue(
                "scheme.stepper",
                self._values["scheme.stepper"],
                "`advective` when the flow is not at rest",
            )

    def __getitem__(self, key: str):
        try:
            return self._values[key]
        except KeyError:
            raise UnknownConfigKey(key) from None

    def __contains__(self, key: str) -> bool:
        return key in self._values

    def __iter__(self):
        return iter(self._values)

    def as_dict(self) -> dict:
        return dict(self._values)

    def dump(self, path: str | os.PathLike) -> None:
        """Write the effective settings as flat ``key: value`` lines."""
        values = {
            key: list(value) if isinstance(value, tuple) else value
            for key, value in self._values.items()
        }
        values["probes"] = [list(probe) for probe in self._values["probes"]]
        with open(path, "w", encoding="utf8") as out:
            yaml.safe_dump(values, out, default_flow_style=None, sort_keys=True)

    @property
    def probes(self) -> list[tuple[float, float]]:
        return list(self._values["probes"])

    def build_grid(self) -> StaggeredGrid:
        cells = self["pml.cells"]
        return StaggeredGrid(
            self["grid.J"], self["grid.L"], cells, cells, self["grid.origin"]
        )

    def build_flow(self) -> FlowState:
        return FlowState(
            u0=self["flow.u0"],
            v0=self["flow.v0"],
            c0=self["flow.c0"],
            rho0=self["flow.rho0"],
        )

    def build_scheme(self, grid: StaggeredGrid, flow: FlowState) -> SchemeParams:
        """Time step at ``scheme.cfl_fraction`` of the selected stepper's limit."""
        moving = flow if self["scheme.stepper"] == "advective" else None
        return SchemeParams.for_grid(
            grid,
            celerity=flow.c0,
            cfl_fraction=self["scheme.cfl_fraction"],
            flow=moving,
        )

    def build_profile(self, grid: StaggeredGrid, params: SchemeParams) -> SigmaProfile:
        """
        Absorption profile for ``grid``.

        ``quadratic`` is a polynomial ramp of exponent 2 and ``polynomial`` uses
        ``pml.ramp_exponent``. A null ``pml.sigma_max`` selects
        ``default_sigma_max`` for ramps and ``pml.sigma_dt / dt`` for the
        constant profile.
        """
        sigma_max = self["pml.sigma_max"]
        if self["pml.profile"] == "constant":
            if sigma_max is None:
                sigma_max = self["pml.sigma_dt"] / params.dt
            return constant_profile(grid, sigma_max)
        if sigma_max is None:
            sigma_max = default_sigma_max(
                grid, params.celerity, self["pml.sigma_coefficient"]
            )
        exponent = self["pml.ramp_exponent"]
        if self["pml.profile"] == "quadratic":
            exponent = 2
        return polynomial_profile(grid, sigma_max, exponent)

    def build_source(self) -> Source:
        return Source(
            kind=self["source.kind"],
            center=self["source.center"],
            width=self["source.width"],
            waveform=self["source.waveform"],
            amplitude=self["source.amplitude"],
            frequency=self["source.frequency"],
            decay_rate=self["source.decay_rate"],
            target=self["source.target"],
            hard_set=self["source.hard_set"],
        )


class UnknownConfigKey(ValueError):
    """Raised when a setting is not recognized."""

    def __init__(self, key: str):
        super().__init__(f"`{key}` is not a recognized setting.")


class InvalidConfigValue(ValueError):
    """Raised when a setting has the wrong type or an unsupported value."""

    def __init__(self, key: str, value, expected: str):
        super().__init__(f"Setting `{key}`={value!r} must be {expected}.")
