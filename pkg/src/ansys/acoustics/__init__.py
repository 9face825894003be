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
"""Advective acoustics on staggered grids with perfectly matched layers."""

try:
    import importlib.metadata as importlib_metadata
except ModuleNotFoundError:
    import importlib_metadata

__version__ = importlib_metadata.version(__name__.replace(".", "-"))

from ansys.acoustics.analysis import (  # noqa: F401
    PlaneWaveContext,
    reflection_coefficient,
    symbol_eigen,
    toy_1d_model,
)
from ansys.acoustics.config import SimulationConfig  # noqa: F401
from ansys.acoustics.flow import (  # noqa: F401
    FlowState,
    LorentzMap,
    TimeLevelInterpolator,
    from_tilde,
    make_map,
    to_tilde,
)
from ansys.acoustics.grid import FieldSet, StaggeredGrid, new_grid  # noqa: F401
from ansys.acoustics.harness import ExperimentRegistry, ExperimentSpec  # noqa: F401
from ansys.acoustics.pml import SigmaProfile, polynomial_profile  # noqa: F401
from ansys.acoustics.probes import ProbeSeries  # noqa: F401
from ansys.acoustics.scaling import ReferenceScales  # noqa: F401
from ansys.acoustics.solver import SchemeParams, Source, run  # noqa: F401
from ansys.acoustics.stations import Station  # noqa: F401
