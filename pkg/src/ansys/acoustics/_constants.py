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
"""Provides the package defaults and the switch for the finite-value monitor."""

import os

import yaml

# Single import of static tables

file_dir = os.path.dirname(__file__)
cfg_path = os.path.join(file_dir, "cfg.yaml")

with open(cfg_path, "r") as cfg_yaml:
    cfg_data = yaml.safe_load(cfg_yaml)

_defaults: dict = cfg_data

_tables_dir = os.path.join(file_dir, "experiment_tables")

CHECK_FINITE_ENV = "PYANSYS_ACOUSTICS_CHECK_FINITE"


def _check_finite_enabled() -> bool:
    """Whether the per-step NaN/Inf monitor runs; ``"0"`` disables it."""
    return os.getenv(CHECK_FINITE_ENV, "1") != "0"
