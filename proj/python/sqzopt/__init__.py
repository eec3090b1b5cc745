# Copyright 2026 The sqzopt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the sqzopt steady-state solver and resonance analysis."""

from ._core import (
    ConfigError,
    Cutoffs,
    Direction,
    Placement,
    SolverError,
    SolverMethod,
    SqueezedFrame,
    SystemParams,
    appc_csv,
    derive_squeezed_frame,
    eigenstate_components,
    frame_csv,
    isolation_ratio_db,
    parse_grid,
    resonance_roots,
    single_photon_basis,
    single_photon_matrix,
    solve,
    sweep_csv,
    two_photon_resonances,
)

__all__ = [
    "ConfigError",
    "Cutoffs",
    "Direction",
    "Placement",
    "SolverError",
    "SolverMethod",
    "SqueezedFrame",
    "SystemParams",
    "appc_csv",
    "derive_squeezed_frame",
    "eigenstate_components",
    "frame_csv",
    "isolation_ratio_db",
    "parse_grid",
    "resonance_roots",
    "single_photon_basis",
    "single_photon_matrix",
    "solve",
    "sweep_csv",
    "two_photon_resonances",
]
