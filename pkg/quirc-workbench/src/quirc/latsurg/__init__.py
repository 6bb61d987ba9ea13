# Copyright The QuIRC Workbench Authors
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

"""
Lattice-surgery merge of two surface-code patches across a remote seam.

.. code:: python

    from quirc.latsurg import NoiseParams, build_layout, logical_error_rate

    layout = build_layout(3)
    rate = logical_error_rate(
        layout, NoiseParams(p_spam=0.01, p_local=0.005), 10_000, seed=7
    )
"""

from quirc.circuit.noise import NoiseParams
from quirc.latsurg.layout import (
    InvalidDistanceError,
    PatchLayout,
    Plaquette,
    build_layout,
)
from quirc.latsurg.merge import (
    InvalidRoundsError,
    MergeCircuit,
    build_merge_circuit,
    build_merge_skeleton,
)
from quirc.latsurg.rate import (
    LogicalRate,
    clopper_pearson_upper,
    logical_error_rate,
    wilson_half_width,
)
from quirc.latsurg.resources import SeamResources, seam_resources

__all__ = [
    "InvalidDistanceError",
    "InvalidRoundsError",
    "LogicalRate",
    "MergeCircuit",
    "NoiseParams",
    "PatchLayout",
    "Plaquette",
    "SeamResources",
    "build_layout",
    "build_merge_circuit",
    "build_merge_skeleton",
    "clopper_pearson_upper",
    "logical_error_rate",
    "seam_resources",
    "wilson_half_width",
]
