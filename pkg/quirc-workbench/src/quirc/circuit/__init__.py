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
Circuit instructions, noise channels, detectors and Pauli-frame sampling.
"""

from quirc.circuit.frame import BLOCK_SHOTS, SampleMatrix, frame_sample
from quirc.circuit.ir import (
    Circuit,
    CircuitBuilder,
    CircuitValidationError,
    Instruction,
    validate,
)
from quirc.circuit.noise import (
    LatencyMarker,
    NoiseMarkerError,
    NoiseParams,
    append_noise_model,
)
from quirc.circuit.simulate import parities, reference_sample, tableau_run
from quirc.circuit.text_format import (
    CircuitFormatError,
    format_circuit,
    parse_circuit,
)

__all__ = [
    "BLOCK_SHOTS",
    "Circuit",
    "CircuitBuilder",
    "CircuitFormatError",
    "CircuitValidationError",
    "Instruction",
    "LatencyMarker",
    "NoiseMarkerError",
    "NoiseParams",
    "SampleMatrix",
    "append_noise_model",
    "format_circuit",
    "frame_sample",
    "parities",
    "parse_circuit",
    "reference_sample",
    "tableau_run",
    "validate",
]
