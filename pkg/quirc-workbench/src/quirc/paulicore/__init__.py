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
Pauli algebra and exact stabilizer-state simulation.

Everything above this package (circuit sampling, protocol checks, decoder
fault analysis) relies on the conjugation rules in
:mod:`quirc.paulicore.symplectic`.
"""

from quirc.paulicore.oracle import dense_state_oracle, equal_up_to_phase
from quirc.paulicore.pauli import (
    InvalidSizeError,
    PauliString,
    QubitIndexError,
    conjugate,
    product,
)
from quirc.paulicore.tableau import (
    ImpossibleOutcomeError,
    InvalidMeasurementError,
    SizeLimitError,
    StabilizerTableau,
    apply_clifford,
    identity_tableau,
    measure_pauli,
    peek_pauli,
)

__all__ = [
    "ImpossibleOutcomeError",
    "InvalidMeasurementError",
    "InvalidSizeError",
    "PauliString",
    "QubitIndexError",
    "SizeLimitError",
    "StabilizerTableau",
    "apply_clifford",
    "conjugate",
    "dense_state_oracle",
    "equal_up_to_phase",
    "identity_tableau",
    "measure_pauli",
    "peek_pauli",
    "product",
]
