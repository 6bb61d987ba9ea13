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

import numpy as np

from quirc.paulicore import PauliString, StabilizerTableau

QUBITS = 32


def ghz_and_measure():
    rng = np.random.default_rng(0)
    tableau = StabilizerTableau.identity(QUBITS)
    tableau.apply("H", [0])
    for qubit in range(1, QUBITS):
        tableau.apply("CX", [qubit - 1, qubit])
    for qubit in range(QUBITS):
        tableau.measure(PauliString.single(QUBITS, qubit, "Z"), rng=rng)


def test_ghz_prepare_and_measure(benchmark):
    benchmark(ghz_and_measure)
