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

"""Small circuits shared by the circuit and decoder tests."""

from quirc.circuit import CircuitBuilder


def flip_circuit(p):
    """One qubit, one ``X_ERROR(p)``, one detector on its measurement."""
    b = CircuitBuilder(1)
    b.append("R_Z", [0])
    b.append("X_ERROR", [0], p)
    (record,) = b.append("M_Z", [0])
    b.detector([record])
    b.observable_include(0, [record])
    return b.build()


def repetition_memory(distance=3, rounds=2, p=0.05):
    """Bit-flip repetition code with ancilla parity checks.

    Data qubits are ``0..distance-1``; ancilla ``distance + i`` checks data
    ``i`` and ``i + 1``. The observable is the first data qubit.
    """
    n = 2 * distance - 1
    data = list(range(distance))
    ancillas = list(range(distance, n))
    b = CircuitBuilder(n)
    b.append("R_Z", range(n))
    previous = None
    for r in range(rounds):
        b.append("X_ERROR", data, p)
        checks = range(distance - 1)
        b.append("CX", [q for i in checks for q in (i, distance + i)])
        b.append("CX", [q for i in checks for q in (i + 1, distance + i)])
        b.append("X_ERROR", ancillas, p)
        records = b.append("M_Z", ancillas)
        b.append("R_Z", ancillas)
        for i, record in enumerate(records):
            group = [record] if previous is None else [record, previous[i]]
            b.detector(group, (i, r))
        previous = records
    final = b.append("M_Z", data)
    for i in range(distance - 1):
        b.detector(
            [final[i], final[i + 1], previous[i]], (i, rounds)
        )
    b.observable_include(0, [final[0]])
    return b.build()
