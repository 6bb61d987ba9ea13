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

"""Dense state-vector reference used to cross-check the tableau."""

from typing import Sequence, Tuple, Union

import numpy as np

from quirc.paulicore.pauli import PauliString, check_targets
from quirc.paulicore.tableau import (
    MAX_DENSE_QUBITS,
    ImpossibleOutcomeError,
    SizeLimitError,
)

_SQRT_HALF = 1 / np.sqrt(2)

_SINGLE = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT_HALF,
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "S_DAG": np.array([[1, 0], [0, -1j]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_PAIR = {
    "CX": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        dtype=complex,
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        dtype=complex,
    ),
}

_MEASURE_BASIS = {"M_Z": "Z", "M_X": "X", "M_Y": "Y"}

# (gate, targets) for unitaries, (M_*, targets, forced) for measurements,
# ("MPAULI", pauli, forced) for a multi-qubit Pauli measurement.
Operation = Union[Tuple[str, Sequence[int]], Tuple[str, object, int]]


def apply_pauli_dense(state: np.ndarray, pauli: PauliString) -> np.ndarray:
    n = pauli.n
    x_mask = 0
    z_mask = 0
    for qubit, (x_bit, z_bit) in enumerate(zip(pauli.x_bits, pauli.z_bits)):
        bit = 1 << (n - 1 - qubit)
        if x_bit:
            x_mask |= bit
        if z_bit:
            z_mask |= bit
    # letter Y equals i * X * Z
    y_count = bin(x_mask & z_mask).count("1")
    scale = 1j ** ((pauli.phase + y_count) % 4)
    indices = np.arange(state.shape[0])
    parity = np.array(
        [bin(int(index) & z_mask).count("1") & 1 for index in indices]
    )
    signed = state * np.where(parity, -1, 1)
    result = np.empty_like(state)
    result[indices ^ x_mask] = signed
    return scale * result


def _apply_matrix(state, matrix, qubits, n):
    tensor = state.reshape([2] * n)
    k = len(qubits)
    gate = matrix.reshape([2] * (2 * k))
    moved = np.tensordot(gate, tensor, axes=(list(range(k, 2 * k)), qubits))
    moved = np.moveaxis(moved, list(range(k)), qubits)
    return moved.reshape(-1)


def _project(state, pauli, forced):
    sign = -1 if forced else 1
    projected = 0.5 * (state + sign * apply_pauli_dense(state, pauli))
    norm = np.linalg.norm(projected)
    if norm < 1e-9:
        raise ImpossibleOutcomeError(
            "Outcome {} of {} has zero probability".format(forced, pauli)
        )
    return projected / norm


def dense_state_oracle(ops: Sequence[Operation], n: int) -> np.ndarray:
    """Runs ``ops`` on ``|0...0>`` and returns the exact amplitudes.

    Qubit 0 is the most significant index bit.
    """
    if n > MAX_DENSE_QUBITS:
        raise SizeLimitError(
            "Dense oracle supports at most {} qubits, got {}".format(
                MAX_DENSE_QUBITS, n
            )
        )
    state = np.zeros(1 << n, dtype=complex)
    state[0] = 1.0
    for op in ops:
        name = op[0]
        if name == "MPAULI":
            state = _project(state, op[1], op[2])
        elif name in _MEASURE_BASIS:
            for qubit in op[1]:
                pauli = PauliString.single(n, qubit, _MEASURE_BASIS[name])
                state = _project(state, pauli, op[2])
        elif name in _SINGLE:
            check_targets(n, name, op[1])
            for qubit in op[1]:
                state = _apply_matrix(state, _SINGLE[name], [qubit], n)
        elif name in _PAIR:
            check_targets(n, name, op[1])
            targets = list(op[1])
            for start in range(0, len(targets), 2):
                state = _apply_matrix(
                    state, _PAIR[name], targets[start : start + 2], n
                )
        else:
            raise ValueError("Unsupported oracle operation {!r}".format(name))
    return state


def equal_up_to_phase(first: np.ndarray, second: np.ndarray, tol=1e-9):
    overlap = np.vdot(first, second)
    return abs(abs(overlap) - 1.0) < tol and abs(
        np.linalg.norm(first) - np.linalg.norm(second)
    ) < tol
