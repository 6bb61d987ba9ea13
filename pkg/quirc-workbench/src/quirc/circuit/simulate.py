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

from logging import getLogger
from typing import Optional

import numpy as np

from quirc.circuit.ir import GATES, Circuit, CircuitValidationError
from quirc.paulicore import PauliString, StabilizerTableau

logger = getLogger(__name__)

_BASIS = {"M_Z": "Z", "M_X": "X", "M_Y": "Y", "R_Z": "Z", "R_X": "X"}
_CERTAIN_FLIP = {"X_ERROR": "X", "Z_ERROR": "Z"}


def tableau_run(
    c: Circuit,
    forced_outcome: Optional[int] = 0,
    rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Executes ``c`` on a tableau and returns its measurement record.

    Random measurements resolve to ``forced_outcome``, or draw from ``rng``
    when it is ``None``. Noise channels at probability 1 that are single
    Paulis become deterministic insertions. Other noise is sampled from
    ``rng`` when given and skipped otherwise.
    """
    c.check()
    record = []
    if c.n == 0:
        return np.array(record, dtype=np.uint8)
    tableau = StabilizerTableau.identity(c.n)
    for inst in c.instructions:
        op = inst.opcode
        if op in GATES:
            tableau.apply(op, inst.targets)
        elif op in ("R_Z", "R_X"):
            for qubit in inst.targets:
                tableau.reset(qubit, _BASIS[op])
        elif op in ("M_Z", "M_X", "M_Y"):
            for qubit in inst.targets:
                pauli = PauliString.single(c.n, qubit, _BASIS[op])
                outcome, _ = tableau.measure(
                    pauli, rng=rng, forced=forced_outcome, strict=False
                )
                record.append(outcome)
        elif inst.prob == 0:
            continue
        elif op in _CERTAIN_FLIP and inst.prob == 1:
            tableau.apply(_CERTAIN_FLIP[op], inst.targets)
        elif rng is not None:
            _sample_noise(tableau, inst, rng)
    return np.array(record, dtype=np.uint8)


def _sample_noise(tableau, inst, rng):
    if inst.opcode in _CERTAIN_FLIP:
        hits = [q for q in inst.targets if rng.random() < inst.prob]
        if hits:
            tableau.apply(_CERTAIN_FLIP[inst.opcode], hits)
    elif inst.opcode == "DEPOLARIZE1":
        for qubit in inst.targets:
            if rng.random() < inst.prob:
                tableau.apply("XYZ"[rng.integers(3)], [qubit])
    else:
        for a, b in inst.pairs():
            if rng.random() < inst.prob:
                code = int(rng.integers(1, 16))
                for qubit, bits in ((a, code & 3), (b, code >> 2)):
                    if bits:
                        tableau.apply("_XZY"[bits], [qubit])


def parities(record: np.ndarray, groups) -> np.ndarray:
    out = np.zeros(len(groups), dtype=np.uint8)
    for index, group in enumerate(groups):
        if group:
            out[index] = np.bitwise_xor.reduce(record[list(group)])
    return out


def reference_sample(c: Circuit) -> np.ndarray:
    """Noise-free record with random outcomes resolved to 0."""
    record = tableau_run(c.without_noise(), forced_outcome=0)
    fired = np.flatnonzero(parities(record, c.detectors))
    if fired.size:
        raise CircuitValidationError(
            "Detectors {} are not 0 on the noiseless reference".format(
                fired.tolist()
            ),
            "reference",
        )
    return record
