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
The five-rate inhomogeneous noise model.

``append_noise_model`` rewrites a bare circuit, inserting:

* ``X_ERROR(p_spam)`` after Z-basis resets and before Z/Y-basis
  measurements, ``Z_ERROR(p_spam)`` for the X basis;
* ``DEPOLARIZE1(p_local)`` / ``DEPOLARIZE2(p_local)`` after every gate;
* ``X_ERROR(p_remote_x)`` on the targets and ``Z_ERROR(p_remote_z)`` on the
  controls of each seam ``CX``, on top of the local depolarizing;
* ``DEPOLARIZE1(p_latency)`` on the qubits of every latency marker.

Channels with probability 0 are omitted. Measurement records, detectors
and observables are unchanged.
"""

from dataclasses import dataclass, fields
from logging import getLogger
from typing import Iterable, List, Sequence, Tuple

from quirc.circuit.ir import Circuit, Instruction

logger = getLogger(__name__)

_SINGLE_QUBIT_GATES = frozenset({"H", "S", "S_DAG", "X", "Y", "Z"})
_TWO_QUBIT_GATES = frozenset({"CX", "CZ", "SWAP"})
_SPAM_BEFORE = {"M_Z": "X_ERROR", "M_Y": "X_ERROR", "M_X": "Z_ERROR"}
_SPAM_AFTER = {"R_Z": "X_ERROR", "R_X": "Z_ERROR"}


class NoiseMarkerError(ValueError):
    """Raised when a seam or latency marker does not fit the circuit."""


@dataclass(frozen=True)
class NoiseParams:
    p_spam: float = 0.0
    p_local: float = 0.0
    p_remote_x: float = 0.0
    p_remote_z: float = 0.0
    p_latency: float = 0.0

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(
                    "{} must be in [0, 1], got {!r}".format(item.name, value)
                )

    @property
    def is_zero(self) -> bool:
        return all(getattr(self, item.name) == 0 for item in fields(self))


@dataclass(frozen=True)
class LatencyMarker:
    """Latency depolarization on ``qubits`` before instruction ``position``.

    ``position`` may equal the instruction count, meaning the end of the
    circuit. ``round`` is informational.
    """

    qubits: Tuple[int, ...]
    position: int
    round: int = 0


def _check_markers(c, seam_cx_indices, latency_sites):
    for index in seam_cx_indices:
        if not 0 <= index < len(c.instructions):
            raise NoiseMarkerError(
                "Seam index {} outside the circuit".format(index)
            )
        if c.instructions[index].opcode != "CX":
            raise NoiseMarkerError(
                "Seam index {} marks {}, not CX".format(
                    index, c.instructions[index].opcode
                )
            )
    for marker in latency_sites:
        if not 0 <= marker.position <= len(c.instructions):
            raise NoiseMarkerError(
                "Latency marker at {} outside the circuit".format(
                    marker.position
                )
            )
        if any(not 0 <= q < c.n for q in marker.qubits):
            raise NoiseMarkerError(
                "Latency marker for round {} names a missing qubit".format(
                    marker.round
                )
            )


def append_noise_model(
    c: Circuit,
    params: NoiseParams,
    seam_cx_indices: Iterable[int] = (),
    latency_sites: Sequence[LatencyMarker] = (),
) -> Circuit:
    seam = frozenset(seam_cx_indices)
    _check_markers(c, seam, latency_sites)
    latency_at = {}
    for marker in latency_sites:
        latency_at.setdefault(marker.position, []).append(marker)

    out: List[Instruction] = []

    def channel(opcode, targets, prob):
        if prob > 0 and targets:
            out.append(Instruction(opcode, tuple(targets), float(prob)))

    def latency(position):
        for marker in latency_at.get(position, ()):
            channel("DEPOLARIZE1", marker.qubits, params.p_latency)

    for index, inst in enumerate(c.instructions):
        latency(index)
        op = inst.opcode
        if op in _SPAM_BEFORE:
            channel(_SPAM_BEFORE[op], inst.targets, params.p_spam)
        out.append(inst)
        if op in _SPAM_AFTER:
            channel(_SPAM_AFTER[op], inst.targets, params.p_spam)
        elif op in _SINGLE_QUBIT_GATES:
            channel("DEPOLARIZE1", inst.targets, params.p_local)
        elif op in _TWO_QUBIT_GATES:
            channel("DEPOLARIZE2", inst.targets, params.p_local)
            if index in seam:
                channel("X_ERROR", inst.targets[1::2], params.p_remote_x)
                channel("Z_ERROR", inst.targets[0::2], params.p_remote_z)
    latency(len(c.instructions))

    logger.debug(
        "Noise model %s added %d channels (%d seam CX, %d latency markers)",
        params,
        len(out) - len(c.instructions),
        len(seam),
        len(latency_sites),
    )
    return Circuit(
        c.n,
        tuple(out),
        c.detectors,
        c.observables,
        c.detector_coords,
    )
