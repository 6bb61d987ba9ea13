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
Merge circuit for measuring ``Z_L1 Z_L2`` through the ancilla region.

The circuit prepares the patches in ``|0>`` and the ancilla region in
``|+>``, runs one stabilizer round on each patch alone, then ``rounds``
rounds on the merged patch, and closes with a Z readout of every data
qubit. Detector coordinates are ``(row, col, round, sector)`` with the
plaquette centre in data-grid units and sector 0 for X, 1 for Z.
"""

from dataclasses import dataclass
from logging import getLogger
from typing import Dict, List, Optional, Sequence, Tuple

from quirc.circuit import (
    Circuit,
    CircuitBuilder,
    LatencyMarker,
    NoiseParams,
    append_noise_model,
)
from quirc.latsurg.layout import (
    ANCILLA,
    PATCH1,
    PATCH2,
    PatchLayout,
    Plaquette,
)

logger = getLogger(__name__)

SECTOR = {"X": 0, "Z": 1}


class InvalidRoundsError(ValueError):
    """Raised when fewer than one merged round is requested."""


@dataclass(frozen=True)
class MergeCircuit:
    """Noise-free merge circuit plus the markers the noise model needs."""

    layout: PatchLayout
    circuit: Circuit
    seam_cx_indices: Tuple[int, ...]
    latency_markers: Tuple[LatencyMarker, ...]
    round_starts: Tuple[int, ...]

    @property
    def rounds(self) -> int:
        return len(self.round_starts)

    def with_noise(self, params: NoiseParams) -> Circuit:
        return append_noise_model(
            self.circuit, params, self.seam_cx_indices, self.latency_markers
        )


class _RoundEmitter:
    def __init__(self, layout: PatchLayout, builder: CircuitBuilder):
        self.layout = layout
        self.builder = builder
        self.seam: List[int] = []

    def _is_remote(self, plaquette: Plaquette, data_qubit: int) -> bool:
        seam = self.layout.seam_column
        return (
            plaquette.centre[1] == seam - 1
            and self.layout.data[data_qubit][1] == seam
        )

    def emit(self, plaquettes: Sequence[Plaquette]) -> Dict[tuple, int]:
        """Appends one extraction round; returns the record per centre."""
        b = self.builder
        x_checks = [p for p in plaquettes if p.basis == "X"]
        z_checks = [p for p in plaquettes if p.basis == "Z"]
        b.append("R_X", [p.qubit for p in x_checks])
        b.append("R_Z", [p.qubit for p in z_checks])
        for step in range(4):
            local: List[int] = []
            remote: List[int] = []
            for p in plaquettes:
                data_qubit = p.schedule()[step]
                if data_qubit is None:
                    continue
                if p.basis == "X":
                    pair = (p.qubit, data_qubit)
                else:
                    pair = (data_qubit, p.qubit)
                if self._is_remote(p, data_qubit):
                    remote.extend(pair)
                else:
                    local.extend(pair)
            b.append("CX", local)
            if remote:
                self.seam.append(len(b))
                b.append("CX", remote)
        records = b.append("M_X", [p.qubit for p in x_checks])
        records += b.append("M_Z", [p.qubit for p in z_checks])
        return {
            p.centre: record
            for p, record in zip(x_checks + z_checks, records)
        }


def _coords(plaquette: Plaquette, t: int):
    i, j = plaquette.centre
    return (i + 0.5, j + 0.5, t, SECTOR[plaquette.basis])


def build_merge_skeleton(
    layout: PatchLayout,
    rounds: Optional[int] = None,
    latency_once: bool = True,
) -> MergeCircuit:
    """Builds the noise-free merge circuit and its noise markers.

    With ``latency_once`` the latency marker precedes merged round 1 only;
    otherwise one marker precedes every merged round.
    """
    if rounds is None:
        rounds = layout.d
    if rounds < 1:
        raise InvalidRoundsError(
            "Merge needs at least one round, got {}".format(rounds)
        )
    b = CircuitBuilder(layout.num_qubits)
    emitter = _RoundEmitter(layout, b)
    all_data = tuple(range(layout.num_data))

    b.append(
        "R_Z", sorted(layout.data_in(PATCH1) + layout.data_in(PATCH2))
    )
    b.append("R_X", layout.data_in(ANCILLA))

    patch_checks = layout.patch_plaquettes(1) + layout.patch_plaquettes(2)
    before = emitter.emit(patch_checks)
    for p in patch_checks:
        if p.basis == "Z":
            b.detector([before[p.centre]], _coords(p, 0))

    markers: List[LatencyMarker] = []
    starts: List[int] = []
    previous = before
    for t in range(1, rounds + 1):
        starts.append(len(b))
        if t == 1 or not latency_once:
            markers.append(LatencyMarker(all_data, len(b), t))
        current = emitter.emit(layout.plaquettes)
        for p in layout.plaquettes:
            record = current[p.centre]
            if t > 1:
                b.detector([record, previous[p.centre]], _coords(p, t))
            elif p.centre in before:
                b.detector([record, before[p.centre]], _coords(p, t))
            elif p.basis == "X":
                # ancilla-region X checks start from |+>
                b.detector([record], _coords(p, t))
        if t == 1:
            b.observable_include(
                0, [current[p.centre] for p in layout.observable_plaquettes]
            )
        previous = current

    final = b.append("M_Z", all_data)
    for p in layout.plaquettes:
        if p.basis == "Z":
            b.detector(
                [final[q] for q in p.support] + [previous[p.centre]],
                _coords(p, rounds + 1),
            )

    circuit = b.build()
    logger.debug(
        "Merge circuit d=%d rounds=%d: %d instructions, %d detectors, "
        "%d seam CX layers",
        layout.d,
        rounds,
        len(circuit.instructions),
        len(circuit.detectors),
        len(emitter.seam),
    )
    return MergeCircuit(
        layout,
        circuit,
        tuple(emitter.seam),
        tuple(markers),
        tuple(starts),
    )


def build_merge_circuit(
    layout: PatchLayout,
    params: NoiseParams,
    rounds: Optional[int] = None,
    latency_once: bool = True,
) -> Circuit:
    return build_merge_skeleton(layout, rounds, latency_once).with_noise(
        params
    )
