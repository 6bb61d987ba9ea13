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
Single-fault analysis of a noisy circuit.

The circuit is walked backwards while every qubit carries two bitsets: the
detectors and observables an X error (``sx``) or a Z error (``sz``) at the
current point would flip. Detector ``k`` is bit ``k`` and observable ``o``
is bit ``num_detectors + o``. At each noise channel the bitsets give the
effect of every fault the channel can insert, in a single pass.
"""

from dataclasses import dataclass
from logging import getLogger
from typing import Dict, Iterator, List, Tuple

from quirc.circuit import Circuit

logger = getLogger(__name__)

MAX_GRAPHLIKE_DETECTORS = 2


class NonGraphlikeError(ValueError):
    """A fault part flips more than two detectors."""

    def __init__(self, message: str, provenance: str):
        super().__init__(message)
        self.provenance = provenance


def iter_bits(value: int) -> Iterator[int]:
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


@dataclass(frozen=True)
class Mechanism:
    probability: float
    detectors: Tuple[int, ...]
    observable_mask: int
    provenance: str


@dataclass(frozen=True)
class DetectorErrorModel:
    num_detectors: int
    num_observables: int
    mechanisms: Tuple[Mechanism, ...]
    detector_coords: Tuple[tuple, ...] = ()


def xor_compose(p1: float, p2: float) -> float:
    """Probability that exactly one of two independent flips happens."""
    return p1 * (1 - p2) + p2 * (1 - p1)


class _Accumulator:
    def __init__(self, num_detectors: int):
        self.num_detectors = num_detectors
        self.detector_mask = (1 << num_detectors) - 1
        self.by_effect: Dict[int, List] = {}
        self.invisible = 0

    def _count(self, effect: int) -> int:
        return (effect & self.detector_mask).bit_count()

    def add_fault(self, probability, parts, provenance):
        """Adds one fault given as ``[(label, [component effects])]``."""
        for label, components in parts:
            effect = 0
            for component in components:
                effect ^= component
            if self._count(effect) <= MAX_GRAPHLIKE_DETECTORS:
                self._add(effect, probability, provenance + ":" + label)
                continue
            for position, component in enumerate(components):
                if self._count(component) > MAX_GRAPHLIKE_DETECTORS:
                    raise NonGraphlikeError(
                        "Fault {}:{} flips {} detectors".format(
                            provenance, label, self._count(component)
                        ),
                        provenance,
                    )
                self._add(
                    component,
                    probability,
                    "{}:{}{}".format(provenance, label, position),
                )

    def _add(self, effect, probability, provenance):
        if effect == 0:
            return
        if effect & self.detector_mask == 0:
            self.invisible += 1
            logger.warning(
                "Fault %s flips an observable without firing a detector",
                provenance,
            )
            return
        entry = self.by_effect.get(effect)
        if entry is None:
            self.by_effect[effect] = [probability, provenance]
        else:
            entry[0] = xor_compose(entry[0], probability)

    def mechanisms(self) -> Tuple[Mechanism, ...]:
        found = []
        for effect, (probability, provenance) in self.by_effect.items():
            detectors = tuple(iter_bits(effect & self.detector_mask))
            found.append(
                Mechanism(
                    probability,
                    detectors,
                    effect >> self.num_detectors,
                    provenance,
                )
            )
        found.sort(key=lambda m: (m.detectors, m.observable_mask))
        return tuple(found)


def _record_masks(c: Circuit) -> List[int]:
    masks = [0] * c.num_measurements
    offset = len(c.detectors)
    for k, records in enumerate(c.detectors):
        for record in records:
            masks[record] ^= 1 << k
    for o, records in enumerate(c.observables):
        for record in records:
            masks[record] ^= 1 << (offset + o)
    return masks


def _noise_faults(inst, sx, sz):
    """Yields ``(probability, parts, tag)`` for every fault of a channel."""
    op, p = inst.opcode, inst.prob
    if op == "X_ERROR":
        for q in inst.targets:
            yield p, [("X", [sx[q]])], "X{}".format(q)
    elif op == "Z_ERROR":
        for q in inst.targets:
            yield p, [("Z", [sz[q]])], "Z{}".format(q)
    elif op == "DEPOLARIZE1":
        for q in inst.targets:
            yield p / 3, [("X", [sx[q]])], "X{}".format(q)
            yield p / 3, [("X", [sx[q]]), ("Z", [sz[q]])], "Y{}".format(q)
            yield p / 3, [("Z", [sz[q]])], "Z{}".format(q)
    else:
        for a, b in inst.pairs():
            for code in range(1, 16):
                x_parts = []
                z_parts = []
                if code & 1:
                    x_parts.append(sx[a])
                if code & 2:
                    z_parts.append(sz[a])
                if code & 4:
                    x_parts.append(sx[b])
                if code & 8:
                    z_parts.append(sz[b])
                tag = "{}{}{}{}".format(
                    "_XZY"[code & 3], a, "_XZY"[code >> 2], b
                )
                parts = []
                if x_parts:
                    parts.append(("X", x_parts))
                if z_parts:
                    parts.append(("Z", z_parts))
                yield p / 15, parts, tag


def _propagate_back(inst, sx, sz):
    op, targets = inst.opcode, inst.targets
    if op == "H":
        for q in targets:
            sx[q], sz[q] = sz[q], sx[q]
    elif op in ("S", "S_DAG"):
        for q in targets:
            sx[q] ^= sz[q]
    elif op == "CX":
        for c, t in inst.pairs():
            sx[c] ^= sx[t]
            sz[t] ^= sz[c]
    elif op == "CZ":
        for a, b in inst.pairs():
            sx[a] ^= sz[b]
            sx[b] ^= sz[a]
    elif op == "SWAP":
        for a, b in inst.pairs():
            sx[a], sx[b] = sx[b], sx[a]
            sz[a], sz[b] = sz[b], sz[a]
    elif op in ("R_Z", "R_X"):
        for q in targets:
            sx[q] = 0
            sz[q] = 0


def analyze_circuit(c: Circuit) -> DetectorErrorModel:
    """Lists every graph-like error mechanism of ``c``.

    Raises:
        NonGraphlikeError: a fault part flips more than two detectors even
            after splitting it per qubit.
    """
    c.check()
    masks = _record_masks(c)
    record = len(masks)
    sx = [0] * c.n
    sz = [0] * c.n
    acc = _Accumulator(len(c.detectors))
    for index in range(len(c.instructions) - 1, -1, -1):
        inst = c.instructions[index]
        op = inst.opcode
        if inst.is_measurement:
            record -= len(inst.targets)
            for offset, q in enumerate(inst.targets):
                mask = masks[record + offset]
                if op in ("M_Z", "M_Y"):
                    sx[q] ^= mask
                if op in ("M_X", "M_Y"):
                    sz[q] ^= mask
        elif inst.is_noise:
            if inst.prob == 0:
                continue
            for probability, parts, tag in _noise_faults(inst, sx, sz):
                acc.add_fault(
                    probability,
                    parts,
                    "{}@{}:{}".format(op, index, tag),
                )
        else:
            _propagate_back(inst, sx, sz)

    mechanisms = acc.mechanisms()
    logger.debug(
        "Analysed %d instructions: %d mechanisms, %d undetectable faults",
        len(c.instructions),
        len(mechanisms),
        acc.invisible,
    )
    return DetectorErrorModel(
        len(c.detectors),
        len(c.observables),
        mechanisms,
        c.detector_coords,
    )
