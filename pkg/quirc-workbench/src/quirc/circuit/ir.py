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

from dataclasses import dataclass, field
from logging import getLogger
from typing import Iterable, List, Optional, Sequence, Tuple

logger = getLogger(__name__)

GATES = frozenset({"H", "S", "S_DAG", "X", "Y", "Z", "CX", "CZ", "SWAP"})
RESETS = frozenset({"R_Z", "R_X"})
MEASUREMENTS = frozenset({"M_Z", "M_X", "M_Y"})
NOISE_CHANNELS = frozenset(
    {"X_ERROR", "Z_ERROR", "DEPOLARIZE1", "DEPOLARIZE2"}
)
PAIR_OPCODES = frozenset({"CX", "CZ", "SWAP", "DEPOLARIZE2"})
OPCODES = GATES | RESETS | MEASUREMENTS | NOISE_CHANNELS


class CircuitValidationError(ValueError):
    """A circuit violates an index, arity, probability or reference rule.

    ``instruction_index`` is ``None`` for detector and observable problems.
    """

    def __init__(
        self, message: str, kind: str, instruction_index: Optional[int] = None
    ):
        super().__init__(message)
        self.kind = kind
        self.instruction_index = instruction_index


@dataclass(frozen=True)
class Instruction:
    opcode: str
    targets: Tuple[int, ...]
    prob: Optional[float] = None

    @property
    def is_noise(self) -> bool:
        return self.opcode in NOISE_CHANNELS

    @property
    def is_measurement(self) -> bool:
        return self.opcode in MEASUREMENTS

    def pairs(self) -> List[Tuple[int, int]]:
        return list(zip(self.targets[0::2], self.targets[1::2]))


@dataclass(frozen=True)
class Circuit:
    n: int
    instructions: Tuple[Instruction, ...] = ()
    detectors: Tuple[Tuple[int, ...], ...] = ()
    observables: Tuple[Tuple[int, ...], ...] = ()
    detector_coords: Tuple[Optional[Tuple[float, ...]], ...] = field(
        default=()
    )

    @property
    def num_measurements(self) -> int:
        return sum(
            len(inst.targets)
            for inst in self.instructions
            if inst.is_measurement
        )

    def coords(self, detector: int) -> Optional[Tuple[float, ...]]:
        if detector < len(self.detector_coords):
            return self.detector_coords[detector]
        return None

    def without_noise(self) -> "Circuit":
        return Circuit(
            self.n,
            tuple(inst for inst in self.instructions if not inst.is_noise),
            self.detectors,
            self.observables,
            self.detector_coords,
        )

    def check(self) -> "Circuit":
        error = validate(self)
        if error is not None:
            raise error
        return self


class CircuitBuilder:
    """Appends instructions while tracking global measurement records."""

    def __init__(self, n: int):
        self.n = n
        self._instructions: List[Instruction] = []
        self._detectors: List[Tuple[int, ...]] = []
        self._coords: List[Optional[Tuple[float, ...]]] = []
        self._observables: List[List[int]] = []
        self._records = 0

    def __len__(self):
        return len(self._instructions)

    def append(
        self,
        opcode: str,
        targets: Iterable[int],
        prob: Optional[float] = None,
    ) -> List[int]:
        """Appends one instruction and returns its new record indices."""
        targets = tuple(int(target) for target in targets)
        if not targets:
            return []
        self._instructions.append(Instruction(opcode, targets, prob))
        if opcode not in MEASUREMENTS:
            return []
        first = self._records
        self._records += len(targets)
        return list(range(first, self._records))

    def detector(
        self,
        records: Iterable[int],
        coords: Optional[Sequence[float]] = None,
    ) -> int:
        self._detectors.append(tuple(sorted(records)))
        self._coords.append(tuple(coords) if coords is not None else None)
        return len(self._detectors) - 1

    def observable_include(self, index: int, records: Iterable[int]):
        while len(self._observables) <= index:
            self._observables.append([])
        self._observables[index].extend(records)

    def build(self) -> Circuit:
        coords = tuple(self._coords) if any(self._coords) else ()
        return Circuit(
            self.n,
            tuple(self._instructions),
            tuple(self._detectors),
            tuple(tuple(sorted(obs)) for obs in self._observables),
            coords,
        )


def validate(c: Circuit) -> Optional[CircuitValidationError]:
    """Returns the first violation found in ``c``, or ``None`` when valid."""
    if c.n < 0:
        return CircuitValidationError(
            "Qubit count {} is negative".format(c.n), "index"
        )
    records = 0
    for index, inst in enumerate(c.instructions):
        problem = _check_instruction(c.n, inst)
        if problem is not None:
            return CircuitValidationError(
                "Instruction {} ({}): {}".format(
                    index, inst.opcode, problem[1]
                ),
                problem[0],
                index,
            )
        if inst.is_measurement:
            records += len(inst.targets)
    for label, groups in (
        ("DETECTOR", c.detectors),
        ("OBSERVABLE", c.observables),
    ):
        for position, group in enumerate(groups):
            for record in group:
                if not 0 <= record < records:
                    return CircuitValidationError(
                        "{} {} references record {} but the circuit has {} "
                        "measurements".format(
                            label, position, record, records
                        ),
                        "reference",
                    )
    return None


def _check_instruction(n, inst):
    if inst.opcode not in OPCODES:
        return "opcode", "unknown opcode"
    if not inst.targets:
        return "arity", "no targets"
    if inst.opcode in PAIR_OPCODES:
        if len(inst.targets) % 2:
            return "arity", "needs an even number of targets"
        if any(a == b for a, b in inst.pairs()):
            return "arity", "pair acts twice on one qubit"
    for target in inst.targets:
        if not 0 <= target < n:
            return "index", "target {} outside 0..{}".format(target, n - 1)
    if len(set(inst.targets)) != len(inst.targets):
        return "index", "duplicate targets"
    if inst.is_noise:
        if inst.prob is None or not 0.0 <= inst.prob <= 1.0:
            return "probability", "probability {!r} not in [0, 1]".format(
                inst.prob
            )
    elif inst.prob is not None:
        return "probability", "only noise channels carry a probability"
    return None
