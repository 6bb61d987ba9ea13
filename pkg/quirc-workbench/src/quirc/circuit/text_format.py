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
Plain-text circuit format.

One statement per line::

    QUBITS 3
    R_Z 0 1 2
    X_ERROR(0.01) 0 1 2
    M_Z 0 1 2
    DETECTOR(0, 0, 1) 0 1
    OBSERVABLE 2

``DETECTOR`` and ``OBSERVABLE`` list absolute measurement-record indices.
Text after ``#`` is ignored.
"""

import re
from typing import List, Optional, Tuple

from quirc.circuit.ir import (
    NOISE_CHANNELS,
    OPCODES,
    Circuit,
    Instruction,
)

_HEAD = re.compile(r"^(?P<name>[A-Z_0-9]+)(?:\((?P<arg>[^)]*)\))?$")


class CircuitFormatError(ValueError):
    """Raised for lines that cannot be parsed."""


def format_circuit(c: Circuit) -> str:
    lines = ["QUBITS {}".format(c.n)]
    for inst in c.instructions:
        head = inst.opcode
        if inst.prob is not None:
            head = "{}({!r})".format(head, float(inst.prob))
        lines.append(" ".join([head] + [str(t) for t in inst.targets]))
    for index, records in enumerate(c.detectors):
        head = "DETECTOR"
        coords = c.coords(index)
        if coords is not None:
            head = "DETECTOR({})".format(", ".join(_num(v) for v in coords))
        lines.append(" ".join([head] + [str(r) for r in records]))
    for records in c.observables:
        lines.append(" ".join(["OBSERVABLE"] + [str(r) for r in records]))
    return "\n".join(lines) + "\n"


def _num(value):
    return str(int(value)) if float(value).is_integer() else repr(value)


def parse_circuit(text: str) -> Circuit:
    n: Optional[int] = None
    instructions: List[Instruction] = []
    detectors: List[Tuple[int, ...]] = []
    coords: List[Optional[Tuple[float, ...]]] = []
    observables: List[Tuple[int, ...]] = []
    highest = -1
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split(None, 1)
        args = rest[0] if rest else ""
        # a parenthesised argument may contain spaces: DETECTOR(0, 1, 2) 4 5
        if "(" in head and ")" not in head:
            closing = args.index(")")
            head, args = head + args[: closing + 1], args[closing + 1 :]
        match = _HEAD.match(head.replace(" ", ""))
        if match is None:
            raise CircuitFormatError(
                "Line {}: cannot parse {!r}".format(number, raw)
            )
        name, arg = match.group("name"), match.group("arg")
        try:
            values = [int(token) for token in args.split()]
        except ValueError as exc:
            raise CircuitFormatError(
                "Line {}: non-integer target in {!r}".format(number, raw)
            ) from exc
        if name == "QUBITS":
            n = values[0]
        elif name == "DETECTOR":
            detectors.append(tuple(values))
            coords.append(
                tuple(float(v) for v in arg.split(",")) if arg else None
            )
        elif name == "OBSERVABLE":
            observables.append(tuple(values))
        elif name in OPCODES:
            prob = None
            if name in NOISE_CHANNELS:
                if arg is None:
                    raise CircuitFormatError(
                        "Line {}: {} needs a probability".format(number, name)
                    )
                prob = float(arg)
            instructions.append(Instruction(name, tuple(values), prob))
            highest = max([highest] + values)
        else:
            raise CircuitFormatError(
                "Line {}: unknown statement {}".format(number, name)
            )
    if n is None:
        n = highest + 1
    return Circuit(
        n,
        tuple(instructions),
        tuple(detectors),
        tuple(observables),
        tuple(coords) if any(c is not None for c in coords) else (),
    )
