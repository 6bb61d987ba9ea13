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

from unittest import TestCase

from quirc.circuit import (
    Circuit,
    CircuitBuilder,
    CircuitFormatError,
    CircuitValidationError,
    Instruction,
    format_circuit,
    parse_circuit,
    validate,
)
from tests.fixtures import repetition_memory


def circuit_of(*instructions, n=2, detectors=()):
    return Circuit(n, tuple(instructions), tuple(detectors))


class TestValidate(TestCase):
    def test_valid_circuit(self):
        self.assertIsNone(validate(repetition_memory()))

    def test_violations(self):
        for kind, c in (
            ("opcode", circuit_of(Instruction("T", (0,)))),
            ("arity", circuit_of(Instruction("CX", (0,)))),
            ("arity", circuit_of(Instruction("CZ", (1, 1)))),
            ("index", circuit_of(Instruction("H", (2,)))),
            ("index", circuit_of(Instruction("M_Z", (0, 0)))),
            ("probability", circuit_of(Instruction("X_ERROR", (0,), 1.5))),
            ("probability", circuit_of(Instruction("X_ERROR", (0,)))),
            ("probability", circuit_of(Instruction("H", (0,), 0.1))),
            (
                "reference",
                circuit_of(Instruction("M_Z", (0,)), detectors=[(1,)]),
            ),
        ):
            with self.subTest(kind=kind, circuit=c):
                error = validate(c)
                self.assertIsInstance(error, CircuitValidationError)
                self.assertEqual(error.kind, kind)

    def test_instruction_index(self):
        c = circuit_of(Instruction("H", (0,)), Instruction("H", (5,)))
        with self.assertRaises(CircuitValidationError) as context:
            c.check()
        self.assertEqual(context.exception.instruction_index, 1)

    def test_builder_records(self):
        b = CircuitBuilder(3)
        self.assertEqual(b.append("M_Z", [0, 1]), [0, 1])
        self.assertEqual(b.append("H", [2]), [])
        self.assertEqual(b.append("M_X", [2]), [2])
        self.assertEqual(b.append("M_Z", []), [])
        c = b.build()
        self.assertEqual(c.num_measurements, 3)
        self.assertEqual(len(c.instructions), 3)

    def test_without_noise(self):
        c = repetition_memory(p=0.1)
        bare = c.without_noise()
        self.assertFalse(any(inst.is_noise for inst in bare.instructions))
        self.assertEqual(bare.detectors, c.detectors)
        self.assertEqual(bare.num_measurements, c.num_measurements)


class TestTextFormat(TestCase):
    def test_round_trip(self):
        c = repetition_memory(p=0.125)
        self.assertEqual(parse_circuit(format_circuit(c)), c)

    def test_parse(self):
        c = parse_circuit(
            """
            QUBITS 2
            R_Z 0 1   # reset
            DEPOLARIZE2(0.01) 0 1
            M_Z 0 1
            DETECTOR(0, 1.5, 2) 0 1
            OBSERVABLE 1
            """
        )
        self.assertEqual(c.n, 2)
        self.assertEqual(c.instructions[1].prob, 0.01)
        self.assertEqual(c.detectors, ((0, 1),))
        self.assertEqual(c.coords(0), (0.0, 1.5, 2.0))
        self.assertEqual(c.observables, ((1,),))

    def test_qubit_count_inferred(self):
        self.assertEqual(parse_circuit("H 4\n").n, 5)

    def test_parse_errors(self):
        for text in ("FOO 1", "X_ERROR 0", "H a", "h 0"):
            with self.subTest(text=text):
                with self.assertRaises(CircuitFormatError):
                    parse_circuit(text)
