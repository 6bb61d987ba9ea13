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

import numpy as np

from quirc.circuit import (
    BLOCK_SHOTS,
    CircuitBuilder,
    CircuitValidationError,
    LatencyMarker,
    NoiseMarkerError,
    NoiseParams,
    append_noise_model,
    frame_sample,
    parities,
    reference_sample,
    tableau_run,
)
from tests.fixtures import flip_circuit, repetition_memory


class TestTableauRun(TestCase):
    def test_noiseless_record(self):
        c = repetition_memory(p=0.3)
        record = reference_sample(c)
        self.assertEqual(len(record), c.num_measurements)
        self.assertFalse(record.any())

    def test_certain_flip(self):
        record = tableau_run(flip_circuit(1.0))
        self.assertEqual(record.tolist(), [1])
        self.assertEqual(parities(record, ((0,),)).tolist(), [1])

    def test_forced_random_outcome(self):
        b = CircuitBuilder(1)
        b.append("R_X", [0])
        b.append("M_Z", [0])
        record = tableau_run(b.build(), forced_outcome=1)
        self.assertEqual(record.tolist(), [1])

    def test_nondeterministic_detector_rejected(self):
        b = CircuitBuilder(1)
        b.append("H", [0])
        (record,) = b.append("M_Z", [0])
        b.detector([record])
        with self.assertRaises(CircuitValidationError):
            reference_sample(b.build())


class TestFrameSample(TestCase):
    def test_noiseless_circuit_never_fires(self):
        sample = frame_sample(repetition_memory(p=0.0), 500, seed=3)
        self.assertEqual(sample.detector_bits.shape, (500, 6))
        self.assertFalse(sample.detector_bits.any())
        self.assertFalse(sample.observable_bits.any())

    def test_same_seed_same_matrix(self):
        c = repetition_memory(p=0.1)
        first = frame_sample(c, 300, seed=11)
        second = frame_sample(c, 300, seed=11)
        np.testing.assert_array_equal(
            first.detector_bits, second.detector_bits
        )
        np.testing.assert_array_equal(
            first.observable_bits, second.observable_bits
        )

    def test_worker_count_does_not_change_samples(self):
        c = repetition_memory(p=0.1)
        shots = 2 * BLOCK_SHOTS + 17
        serial = frame_sample(c, shots, seed=5)
        parallel = frame_sample(c, shots, seed=5, workers=2)
        np.testing.assert_array_equal(
            serial.detector_bits, parallel.detector_bits
        )

    def test_zero_shots(self):
        sample = frame_sample(repetition_memory(), 0, seed=0)
        self.assertEqual(sample.detector_bits.shape, (0, 6))

    def test_flip_rate(self):
        sample = frame_sample(flip_circuit(0.2), 20_000, seed=1)
        self.assertAlmostEqual(sample.detector_bits.mean(), 0.2, delta=0.02)
        np.testing.assert_array_equal(
            sample.detector_bits, sample.observable_bits
        )


def bare_circuit():
    b = CircuitBuilder(3)
    b.append("R_Z", [0, 1])
    b.append("R_X", [2])
    b.append("H", [0])
    b.append("CX", [0, 1])
    b.append("CX", [2, 1])
    b.append("M_Z", [0, 1])
    b.append("M_X", [2])
    return b.build()


class TestNoiseModel(TestCase):
    def test_channel_placement(self):
        noisy = append_noise_model(
            bare_circuit(),
            NoiseParams(
                p_spam=0.01,
                p_local=0.002,
                p_remote_x=0.03,
                p_remote_z=0.04,
                p_latency=0.05,
            ),
            seam_cx_indices=[4],
            latency_sites=[LatencyMarker((0, 1, 2), 3, 1)],
        )
        self.assertEqual(
            [(i.opcode, i.targets, i.prob) for i in noisy.instructions],
            [
                ("R_Z", (0, 1), None),
                ("X_ERROR", (0, 1), 0.01),
                ("R_X", (2,), None),
                ("Z_ERROR", (2,), 0.01),
                ("H", (0,), None),
                ("DEPOLARIZE1", (0,), 0.002),
                ("DEPOLARIZE1", (0, 1, 2), 0.05),
                ("CX", (0, 1), None),
                ("DEPOLARIZE2", (0, 1), 0.002),
                ("CX", (2, 1), None),
                ("DEPOLARIZE2", (2, 1), 0.002),
                ("X_ERROR", (1,), 0.03),
                ("Z_ERROR", (2,), 0.04),
                ("X_ERROR", (0, 1), 0.01),
                ("M_Z", (0, 1), None),
                ("Z_ERROR", (2,), 0.01),
                ("M_X", (2,), None),
            ],
        )

    def test_zero_rates_add_nothing(self):
        c = bare_circuit()
        self.assertEqual(append_noise_model(c, NoiseParams()), c)

    def test_bad_markers(self):
        c = bare_circuit()
        with self.assertRaises(NoiseMarkerError):
            append_noise_model(c, NoiseParams(), seam_cx_indices=[2])
        with self.assertRaises(NoiseMarkerError):
            append_noise_model(
                c, NoiseParams(), latency_sites=[LatencyMarker((5,), 0)]
            )

    def test_rates_must_be_probabilities(self):
        with self.assertRaises(ValueError):
            NoiseParams(p_local=1.5)
        self.assertTrue(NoiseParams().is_zero)
