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

from quirc.circuit import NoiseParams, reference_sample
from quirc.decoder import build_detector_graph
from quirc.latsurg import (
    InvalidRoundsError,
    build_layout,
    build_merge_circuit,
    build_merge_skeleton,
    clopper_pearson_upper,
    logical_error_rate,
    wilson_half_width,
)


class TestMergeCircuit(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.layout = build_layout(3)
        cls.skeleton = build_merge_skeleton(cls.layout)

    def test_rounds_default_to_distance(self):
        self.assertEqual(self.skeleton.rounds, 3)
        self.assertEqual(len(self.skeleton.circuit.observables), 1)

    def test_noiseless_detectors_are_deterministic(self):
        record = reference_sample(self.skeleton.circuit)
        self.assertEqual(len(record), self.skeleton.circuit.num_measurements)

    def test_seam_layers_are_cx(self):
        instructions = self.skeleton.circuit.instructions
        self.assertTrue(self.skeleton.seam_cx_indices)
        for index in self.skeleton.seam_cx_indices:
            self.assertEqual(instructions[index].opcode, "CX")

    def test_latency_markers(self):
        self.assertEqual(len(self.skeleton.latency_markers), 1)
        marker = self.skeleton.latency_markers[0]
        self.assertEqual(marker.position, self.skeleton.round_starts[0])
        self.assertEqual(len(marker.qubits), self.layout.num_data)
        per_round = build_merge_skeleton(self.layout, latency_once=False)
        self.assertEqual(
            [m.position for m in per_round.latency_markers],
            list(per_round.round_starts),
        )

    def test_noise_keeps_detectors(self):
        noisy = build_merge_circuit(
            self.layout,
            NoiseParams(p_spam=0.01, p_local=0.001, p_latency=0.01),
        )
        self.assertEqual(noisy.detectors, self.skeleton.circuit.detectors)
        self.assertGreater(
            len(noisy.instructions), len(self.skeleton.circuit.instructions)
        )

    def test_full_noise_is_graphlike(self):
        noisy = build_merge_circuit(
            self.layout,
            NoiseParams(
                p_spam=0.01,
                p_local=0.001,
                p_remote_x=0.06,
                p_remote_z=0.03,
                p_latency=0.02,
            ),
        )
        graph = build_detector_graph(noisy)
        self.assertEqual(graph.num_detectors, len(noisy.detectors))
        self.assertTrue(graph.edges)

    def test_invalid_rounds(self):
        with self.assertRaises(InvalidRoundsError):
            build_merge_skeleton(self.layout, rounds=0)


class TestLogicalErrorRate(TestCase):
    def test_noiseless_rate_is_zero(self):
        rate = logical_error_rate(build_layout(3), NoiseParams(), 256, seed=4)
        self.assertEqual(rate.failures, 0)
        self.assertEqual(rate.rate, 0.0)
        self.assertGreater(rate.upper_bound, 0.0)

    def test_same_seed_same_failures(self):
        params = NoiseParams(p_spam=0.02, p_local=0.02)
        first = logical_error_rate(build_layout(3), params, 200, seed=9)
        second = logical_error_rate(build_layout(3), params, 200, seed=9)
        self.assertEqual(first, second)

    def test_heavy_noise_fails(self):
        rate = logical_error_rate(
            build_layout(3), NoiseParams(p_spam=0.05, p_local=0.05), 400, 2
        )
        self.assertGreater(rate.failures, 0)
        self.assertLess(rate.rate, 0.6)

    def test_grid_noise_decodes(self):
        rate = logical_error_rate(
            build_layout(3), NoiseParams(p_local=0.02), 300, seed=5
        )
        self.assertEqual(rate.shots, 300)
        self.assertLess(rate.rate, 0.5)

    def test_intervals(self):
        self.assertAlmostEqual(
            clopper_pearson_upper(0, 1000), 1 - 0.05 ** (1 / 1000), places=9
        )
        self.assertEqual(clopper_pearson_upper(5, 5), 1.0)
        self.assertEqual(wilson_half_width(0, 0), 0.0)
        self.assertGreater(wilson_half_width(10, 100), 0.05)
