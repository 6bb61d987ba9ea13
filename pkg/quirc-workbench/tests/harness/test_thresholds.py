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
from flaky import flaky

from quirc.circuit.noise import NoiseParams
from quirc.harness.thresholds import (
    OUT_OF_RANGE,
    crossing_point,
    estimate_crossing,
    pair_crossings,
    point_seed,
    sweep_params,
)


class TestCrossingPoint(TestCase):
    def test_log_interpolation(self):
        value = crossing_point((0.01, 0.04), (0.1, 0.2), (0.05, 0.4))
        self.assertAlmostEqual(value, 0.02)

    def test_touching_zero(self):
        value = crossing_point(
            (0.01, 0.02, 0.04), (0.1, 0.2, 0.3), (0.05, 0.2, 0.5)
        )
        self.assertAlmostEqual(value, 0.02)

    def test_no_crossing(self):
        self.assertIsNone(
            crossing_point((0.01, 0.02), (0.2, 0.4), (0.1, 0.3))
        )

    def test_zero_rates_skipped(self):
        value = crossing_point(
            (0.005, 0.01, 0.04), (0.0, 0.1, 0.2), (0.0, 0.05, 0.4)
        )
        self.assertAlmostEqual(value, 0.02)


class TestEstimateCrossing(TestCase):
    @flaky(max_runs=3, min_passes=1)
    def test_bootstrap_interval(self):
        estimate = estimate_crossing(
            (0.01, 0.04),
            (100, 200),
            (50, 400),
            1000,
            np.random.default_rng(),
            replicates=100,
        )
        self.assertTrue(estimate.in_range)
        self.assertEqual(estimate.status, "ok")
        self.assertAlmostEqual(estimate.value, 0.02)
        self.assertLess(estimate.low, estimate.value)
        self.assertGreater(estimate.high, estimate.value)
        self.assertEqual(estimate.replicates, 100)

    def test_out_of_range(self):
        estimate = estimate_crossing(
            (0.01, 0.02),
            (200, 400),
            (100, 300),
            1000,
            np.random.default_rng(1),
        )
        self.assertFalse(estimate.in_range)
        self.assertEqual(estimate.status, OUT_OF_RANGE)
        self.assertIsNone(estimate.low)

    def test_pairs_of_consecutive_distances(self):
        failures = {7: (10, 90), 3: (50, 60), 5: (30, 80)}
        crossings = pair_crossings(
            (0.01, 0.04), failures, 1000, np.random.default_rng(2), 10
        )
        self.assertEqual(list(crossings), [(3, 5), (5, 7)])
        for estimate in crossings.values():
            self.assertTrue(estimate.in_range)


class TestSweepHelpers(TestCase):
    def test_sweep_params(self):
        self.assertEqual(
            sweep_params("p_local", 0.02, 0.01),
            NoiseParams(p_spam=0.01, p_local=0.02),
        )
        remote = sweep_params("p_remote", 0.2, 0.01)
        self.assertEqual((remote.p_remote_x, remote.p_remote_z), (0.2, 0.1))
        self.assertEqual(remote.p_local, 0.0)
        self.assertEqual(sweep_params("p_latency", 0.1, 0.0).p_latency, 0.1)
        with self.assertRaises(ValueError):
            sweep_params("p_other", 0.1, 0.0)

    def test_point_seed(self):
        self.assertEqual(point_seed(5, 3, 1), point_seed(5, 3, 1))
        self.assertNotEqual(point_seed(5, 3, 1), point_seed(5, 5, 1))
        self.assertLess(point_seed((1 << 64) - 1, 7), 1 << 63)
