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

from fractions import Fraction
from unittest import TestCase

import numpy as np

from quirc.sched import (
    DensityError,
    DomainError,
    InfeasibleOperatorError,
    ModuleGraph,
    ModuleGraphError,
    OperatorSet,
    ancilla_stats,
    candidate_paths,
    expected_order_stats,
    monte_carlo_span,
    sample_operator_set,
    transpile_layers,
)

NESTED = OperatorSet.from_lists(6, [(1, 6), (2, 5), (3, 4)])


class TestOperatorSet(TestCase):
    def test_sample_partitions_qubits(self):
        operators = sample_operator_set(24, 3, 8, np.random.default_rng(0))
        self.assertEqual((operators.p, operators.k), (3, 8))
        qubits = sorted(q for op in operators.operators for q in op)
        self.assertEqual(qubits, list(range(1, 25)))

    def test_invalid(self):
        rng = np.random.default_rng(0)
        with self.assertRaises(DensityError):
            sample_operator_set(24, 5, 5, rng)
        with self.assertRaises(DensityError):
            OperatorSet.from_lists(4, [(1, 2), (2, 3)])
        with self.assertRaises(DensityError):
            OperatorSet.from_lists(4, [(1, 5)])


class TestModuleGraph(TestCase):
    def test_layout(self):
        g = ModuleGraph(24, 4)
        self.assertEqual(g.line_length, 6)
        self.assertEqual(g.module_of(7), 1)
        self.assertEqual(g.local_index(7), 1)
        self.assertEqual(g.connectors(0), (2, 4))
        self.assertEqual(g.connectors(3), (20, 22))

    def test_single_qubit_modules(self):
        g = ModuleGraph(24, 24)
        self.assertEqual(g.connectors(5), (6, 6))

    def test_invalid(self):
        with self.assertRaises(ModuleGraphError):
            ModuleGraph(24, 5)
        with self.assertRaises(ModuleGraphError):
            ModuleGraph(24, 4).module_of(25)


class TestTranspile(TestCase):
    def test_nested_operators_on_one_line(self):
        schedule = transpile_layers(NESTED, ModuleGraph(6, 1))
        self.assertEqual(schedule.num_layers, 3)
        self.assertTrue(schedule.check(NESTED))
        mean, lengths = ancilla_stats(schedule)
        self.assertEqual(lengths, [6, 4, 2])
        self.assertEqual(mean, 4)

    def test_nested_operators_on_two_modules(self):
        schedule = transpile_layers(NESTED, ModuleGraph(6, 2))
        self.assertTrue(schedule.check(NESTED))
        self.assertLessEqual(schedule.num_layers, 3)
        _, with_hops = ancilla_stats(schedule, with_hops=True)
        _, plain = ancilla_stats(schedule)
        self.assertEqual([h - p for h, p in zip(with_hops, plain)], [1, 1, 1])

    def test_one_qubit_per_module_needs_one_layer(self):
        rng = np.random.default_rng(7)
        for p, k in ((3, 8), (4, 6), (6, 4), (8, 3)):
            with self.subTest(p=p, k=k):
                operators = sample_operator_set(24, p, k, rng)
                schedule = transpile_layers(operators, ModuleGraph(24, 24))
                self.assertEqual(schedule.num_layers, 1)
                self.assertTrue(schedule.check(operators))

    def test_single_module_operator_has_one_path(self):
        paths = candidate_paths((2, 4), ModuleGraph(6, 1))
        self.assertEqual(len(paths), 1)
        self.assertEqual(paths[0].vertices, frozenset({2, 3, 4}))
        self.assertEqual(paths[0].hops, 0)

    def test_paths_visit_modules_in_order(self):
        paths = candidate_paths((1, 7, 13), ModuleGraph(18, 3))
        self.assertEqual(len(paths), 4)
        for path in paths:
            self.assertEqual(path.modules, (0, 1, 2))
            self.assertEqual(path.hops, 2)
            self.assertTrue({7, 8, 9, 10} <= path.vertices)
            self.assertFalse({5, 6, 11, 12} & path.vertices)
        self.assertEqual(min(path.length for path in paths), 8)

    def test_overweight_operator(self):
        with self.assertRaises(InfeasibleOperatorError):
            candidate_paths(tuple(range(1, 10)), ModuleGraph(12, 1))

    def test_size_mismatch(self):
        with self.assertRaises(ValueError):
            transpile_layers(NESTED, ModuleGraph(12, 2))


class TestOrderStats(TestCase):
    def test_expected_values(self):
        e_max, e_min, e_span = expected_order_stats(24, 3)
        self.assertEqual(e_max, Fraction(75, 4))
        self.assertEqual(e_min, Fraction(21, 4))
        self.assertEqual(e_span, Fraction(27, 2))
        self.assertEqual(expected_order_stats(24, 1)[2], 1)
        self.assertEqual(expected_order_stats(24, 24)[2], 24)

    def test_domain(self):
        for k in (0, 25):
            with self.subTest(k=k):
                with self.assertRaises(DomainError):
                    expected_order_stats(24, k)

    def test_monte_carlo_agrees(self):
        for k in (2, 3, 6, 12):
            with self.subTest(k=k):
                mean, stderr = monte_carlo_span(
                    24, k, 20_000, np.random.default_rng(k)
                )
                self.assertLess(stderr, 0.1)
                self.assertAlmostEqual(
                    mean,
                    float(expected_order_stats(24, k)[2]),
                    delta=4 * stderr,
                )
