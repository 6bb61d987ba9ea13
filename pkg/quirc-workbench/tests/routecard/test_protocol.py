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

from math import exp
from unittest import TestCase, mock

from quirc.routecard import (
    bell_correction,
    bell_via_graph_state,
    derive_latency_error,
    derive_remote_errors,
    remote_cx_check,
)


class TestBellViaGraphState(TestCase):
    def test_every_branch_up_to_twelve(self):
        for nu in range(2, 13):
            with self.subTest(nu=nu):
                verdict = bell_via_graph_state(nu)
                self.assertEqual(len(verdict.branches), 2 ** (nu - 2))
                self.assertTrue(verdict.ok, verdict.failing_branch)
                self.assertIsNone(verdict.failing_branch)

    def test_single_branch(self):
        verdict = bell_via_graph_state(6, [1, 0, 1, 1])
        self.assertEqual(len(verdict.branches), 1)
        branch = verdict.branches[0]
        self.assertEqual(branch.outcomes, (1, 0, 1, 1))
        self.assertEqual((branch.xx, branch.zz), (1, 1))

    def test_correction(self):
        self.assertEqual(bell_correction(2, []), (0, 0))
        self.assertEqual(bell_correction(3, [1]), (1, 1))
        self.assertEqual(bell_correction(4, [1, 0]), (1, 0))
        self.assertEqual(bell_correction(4, [0, 1]), (1, 1))
        self.assertEqual(bell_correction(6, [1, 1, 1, 1]), (0, 0))

    def test_wrong_correction_is_caught(self):
        with mock.patch(
            "quirc.routecard.protocol.bell_correction", return_value=(0, 0)
        ):
            verdict = bell_via_graph_state(4)
        self.assertFalse(verdict.ok)
        self.assertIsNotNone(verdict.failing_branch)

    def test_invalid_arguments(self):
        for nu in (1, 17):
            with self.subTest(nu=nu):
                with self.assertRaises(ValueError):
                    bell_via_graph_state(nu)
        with self.assertRaises(ValueError):
            bell_via_graph_state(5, [0, 1])


class TestRemoteCX(TestCase):
    def test_every_pauli_and_branch(self):
        verdict = remote_cx_check()
        self.assertEqual(len(verdict.table), 16 * 4)
        self.assertTrue(verdict.ok, verdict.mismatches())
        self.assertEqual(verdict.mismatches(), ())
        branches = {row.branch for row in verdict.table}
        self.assertEqual(branches, {(0, 0), (0, 1), (1, 0), (1, 1)})

    def test_control_x_spreads_to_target(self):
        rows = {
            (row.branch, row.input): row for row in remote_cx_check().table
        }
        row = rows[((0, 0), "+X_")]
        self.assertEqual(row.expected, "+XX")
        self.assertEqual(row.output, "+XX")
        self.assertEqual(rows[((1, 1), "+_Z")].expected, "+ZZ")


class TestDerivedRates(TestCase):
    def test_remote_errors(self):
        for nu, p_spam, expected in (
            (6, 0.01, (0.06, 0.03)),
            (5, 0.01, (0.05, 0.025)),
            (2, 0.0, (0.0, 0.0)),
            (400, 0.01, (1.0, 1.0)),
        ):
            with self.subTest(nu=nu, p_spam=p_spam):
                p_x, p_z = derive_remote_errors(nu, p_spam)
                self.assertAlmostEqual(p_x, expected[0])
                self.assertAlmostEqual(p_z, expected[1])

    def test_remote_errors_invalid(self):
        with self.assertRaises(ValueError):
            derive_remote_errors(1, 0.01)
        with self.assertRaises(ValueError):
            derive_remote_errors(6, 1.5)

    def test_latency_error(self):
        self.assertAlmostEqual(derive_latency_error(1), 1 - exp(-0.02))
        self.assertAlmostEqual(derive_latency_error(1), 0.0198, places=4)
        self.assertEqual(derive_latency_error(0), 0.0)
        self.assertAlmostEqual(
            derive_latency_error(1, t_ep=1e-7, t1=1e-4), 0.001, places=5
        )
        self.assertAlmostEqual(
            derive_latency_error(1, printed_formula=True), exp(-0.02)
        )

    def test_latency_error_invalid(self):
        with self.assertRaises(ValueError):
            derive_latency_error(1, t_ep=0)
        with self.assertRaises(ValueError):
            derive_latency_error(-1)
