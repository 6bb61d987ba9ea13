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
from unittest.mock import patch

from quirc.decoder import AgreementReport
from quirc.harness.config import KINDS, ConfigError, load_config
from quirc.harness.experiments import (
    EXPERIMENTS,
    format_params,
    full_model_comparison,
    run_decoder_check,
    run_ep_sched,
    run_protocol_check,
    run_surface,
    run_threshold,
    run_transpile,
)


def small(kind, *overrides):
    return load_config(kind=kind, env={}, overrides=overrides)


def metrics(result):
    return {(row.params, row.metric): row.value for row in result.rows}


class TestRegistry(TestCase):
    def test_every_kind_registered(self):
        self.assertEqual(sorted(EXPERIMENTS), sorted(KINDS))

    def test_format_params(self):
        self.assertEqual(format_params(d=3, p=0.01), "d=3;p=0.01")
        self.assertEqual(format_params(), "")


class TestSchedulingExperiments(TestCase):
    def test_transpile(self):
        result = run_transpile(
            small(
                "transpile", "n=12", "combos=3x4", "modules=1,2", "samples=3"
            )
        )
        self.assertEqual(
            sorted(result.tables),
            ["transpile_samples.csv", "transpile_summary.csv"],
        )
        self.assertTrue(
            any(row.params == "P=3;K=4;M=2" for row in result.rows)
        )
        self.assertEqual(result.checks, [])

    def test_ep_sched(self):
        result = run_ep_sched(
            small(
                "ep-sched",
                "topologies=ring,ruche-8-4",
                "ep_modules=2,4",
                "samples=5",
            )
        )
        values = metrics(result)
        for kind in ("ring", "ruche-8-4"):
            for m in (2, 4):
                params = format_params(topology=kind, M=m)
                self.assertGreaterEqual(values[(params, "mean_ep_layers")], 1)
                self.assertGreater(values[(params, "p_latency")], 0)
        checks = {check.name: check for check in result.checks}
        self.assertTrue(checks["dumbbell layers"].passed)
        self.assertTrue(checks["ruche-8-4 mean layers"].passed)
        self.assertIn("thickness-2 vs thickness-1 at M=4", checks)
        self.assertIn("ep_layers.csv", result.tables)

    def test_protocol_check(self):
        result = run_protocol_check(small("protocol-check", "nu_max=4"))
        self.assertEqual(result.failed, [])
        self.assertEqual(len(result.checks), 4)
        values = metrics(result)
        self.assertEqual(values[("nu=3", "bell_ok")], 1.0)
        self.assertEqual(values[("", "remote_cx_ok")], 1.0)
        self.assertAlmostEqual(
            values[("nu=6;p_spam=0.01", "p_remote_x")], 0.06
        )


class TestSurfaceExperiments(TestCase):
    def test_noiseless_surface(self):
        result = run_surface(
            small(
                "surface", "distances=3", "p_spam=0", "p_local=0", "shots=64"
            )
        )
        values = metrics(result)
        self.assertEqual(values[("d=3", "cables_per_seam")], 3.0)
        self.assertEqual(values[("d=3", "eps_per_round")], 6.0)
        (check,) = result.checks
        self.assertEqual(check.name, "noiseless d=3")
        self.assertTrue(check.passed)

    def test_threshold_rows(self):
        result = run_threshold(
            small(
                "threshold",
                "distances=3,5",
                "grid=0.01,0.05",
                "shots=100",
                "bootstrap=5",
            )
        )
        values = metrics(result)
        for d in (3, 5):
            for p in (0.01, 0.05):
                params = format_params(sweep="p_local", d=d, p=p)
                self.assertIn((params, "logical_error_rate"), values)
                self.assertIn((params, "failures"), values)
        crossing = format_params(sweep="p_local", d_small=3, d_large=5)
        self.assertIn((crossing, "crossing"), values)

    def test_full_model_rows(self):
        result = full_model_comparison(
            small(
                "full-model",
                "distances=3",
                "full_p_local=0.01",
                "shots=50",
            )
        )
        params = format_params(d=3, p_local=0.01, nu=6)
        values = metrics(result)
        self.assertIn((params, "local_rate"), values)
        self.assertIn((params, "full_rate"), values)
        self.assertTrue(
            (params, "rate_ratio") in values
            or (params, "rate_ratio_lower") in values
        )
        self.assertEqual(result.checks, [])

    def test_decoder_check_rows(self):
        result = run_decoder_check(
            small("decoder-check", "distances=3", "pair_budget=10")
        )
        values = metrics(result)
        self.assertGreaterEqual(values[("d=3", "single_agreement")], 0.0)
        self.assertLessEqual(values[("d=3", "pair_agreement")], 1.0)
        self.assertEqual(len(result.checks), 2)

    def test_decoder_check_enforces_union_find(self):
        report = AgreementReport(4, 4, 10, 9, 0)
        with patch(
            "quirc.harness.experiments.oracle_agreement",
            return_value=report,
        ) as agreement:
            result = run_decoder_check(
                small("decoder-check", "distances=3", "pair_budget=10")
            )
        self.assertEqual(agreement.call_count, 2)
        self.assertEqual(
            agreement.call_args_list[0].kwargs, {"exact_limit": 0}
        )
        passed = {check.name: check.passed for check in result.checks}
        self.assertTrue(passed["single-fault agreement"])
        self.assertFalse(passed["two-fault agreement"])
        self.assertIn(("d=3", "exact_pair_agreement"), metrics(result))

    def test_decoder_check_needs_noise(self):
        with self.assertRaises(ConfigError) as caught:
            run_decoder_check(
                small("decoder-check", "p_spam=0", "p_local=0")
            )
        self.assertEqual(caught.exception.fields, ("p_local",))
