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

import csv
import json
import os
import shutil
import tempfile
from unittest import TestCase, mock

from quirc.harness.config import load_config
from quirc.harness.experiments import Check, ExperimentResult
from quirc.harness.runner import CSV_HEADER, format_value, run


class RunnerTestBase(TestCase):
    def setUp(self):
        self.out = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.out, ignore_errors=True)

    def config(self, kind, *overrides, **kwargs):
        return load_config(
            kind=kind,
            env={},
            overrides=overrides,
            out=os.path.join(self.out, kwargs.pop("subdir", "run")),
            **kwargs
        )


class TestRunSpan(RunnerTestBase):
    def setUp(self):
        super().setUp()
        self.span = self.config(
            "span", "span_k=2,3", "span_trials=2000", seed=7
        )

    def test_outputs(self):
        report = run(self.span)
        self.assertEqual(
            [os.path.basename(path) for path in report.paths],
            ["span.csv", "span.json"],
        )
        with open(report.paths[0], encoding="utf-8") as handle:
            rows = list(csv.reader(handle))
        self.assertEqual(tuple(rows[0]), CSV_HEADER)
        self.assertEqual(len(rows), 9)
        self.assertEqual(
            {row[2] for row in rows[1:]},
            {"e_max", "e_min", "e_span_analytic", "e_span_mc"},
        )
        self.assertTrue(
            all(row[6] == self.span.config_hash() for row in rows[1:])
        )
        with open(report.paths[1], encoding="utf-8") as handle:
            summary = json.load(handle)
        self.assertEqual(summary["seed"], 7)
        self.assertEqual(summary["config_hash"], self.span.config_hash())
        self.assertEqual(len(summary["checks"]), 2)
        self.assertEqual(summary["passed"], report.passed)

    def test_checks_pass(self):
        self.assertTrue(run(self.span).passed)

    def test_csv_reproducible(self):
        first = run(self.span).paths[0]
        other = self.config(
            "span",
            "span_k=2,3",
            "span_trials=2000",
            seed=7,
            subdir="again",
        )
        second = run(other).paths[0]
        with open(first, "rb") as a, open(second, "rb") as b:
            self.assertEqual(a.read(), b.read())

    def test_analytic_rows(self):
        report = run(self.span)
        rows = {
            (row.params, row.metric): row.value for row in report.result.rows
        }
        self.assertEqual(rows[("N=24;k=2", "e_max")], 50 / 3)
        self.assertEqual(rows[("N=24;k=2", "e_min")], 22 / 3)


class TestRunFailures(RunnerTestBase):
    def test_partial_files_removed(self):
        def write_ok(path):
            with open(path, "w", encoding="utf-8") as handle:
                handle.write("ok\n")

        def write_broken(path):
            with open(path, "w", encoding="utf-8") as handle:
                handle.write("half")
            raise OSError("disk full")

        result = ExperimentResult(
            tables={"a.csv": write_ok, "b.csv": write_broken}
        )
        config = self.config("span")
        with mock.patch.dict(
            "quirc.harness.runner.EXPERIMENTS",
            {"span": lambda config: result},
        ):
            with self.assertRaises(OSError):
                run(config)
        self.assertEqual(os.listdir(config.out), [])

    def test_failed_check_reported(self):
        result = ExperimentResult(
            checks=[Check("always", False, 1.0, 0.0, 0.5)]
        )
        config = self.config("span")
        with mock.patch.dict(
            "quirc.harness.runner.EXPERIMENTS",
            {"span": lambda config: result},
        ):
            with self.assertLogs("quirc.harness.runner", "ERROR"):
                report = run(config)
        self.assertFalse(report.passed)
        self.assertEqual([c.name for c in report.failed_checks], ["always"])

    def test_unenforced_check_passes(self):
        result = ExperimentResult(checks=[Check("reported", None, 77.8)])
        config = self.config("span")
        with mock.patch.dict(
            "quirc.harness.runner.EXPERIMENTS",
            {"span": lambda config: result},
        ):
            self.assertTrue(run(config).passed)


class TestFormatValue(TestCase):
    def test_format(self):
        self.assertEqual(format_value(None), "")
        self.assertEqual(format_value(0.1 + 0.2), "0.3")
        self.assertEqual(format_value(1 / 3), "0.3333333333")
        self.assertEqual(format_value("out-of-range"), "out-of-range")
