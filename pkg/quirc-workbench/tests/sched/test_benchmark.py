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
import os
import tempfile
from dataclasses import fields
from unittest import TestCase

from quirc.sched import (
    DensityError,
    GridError,
    SummaryRow,
    benchmark_grid,
    write_sample_csv,
    write_summary_csv,
)

SMALL = dict(n=12, combos=((3, 4), (4, 3)), modules=(1, 2, 3), samples=5)


class TestBenchmarkGrid(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = benchmark_grid(seed=1, **SMALL)

    def test_shape(self):
        self.assertEqual(len(self.grid.samples), 2 * 3 * 5)
        self.assertEqual(len(self.grid.summary), 2 * 3)

    def test_baseline_has_no_reduction(self):
        for p, k in SMALL["combos"]:
            cell = self.grid.cell(p, k, 1)
            self.assertEqual(cell.layer_reduction_matched, 0.0)
            self.assertEqual(cell.ancilla_reduction_ratio, 0.0)

    def test_reproducible(self):
        again = benchmark_grid(seed=1, **SMALL)
        self.assertEqual(again, self.grid)

    def test_workers_do_not_change_results(self):
        parallel = benchmark_grid(seed=1, workers=2, **SMALL)
        self.assertEqual(parallel.summary, self.grid.summary)

    def test_baseline_rows_dropped_when_not_requested(self):
        grid = benchmark_grid(
            n=12, combos=((3, 4),), modules=(2,), samples=2, seed=0
        )
        self.assertEqual({row.M for row in grid.samples}, {2})
        self.assertEqual(len(grid.summary), 1)

    def test_missing_cell(self):
        with self.assertRaises(KeyError):
            self.grid.cell(6, 2, 1)

    def test_invalid_grid(self):
        with self.assertRaises(GridError):
            benchmark_grid(n=12, modules=(5,), combos=((3, 4),), samples=1)
        with self.assertRaises(DensityError):
            benchmark_grid(n=12, modules=(1,), combos=((5, 2),), samples=1)

    def test_csv_tables(self):
        with tempfile.TemporaryDirectory() as tmp:
            samples = os.path.join(tmp, "samples.csv")
            summary = os.path.join(tmp, "summary.csv")
            write_sample_csv(self.grid.samples, samples)
            write_summary_csv(self.grid.summary, summary)
            with open(summary, encoding="utf-8") as handle:
                rows = list(csv.reader(handle))
            with open(samples, encoding="utf-8") as handle:
                self.assertEqual(len(handle.readlines()), 1 + 30)
        self.assertEqual(rows[0], [f.name for f in fields(SummaryRow)])
        self.assertEqual(len(rows), 1 + 6)
        self.assertEqual(rows[1][:3], ["3", "4", "1"])
