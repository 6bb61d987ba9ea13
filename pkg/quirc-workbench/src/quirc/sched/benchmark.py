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
Layer and ancilla-length benchmark over a ``(P, K) x M`` grid.

Every ``(P, K, sample)`` draws one operator set from its own generator and
schedules it for every module count, so reductions relative to ``M = 1``
compare matched samples. Reductions are percentages under two
definitions: ``matched`` averages ``1 - x_M / x_1`` per sample, ``ratio``
is ``1 - mean(x_M) / mean(x_1)``.
"""

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from logging import getLogger
from statistics import fmean
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from quirc.sched.modules import ModuleGraph
from quirc.sched.operators import DensityError, sample_operator_set
from quirc.sched.transpile import ancilla_stats, transpile_layers

logger = getLogger(__name__)

DEFAULT_N = 24
DEFAULT_COMBOS = ((3, 8), (4, 6), (6, 4), (8, 3))
DEFAULT_MODULES = (1, 2, 3, 4, 6, 8, 12)
SEED_MASK = (1 << 64) - 1


class GridError(ValueError):
    """Raised when a module count does not divide ``N``."""


@dataclass(frozen=True)
class SampleRow:
    P: int
    K: int
    M: int
    sample: int
    layers: int
    mean_ancilla_len: float
    mean_ancilla_len_hops: float


@dataclass(frozen=True)
class SummaryRow:
    P: int
    K: int
    M: int
    mean_layers: float
    mean_ancilla_len: float
    mean_ancilla_len_hops: float
    layer_reduction_matched: float
    layer_reduction_ratio: float
    ancilla_reduction_matched: float
    ancilla_reduction_ratio: float


@dataclass(frozen=True)
class GridResult:
    samples: Tuple[SampleRow, ...]
    summary: Tuple[SummaryRow, ...]

    def cell(self, p: int, k: int, m: int) -> SummaryRow:
        for row in self.summary:
            if (row.P, row.K, row.M) == (p, k, m):
                return row
        raise KeyError((p, k, m))


def sample_rng(
    seed: int, p: int, k: int, sample: int
) -> np.random.Generator:
    entropy = [seed & SEED_MASK, p, k, sample]
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(entropy))
    )


def _run_sample(job) -> List[SampleRow]:
    n, p, k, sample, seed, modules = job
    operators = sample_operator_set(n, p, k, sample_rng(seed, p, k, sample))
    rows = []
    for m in modules:
        schedule = transpile_layers(operators, ModuleGraph(n, m))
        mean_len, _ = ancilla_stats(schedule)
        mean_hops, _ = ancilla_stats(schedule, with_hops=True)
        rows.append(
            SampleRow(
                p, k, m, sample, schedule.num_layers, mean_len, mean_hops
            )
        )
    return rows


def _reduction(values: Sequence[float], baseline: Sequence[float]):
    matched = fmean(1 - v / b for v, b in zip(values, baseline))
    ratio = 1 - fmean(values) / fmean(baseline)
    return 100 * matched, 100 * ratio


def summarize(
    rows: Iterable[SampleRow], modules: Sequence[int]
) -> Tuple[SummaryRow, ...]:
    cells: Dict[tuple, List[SampleRow]] = {}
    for row in rows:
        cells.setdefault((row.P, row.K, row.M), []).append(row)
    summary = []
    combos = list(dict.fromkeys((p, k) for p, k, _ in cells))
    for p, k in combos:
        base = sorted(cells[(p, k, 1)], key=lambda r: r.sample)
        for m in modules:
            cell = sorted(cells[(p, k, m)], key=lambda r: r.sample)
            layers = [r.layers for r in cell]
            lengths = [r.mean_ancilla_len for r in cell]
            layer_matched, layer_ratio = _reduction(
                layers, [r.layers for r in base]
            )
            ancilla_matched, ancilla_ratio = _reduction(
                lengths, [r.mean_ancilla_len for r in base]
            )
            summary.append(
                SummaryRow(
                    p,
                    k,
                    m,
                    fmean(layers),
                    fmean(lengths),
                    fmean(r.mean_ancilla_len_hops for r in cell),
                    layer_matched,
                    layer_ratio,
                    ancilla_matched,
                    ancilla_ratio,
                )
            )
    return tuple(summary)


def benchmark_grid(
    n: int = DEFAULT_N,
    combos: Sequence[Tuple[int, int]] = DEFAULT_COMBOS,
    modules: Sequence[int] = DEFAULT_MODULES,
    samples: int = 100,
    seed: int = 0,
    workers: int = 1,
) -> GridResult:
    for m in modules:
        if m < 1 or n % m:
            raise GridError(
                "Module count {} does not divide N={}".format(m, n)
            )
    for p, k in combos:
        if p * k != n:
            raise DensityError(
                "Combo (P={}, K={}) does not cover N={}".format(p, k, n)
            )
    scheduled = tuple(sorted(set(modules) | {1}))
    jobs = [
        (n, p, k, sample, seed, scheduled)
        for p, k in combos
        for sample in range(samples)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_sample, jobs))
    else:
        parts = [_run_sample(job) for job in jobs]
    rows = tuple(row for part in parts for row in part)
    logger.info(
        "Benchmarked %d combos x %d module counts x %d samples",
        len(combos),
        len(scheduled),
        samples,
    )
    kept = tuple(row for row in rows if row.M in modules)
    return GridResult(kept, summarize(rows, modules))


def _write(rows, row_type, path):
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow([f.name for f in fields(row_type)])
        for row in rows:
            writer.writerow(
                [
                    "{:.6f}".format(v) if isinstance(v, float) else v
                    for v in astuple(row)
                ]
            )


def write_sample_csv(rows: Iterable[SampleRow], path: str):
    _write(rows, SampleRow, path)


def write_summary_csv(rows: Iterable[SummaryRow], path: str):
    _write(rows, SummaryRow, path)
