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
Runs one experiment and writes ``<kind>.csv``, ``<kind>.json`` and any
extra tables into the output directory. Files written by a failed run are
removed before the error propagates.
"""

import csv
import json
import os
import time
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from logging import getLogger
from typing import List

from quirc.harness.config import ExperimentConfig
from quirc.harness.experiments import EXPERIMENTS, Check, ExperimentResult
from quirc.harness.logs import experiment_scope
from quirc.harness.tracing import get_tracer
from quirc.version import __version__

logger = getLogger(__name__)

CSV_HEADER = (
    "kind",
    "params",
    "metric",
    "value",
    "half_width",
    "seed",
    "config_hash",
)


@dataclass(frozen=True)
class RunReport:
    config: ExperimentConfig
    result: ExperimentResult
    paths: List[str]
    runtime_seconds: float

    @property
    def passed(self) -> bool:
        return not self.result.failed

    @property
    def failed_checks(self) -> List[Check]:
        return self.result.failed


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return "{:.10g}".format(value)
    return str(value)


def write_rows_csv(result: ExperimentResult, config_hash: str, path: str):
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in result.rows:
            writer.writerow(
                [
                    row.kind,
                    row.params,
                    row.metric,
                    format_value(row.value),
                    format_value(row.half_width),
                    row.seed,
                    config_hash,
                ]
            )


def _summary(config, result, runtime_seconds) -> dict:
    return {
        "config": asdict(config),
        "seed": config.seed,
        "config_hash": config.config_hash(),
        "version": __version__,
        "rows": [asdict(row) for row in result.rows],
        "checks": [asdict(check) for check in result.checks],
        "passed": not result.failed,
        "runtime_seconds": runtime_seconds,
        "finished_at": datetime.now(timezone.utc).isoformat(),
    }


def _remove(paths):
    for path in paths:
        try:
            os.remove(path)
        except OSError:
            logger.warning("Could not remove partial output %s", path)


def run(config: ExperimentConfig) -> RunReport:
    experiment = EXPERIMENTS[config.kind]
    config_hash = config.config_hash()
    os.makedirs(config.out, exist_ok=True)
    written: List[str] = []
    start = time.perf_counter()
    attributes = {
        "quirc.kind": config.kind,
        "quirc.seed": str(config.seed),
        "quirc.config_hash": config_hash,
    }
    with experiment_scope(config.kind), get_tracer().start_as_current_span(
        "quirc.run", attributes=attributes
    ):
        try:
            result = experiment(config)
            runtime = time.perf_counter() - start
            stem = config.kind.replace("-", "_")
            for name, writer in sorted(result.tables.items()):
                path = os.path.join(config.out, name)
                written.append(path)
                writer(path)
            path = os.path.join(config.out, stem + ".csv")
            written.append(path)
            write_rows_csv(result, config_hash, path)
            path = os.path.join(config.out, stem + ".json")
            written.append(path)
            with open(path, "w", encoding="utf-8") as handle:
                json.dump(_summary(config, result, runtime), handle, indent=2)
                handle.write("\n")
        except BaseException:
            _remove(p for p in written if os.path.exists(p))
            raise
    for check in result.failed:
        logger.error(
            "Check failed: %s (value %s, target %s +- %s)",
            check.name,
            check.value,
            check.target,
            check.tolerance,
        )
    logger.info(
        "%s finished in %.1fs with %d rows",
        config.kind,
        runtime,
        len(result.rows),
    )
    return RunReport(config, result, written, runtime)
