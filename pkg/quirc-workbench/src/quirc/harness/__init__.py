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
Experiment harness: layered configuration, span-aware logging, tracing,
and the runner behind the ``quirc`` command.

.. code:: sh

    quirc span --seed 7 --out results
    QUIRC_TRACES_EXPORTER=console quirc protocol-check
"""

from quirc.harness.config import (
    KINDS,
    ConfigError,
    ExperimentConfig,
    load_config,
)
from quirc.harness.experiments import (
    EXPERIMENTS,
    Check,
    ExperimentResult,
    ResultRow,
    full_model_comparison,
    reproduce_table1,
    reproduce_thresholds,
)
from quirc.harness.runner import RunReport, run

__all__ = [
    "EXPERIMENTS",
    "KINDS",
    "Check",
    "ConfigError",
    "ExperimentConfig",
    "ExperimentResult",
    "ResultRow",
    "RunReport",
    "full_model_comparison",
    "load_config",
    "reproduce_table1",
    "reproduce_thresholds",
    "run",
]
