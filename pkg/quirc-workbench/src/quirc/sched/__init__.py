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
Pauli-product workloads transpiled onto multi-module line graphs.
"""

from quirc.sched.benchmark import (
    DEFAULT_COMBOS,
    DEFAULT_MODULES,
    GridError,
    GridResult,
    SampleRow,
    SummaryRow,
    benchmark_grid,
    write_sample_csv,
    write_summary_csv,
)
from quirc.sched.modules import ModuleGraph, ModuleGraphError
from quirc.sched.operators import (
    DensityError,
    OperatorSet,
    sample_operator_set,
)
from quirc.sched.order_stats import (
    DomainError,
    expected_order_stats,
    monte_carlo_span,
)
from quirc.sched.transpile import (
    InfeasibleOperatorError,
    LayerSchedule,
    OperatorPath,
    ScheduledOperator,
    ancilla_stats,
    candidate_paths,
    transpile_layers,
)

__all__ = [
    "DEFAULT_COMBOS",
    "DEFAULT_MODULES",
    "DensityError",
    "DomainError",
    "GridError",
    "GridResult",
    "InfeasibleOperatorError",
    "LayerSchedule",
    "ModuleGraph",
    "ModuleGraphError",
    "OperatorPath",
    "OperatorSet",
    "SampleRow",
    "ScheduledOperator",
    "SummaryRow",
    "ancilla_stats",
    "benchmark_grid",
    "candidate_paths",
    "expected_order_stats",
    "monte_carlo_span",
    "sample_operator_set",
    "transpile_layers",
    "write_sample_csv",
    "write_summary_csv",
]
