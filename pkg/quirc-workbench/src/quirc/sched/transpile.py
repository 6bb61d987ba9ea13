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
Greedy first-fit layering of Pauli-product measurements.

An operator's ancilla path visits its modules one after another and, inside
each module, moves forward along the line. Modules are visited in
ascending order, so the lowest module starts the path and the highest ends
it. The first and last modules are entered or left through one connector,
every module in between through both. Each touched module then occupies
the inclusive span of its operator qubits and the connectors it uses. Only
the connector choice at the two ends changes the occupied vertices, so those
choices are all that the search enumerates.
"""

from dataclasses import dataclass
from itertools import product
from logging import getLogger
from statistics import fmean
from typing import Dict, FrozenSet, List, Sequence, Tuple

from quirc.sched.modules import ModuleGraph
from quirc.sched.operators import OperatorSet

logger = getLogger(__name__)

MAX_OPERATOR_WEIGHT = 8


class InfeasibleOperatorError(RuntimeError):
    """Raised when an operator has no path even on an empty layer."""


@dataclass(frozen=True)
class OperatorPath:
    modules: Tuple[int, ...]
    vertices: FrozenSet[int]
    hops: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def length_with_hops(self) -> int:
        return len(self.vertices) + self.hops


@dataclass(frozen=True)
class ScheduledOperator:
    index: int
    qubits: Tuple[int, ...]
    path: OperatorPath


@dataclass(frozen=True)
class LayerSchedule:
    layers: Tuple[Tuple[ScheduledOperator, ...], ...]

    @property
    def num_layers(self) -> int:
        return len(self.layers)

    def operators(self) -> List[ScheduledOperator]:
        """All scheduled operators in operator-index order."""
        return sorted(
            (op for layer in self.layers for op in layer),
            key=lambda op: op.index,
        )

    def check(self, operators: OperatorSet) -> bool:
        """Disjoint paths per layer, each operator exactly once, full cover."""
        for layer in self.layers:
            used: set = set()
            for op in layer:
                if used & op.path.vertices:
                    return False
                used |= op.path.vertices
        scheduled = self.operators()
        if [op.index for op in scheduled] != list(range(operators.p)):
            return False
        return all(
            op.qubits == operators.operators[op.index]
            and set(op.qubits) <= op.path.vertices
            for op in scheduled
        )


def _span(vertices: Sequence[int]) -> range:
    return range(min(vertices), max(vertices) + 1)


def candidate_paths(
    qubits: Sequence[int], g: ModuleGraph
) -> List[OperatorPath]:
    """Every distinct path class, in enumeration order."""
    if len(qubits) > MAX_OPERATOR_WEIGHT:
        raise InfeasibleOperatorError(
            "Operator weight {} exceeds {}".format(
                len(qubits), MAX_OPERATOR_WEIGHT
            )
        )
    by_module: Dict[int, List[int]] = {}
    for q in sorted(qubits):
        by_module.setdefault(g.module_of(q), []).append(q)
    modules = sorted(by_module)
    if len(modules) == 1:
        only = modules[0]
        return [OperatorPath((only,), frozenset(_span(by_module[only])), 0)]

    first, *middle, last = modules
    occupied = set()
    for m in middle:
        occupied.update(_span(by_module[m] + list(g.connectors(m))))
    paths = []
    for exit_port, entry_port in product(
        g.connectors(first), g.connectors(last)
    ):
        vertices = set(occupied)
        vertices.update(_span(by_module[first] + [exit_port]))
        vertices.update(_span(by_module[last] + [entry_port]))
        paths.append(
            OperatorPath(
                tuple(modules), frozenset(vertices), len(modules) - 1
            )
        )
    return paths


def shortest_available(
    candidates: Sequence[OperatorPath], blocked: set
) -> OperatorPath:
    best = None
    for path in candidates:
        if path.vertices & blocked:
            continue
        if best is None or path.length < best.length:
            best = path
    return best


def transpile_layers(s: OperatorSet, g: ModuleGraph) -> LayerSchedule:
    if s.n != g.n:
        raise ValueError(
            "Operator set on {} qubits, module graph on {}".format(s.n, g.n)
        )
    candidates = [candidate_paths(op, g) for op in s.operators]
    for index, options in enumerate(candidates):
        if not options:
            raise InfeasibleOperatorError(
                "Operator {} has no path".format(s.operators[index])
            )

    remaining = list(range(s.p))
    layers = []
    while remaining:
        blocked: set = set()
        layer = []
        deferred = []
        for index in remaining:
            path = shortest_available(candidates[index], blocked)
            if path is None:
                deferred.append(index)
                continue
            blocked |= path.vertices
            layer.append(ScheduledOperator(index, s.operators[index], path))
        if not layer:
            raise InfeasibleOperatorError(
                "Operators {} cannot be placed".format(deferred)
            )
        layers.append(tuple(layer))
        remaining = deferred
    logger.debug(
        "Transpiled P=%d K=%d on M=%d into %d layers",
        s.p,
        s.k,
        g.m,
        len(layers),
    )
    return LayerSchedule(tuple(layers))


def ancilla_stats(
    sched: LayerSchedule, with_hops: bool = False
) -> Tuple[float, List[int]]:
    """Mean and per-operator ancilla path lengths in operator order."""
    lengths = [
        op.path.length_with_hops if with_hops else op.path.length
        for op in sched.operators()
    ]
    if not lengths:
        raise ValueError("Schedule is empty")
    return fmean(lengths), lengths
