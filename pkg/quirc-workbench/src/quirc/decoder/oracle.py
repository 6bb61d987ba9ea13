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
Exhaustive minimum-weight explanation of a syndrome.

The search runs over the error mechanisms of the circuit's detector error
model, so its answers are directly comparable with the matching decoder.
Subsets of one to ``max_faults`` mechanisms are enumerated with the last
member found by lookup on its detector set.
"""

from dataclasses import dataclass
from itertools import combinations
from logging import getLogger
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from quirc.circuit import Circuit
from quirc.decoder.analysis import DetectorErrorModel, analyze_circuit
from quirc.decoder.graph import EXACT_LIMIT, DetectorGraph, edge_weight

logger = getLogger(__name__)

MAX_ORACLE_FAULTS = 3
SUBSET_BUDGET = 10**7
_TIE_TOLERANCE = 1e-9


class OracleIncompleteError(LookupError):
    """No subset of at most ``max_faults`` mechanisms explains a syndrome."""


class OracleBudgetError(ValueError):
    """The subset count exceeds the search budget."""


@dataclass(frozen=True)
class OracleResult:
    prediction: np.ndarray
    weight: float
    faults: Tuple[int, ...]
    tie: bool


class FaultOracle:
    def __init__(self, model: DetectorErrorModel):
        self.model = model
        self.dets: List[FrozenSet[int]] = [
            frozenset(m.detectors) for m in model.mechanisms
        ]
        self.weights = [edge_weight(m.probability) for m in model.mechanisms]
        self.masks = [m.observable_mask for m in model.mechanisms]
        self._by_dets: Dict[FrozenSet[int], List[int]] = {}
        for index, dets in enumerate(self.dets):
            self._by_dets.setdefault(dets, []).append(index)

    def _bits(self, mask: int) -> np.ndarray:
        return np.array(
            [(mask >> o) & 1 for o in range(self.model.num_observables)],
            dtype=bool,
        )

    def _explanations(self, target: FrozenSet[int], max_faults: int):
        n = len(self.dets)
        for k in range(1, max_faults + 1):
            for head in combinations(range(n), k - 1):
                need = target
                for index in head:
                    need = need ^ self.dets[index]
                floor = head[-1] if head else -1
                for last in self._by_dets.get(need, ()):
                    if last > floor:
                        yield head + (last,)

    def decode(
        self, syndrome: Iterable[int], max_faults: int = MAX_ORACLE_FAULTS
    ) -> OracleResult:
        if not 1 <= max_faults <= MAX_ORACLE_FAULTS:
            raise ValueError(
                "max_faults must be in 1..{}, got {}".format(
                    MAX_ORACLE_FAULTS, max_faults
                )
            )
        subsets = comb(len(self.dets), max_faults)
        if subsets > SUBSET_BUDGET:
            raise OracleBudgetError(
                "C({}, {}) = {} subsets exceeds {}".format(
                    len(self.dets), max_faults, subsets, SUBSET_BUDGET
                )
            )
        target = frozenset(int(s) for s in syndrome)
        if not target:
            return OracleResult(self._bits(0), 0.0, (), False)

        best: Optional[Tuple[float, Tuple[int, ...], int]] = None
        tie = False
        for faults in self._explanations(target, max_faults):
            weight = sum(self.weights[i] for i in faults)
            mask = 0
            for i in faults:
                mask ^= self.masks[i]
            if best is None or weight < best[0] - _TIE_TOLERANCE:
                best = (weight, faults, mask)
                tie = False
            elif abs(weight - best[0]) <= _TIE_TOLERANCE:
                if mask != best[2]:
                    tie = True
                if faults < best[1]:
                    best = (weight, faults, mask)
        if best is None:
            raise OracleIncompleteError(
                "No explanation of {} with at most {} faults".format(
                    sorted(target), max_faults
                )
            )
        if tie:
            logger.warning(
                "Equal-weight explanations of %s disagree", sorted(target)
            )
        return OracleResult(self._bits(best[2]), best[0], best[1], tie)


def ml_oracle_decode(
    c: Circuit, s: Iterable[int], max_faults: int = MAX_ORACLE_FAULTS
) -> OracleResult:
    return FaultOracle(analyze_circuit(c)).decode(s, max_faults)


@dataclass(frozen=True)
class AgreementReport:
    single_total: int
    single_agree: int
    pair_total: int
    pair_agree: int
    ties: int

    @property
    def single_fraction(self) -> float:
        if not self.single_total:
            return 1.0
        return self.single_agree / self.single_total

    @property
    def pair_fraction(self) -> float:
        if not self.pair_total:
            return 1.0
        return self.pair_agree / self.pair_total


def _pairs(n: int, budget: Optional[int], seed: int):
    total = comb(n, 2)
    if budget is None or total <= budget:
        return list(combinations(range(n), 2))
    rng = np.random.default_rng(seed)
    chosen = set()
    while len(chosen) < budget:
        i, j = (int(v) for v in rng.integers(0, n, size=2))
        if i != j:
            chosen.add((min(i, j), max(i, j)))
    return sorted(chosen)


def oracle_agreement(
    c: Circuit,
    pair_budget: Optional[int] = None,
    seed: int = 0,
    exact_limit: int = EXACT_LIMIT,
) -> AgreementReport:
    """Compares the matching decoder with the oracle on every single-fault
    syndrome and on (up to ``pair_budget``) two-fault syndromes.

    ``exact_limit`` is handed to the detector graph; 0 sends every
    syndrome through union-find. A tie reported by the oracle counts as
    agreement.
    """
    model = analyze_circuit(c)
    graph = DetectorGraph.from_model(model, exact_limit)
    oracle = FaultOracle(model)
    ties = 0

    def agrees(syndrome, max_faults):
        nonlocal ties
        result = oracle.decode(syndrome, max_faults)
        ties += result.tie
        return result.tie or np.array_equal(
            result.prediction, graph.decode(syndrome)
        )

    single_agree = 0
    for dets in oracle.dets:
        single_agree += agrees(sorted(dets), 2)

    pair_total = 0
    pair_agree = 0
    for i, j in _pairs(len(oracle.dets), pair_budget, seed):
        syndrome = sorted(oracle.dets[i] ^ oracle.dets[j])
        if not syndrome:
            continue
        pair_total += 1
        pair_agree += agrees(syndrome, 2)

    report = AgreementReport(
        len(oracle.dets), single_agree, pair_total, pair_agree, ties
    )
    logger.info(
        "Oracle agreement: single %d/%d, pairs %d/%d, %d ties",
        report.single_agree,
        report.single_total,
        report.pair_agree,
        report.pair_total,
        report.ties,
    )
    return report
