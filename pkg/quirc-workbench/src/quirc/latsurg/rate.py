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

from dataclasses import dataclass
from logging import getLogger
from math import sqrt
from typing import Optional

import numpy as np
from scipy import stats

from quirc.circuit import NoiseParams, frame_sample
from quirc.decoder import build_detector_graph
from quirc.latsurg.layout import PatchLayout
from quirc.latsurg.merge import build_merge_circuit

logger = getLogger(__name__)

CONFIDENCE = 0.95


def wilson_half_width(
    failures: int, shots: int, confidence: float = CONFIDENCE
) -> float:
    """Half-width of the Wilson score interval."""
    if shots == 0:
        return 0.0
    z = stats.norm.ppf(0.5 + confidence / 2)
    p = failures / shots
    return float(
        z
        * sqrt(p * (1 - p) / shots + z * z / (4 * shots * shots))
        / (1 + z * z / shots)
    )


def clopper_pearson_upper(
    failures: int, shots: int, confidence: float = CONFIDENCE
) -> float:
    """One-sided Clopper-Pearson upper bound on the failure rate."""
    if shots == 0 or failures >= shots:
        return 1.0
    return float(stats.beta.ppf(confidence, failures + 1, shots - failures))


@dataclass(frozen=True)
class LogicalRate:
    failures: int
    shots: int
    rate: float
    half_width: float
    upper_bound: float

    @classmethod
    def from_counts(cls, failures: int, shots: int) -> "LogicalRate":
        return cls(
            failures,
            shots,
            failures / shots if shots else 0.0,
            wilson_half_width(failures, shots),
            clopper_pearson_upper(failures, shots),
        )


def logical_error_rate(
    layout: PatchLayout,
    params: NoiseParams,
    shots: int,
    seed: int,
    rounds: Optional[int] = None,
    latency_once: bool = True,
    workers: int = 1,
) -> LogicalRate:
    """Fraction of shots where the decoded observable disagrees.

    Raises:
        NonGraphlikeError: the noisy circuit has no matching graph.
    """
    circuit = build_merge_circuit(layout, params, rounds, latency_once)
    graph = build_detector_graph(circuit)
    sample = frame_sample(circuit, shots, seed, workers=workers)
    predicted = graph.decode_batch(sample.detector_bits)
    wrong = np.any(predicted != sample.observable_bits, axis=1)
    result = LogicalRate.from_counts(int(np.count_nonzero(wrong)), shots)
    logger.info(
        "d=%d %s: %d/%d logical failures",
        layout.d,
        params,
        result.failures,
        shots,
    )
    return result
