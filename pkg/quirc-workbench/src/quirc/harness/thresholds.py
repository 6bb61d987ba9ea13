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
Threshold sweeps and the crossing of two distance curves.

The crossing is where ``log(rate_large / rate_small)`` changes sign from
negative to positive, found by linear interpolation in ``log p``. Its
interval comes from a parametric bootstrap that redraws every failure count
from a binomial at the observed rate.
"""

from dataclasses import dataclass
from logging import getLogger
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from quirc.circuit.noise import NoiseParams

logger = getLogger(__name__)

DEFAULT_GRIDS = {
    "p_local": (0.005, 0.01, 0.015, 0.02, 0.03, 0.04, 0.05),
    "p_remote": (0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4),
    "p_latency": (0.02, 0.05, 0.08, 0.1, 0.12, 0.15, 0.2),
}
ACCEPTANCE_BANDS = {
    "p_local": (0.01, 0.04),
    "p_remote": (0.10, 0.30),
    "p_latency": (0.05, 0.15),
}
OUT_OF_RANGE = "out-of-range"


def sweep_params(sweep: str, value: float, p_spam: float) -> NoiseParams:
    """Noise for one sweep point; only ``p_spam`` and the swept rate are
    non-zero. ``p_remote`` sets ``p_remote_z`` to half of ``p_remote_x``."""
    if sweep == "p_local":
        return NoiseParams(p_spam=p_spam, p_local=value)
    if sweep == "p_remote":
        return NoiseParams(
            p_spam=p_spam, p_remote_x=value, p_remote_z=value / 2
        )
    if sweep == "p_latency":
        return NoiseParams(p_spam=p_spam, p_latency=value)
    raise ValueError("Unknown sweep {!r}".format(sweep))


@dataclass(frozen=True)
class CrossingEstimate:
    value: Optional[float]
    low: Optional[float]
    high: Optional[float]
    replicates: int

    @property
    def in_range(self) -> bool:
        return self.value is not None

    @property
    def status(self) -> str:
        return "ok" if self.in_range else OUT_OF_RANGE


def crossing_point(
    grid: Sequence[float],
    small_rates: Sequence[float],
    large_rates: Sequence[float],
) -> Optional[float]:
    """First negative-to-positive crossing, or None.

    Points where either rate is zero carry no log ratio and are skipped.
    """
    points = [
        (np.log(p), np.log(large / small))
        for p, small, large in zip(grid, small_rates, large_rates)
        if p > 0 and small > 0 and large > 0
    ]
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if y0 == 0:
            return float(np.exp(x0))
        if y0 < 0 < y1 or (y0 < 0 and y1 == 0):
            return float(np.exp(x0 - y0 * (x1 - x0) / (y1 - y0)))
    return None


def estimate_crossing(
    grid: Sequence[float],
    small_failures: Sequence[int],
    large_failures: Sequence[int],
    shots: int,
    rng: np.random.Generator,
    replicates: int = 200,
) -> CrossingEstimate:
    small = np.asarray(small_failures, dtype=float) / shots
    large = np.asarray(large_failures, dtype=float) / shots
    value = crossing_point(grid, small, large)
    if value is None:
        logger.info("No crossing inside grid %s", tuple(grid))
        return CrossingEstimate(None, None, None, 0)
    draws = []
    for _ in range(replicates):
        small_b = rng.binomial(shots, small) / shots
        large_b = rng.binomial(shots, large) / shots
        crossing = crossing_point(grid, small_b, large_b)
        if crossing is not None:
            draws.append(crossing)
    if not draws:
        return CrossingEstimate(value, None, None, 0)
    low, high = np.percentile(draws, [2.5, 97.5])
    return CrossingEstimate(value, float(low), float(high), len(draws))


def point_seed(seed: int, *keys: int) -> int:
    """Independent 63-bit seed for one sweep point."""
    entropy = [seed & ((1 << 64) - 1), *keys]
    state = np.random.SeedSequence(entropy).generate_state(1, np.uint64)
    return int(state[0]) >> 1


def pair_crossings(
    grid: Sequence[float],
    failures: Dict[int, Sequence[int]],
    shots: int,
    rng: np.random.Generator,
    replicates: int = 200,
) -> Dict[Tuple[int, int], CrossingEstimate]:
    """Crossings of consecutive distances, e.g. ``(3, 5)`` and ``(5, 7)``."""
    distances = sorted(failures)
    return {
        (small, large): estimate_crossing(
            grid, failures[small], failures[large], shots, rng, replicates
        )
        for small, large in zip(distances, distances[1:])
    }
