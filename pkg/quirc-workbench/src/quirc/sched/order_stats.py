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

from fractions import Fraction
from typing import Tuple

import numpy as np


class DomainError(ValueError):
    """Raised when ``k`` is outside ``1..N``."""


def _check(n: int, k: int):
    if not 1 <= k <= n:
        raise DomainError("Need 1 <= k <= N, got k={} N={}".format(k, n))


def expected_order_stats(
    n: int, k: int
) -> Tuple[Fraction, Fraction, Fraction]:
    """Expected max, min and inclusive span of ``k`` draws from ``1..n``.

    The minimum is on the zero-based scale (``min - 1``), so the span is
    ``E_kmax - E_kmin``.
    """
    _check(n, k)
    e_max = Fraction(k * (n + 1), k + 1)
    e_min = n - e_max
    e_span = Fraction(n * (k - 1) + 2 * k, k + 1)
    return e_max, e_min, e_span


def monte_carlo_span(
    n: int, k: int, trials: int, rng: np.random.Generator
) -> Tuple[float, float]:
    """Mean and standard error of ``max - min + 1`` without replacement."""
    _check(n, k)
    if trials < 2:
        raise ValueError("Need at least 2 trials, got {}".format(trials))
    draws = np.argsort(rng.random((trials, n)), axis=1)[:, :k]
    spans = draws.max(axis=1) - draws.min(axis=1) + 1
    return float(spans.mean()), float(spans.std(ddof=1) / np.sqrt(trials))
