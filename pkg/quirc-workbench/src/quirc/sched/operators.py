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
from typing import Sequence, Tuple

import numpy as np


class DensityError(ValueError):
    """Raised when ``P * K`` does not cover the qubits exactly."""


@dataclass(frozen=True)
class OperatorSet:
    """``P`` disjoint ``K``-qubit Pauli products over qubits ``1..N``."""

    n: int
    operators: Tuple[Tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.operators)

    @property
    def k(self) -> int:
        return len(self.operators[0]) if self.operators else 0

    @classmethod
    def from_lists(
        cls, n: int, operators: Sequence[Sequence[int]]
    ) -> "OperatorSet":
        ops = tuple(tuple(sorted(int(q) for q in op)) for op in operators)
        seen = [q for op in ops for q in op]
        if len(seen) != len(set(seen)):
            raise DensityError("Operators share a qubit")
        if any(not 1 <= q <= n for q in seen):
            raise DensityError("Operator qubits must lie in 1..{}".format(n))
        return cls(n, ops)


def sample_operator_set(
    n: int, p: int, k: int, rng: np.random.Generator
) -> OperatorSet:
    """Uniformly random partition of ``1..n`` into ``p`` blocks of ``k``."""
    if p < 1 or k < 1 or p * k != n:
        raise DensityError(
            "Need P * K = N with P, K >= 1, got P={} K={} N={}".format(
                p, k, n
            )
        )
    order = rng.permutation(n) + 1
    return OperatorSet(
        n,
        tuple(
            tuple(sorted(int(q) for q in order[i * k : (i + 1) * k]))
            for i in range(p)
        ),
    )
