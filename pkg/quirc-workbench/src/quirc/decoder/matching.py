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

"""Exact minimum-weight matching for syndromes with few fired detectors."""

from math import inf
from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from quirc.decoder.union_find import DecodingInfeasibleError


class ExactMatcher:
    """Subset DP over fired detectors on cached shortest paths.

    Node ``boundary`` is the single boundary node. Shortest paths may pass
    through it, which is the same as matching both ends to the boundary.
    """

    def __init__(
        self,
        num_nodes: int,
        boundary: int,
        pairs: Dict[Tuple[int, int], Tuple[float, int]],
    ):
        self.boundary = boundary
        self._pairs = pairs
        rows, cols, weights = [], [], []
        for (a, b), (weight, _) in pairs.items():
            rows.append(a)
            cols.append(b)
            weights.append(weight)
        self._csr = csr_matrix(
            (weights, (rows, cols)), shape=(num_nodes, num_nodes)
        )
        self._rows: Dict[int, tuple] = {}
        self._masks: Dict[Tuple[int, int], int] = {}

    def _row(self, source: int):
        row = self._rows.get(source)
        if row is None:
            dist, pred = dijkstra(
                self._csr,
                directed=False,
                indices=source,
                return_predecessors=True,
            )
            row = (dist, pred)
            self._rows[source] = row
        return row

    def _path_mask(self, source: int, target: int) -> int:
        key = (source, target)
        mask = self._masks.get(key)
        if mask is None:
            _, pred = self._row(source)
            mask = 0
            node = target
            while node != source:
                previous = int(pred[node])
                mask ^= self._pairs[_key(previous, node)][1]
                node = previous
            self._masks[key] = mask
        return mask

    def _cost(self, source: int, target: int) -> Tuple[float, int]:
        dist, _ = self._row(source)
        weight = float(dist[target])
        if not np.isfinite(weight):
            return inf, 0
        return weight, self._path_mask(source, target)

    def match(self, fired: Sequence[int]) -> Tuple[float, int]:
        """Returns ``(total weight, observable mask)`` of the best matching."""
        k = len(fired)
        to_boundary = [self._cost(f, self.boundary) for f in fired]
        between: List[List[Tuple[float, int]]] = [
            [self._cost(fired[i], fired[j]) for j in range(k)]
            for i in range(k)
        ]
        full = (1 << k) - 1
        best = [inf] * (full + 1)
        obs = [0] * (full + 1)
        best[0] = 0.0
        for subset in range(1, full + 1):
            i = (subset & -subset).bit_length() - 1
            rest = subset ^ (1 << i)
            weight, mask = to_boundary[i]
            if best[rest] + weight < best[subset]:
                best[subset] = best[rest] + weight
                obs[subset] = obs[rest] ^ mask
            others = rest
            while others:
                low = others & -others
                j = low.bit_length() - 1
                others ^= low
                weight, mask = between[i][j]
                candidate = best[rest ^ low] + weight
                if candidate < best[subset]:
                    best[subset] = candidate
                    obs[subset] = obs[rest ^ low] ^ mask
        if not np.isfinite(best[full]):
            raise DecodingInfeasibleError(
                "No matching explains detectors {}".format(list(fired))
            )
        return best[full], obs[full]


def _key(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a < b else (b, a)
