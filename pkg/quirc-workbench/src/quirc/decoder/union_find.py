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
Weighted union-find decoder.

Clusters start at the fired detectors and grow along edges at a rate of
one weight unit per unit time from every odd cluster touching the edge.
Time advances straight to the next edge completion. A cluster stops
growing once it is even or reaches a boundary node; each boundary edge
ends in its own virtual boundary node. The fully grown edges are then
peeled along a shortest-path forest in which all boundary nodes count as
one.
"""

from heapq import heappop, heappush
from logging import getLogger
from typing import Dict, List, Sequence

logger = getLogger(__name__)

_BOUNDARY = -1
_EPS = 1e-9


class DecodingInfeasibleError(RuntimeError):
    """An odd cluster can neither grow nor reach a boundary."""


class UnionFindDecoder:
    def __init__(self, num_detectors: int, edges: Sequence[tuple]):
        """``edges`` holds ``(a, b, weight, mask)`` with ``b=None`` for
        the boundary."""
        self.num_detectors = num_detectors
        self.u: List[int] = []
        self.v: List[int] = []
        self.w: List[float] = []
        self.mask: List[int] = []
        self.incident: Dict[int, List[int]] = {}
        virtual = num_detectors
        for a, b, weight, mask in edges:
            if b is None:
                b = virtual
                virtual += 1
            index = len(self.u)
            self.u.append(a)
            self.v.append(b)
            self.w.append(weight)
            self.mask.append(mask)
            self.incident.setdefault(a, []).append(index)
            self.incident.setdefault(b, []).append(index)

    def _is_virtual(self, node: int) -> bool:
        return node >= self.num_detectors

    def decode(self, fired: Sequence[int]) -> int:
        """Returns the observable mask of the peeled correction."""
        if not fired:
            return 0
        parent: Dict[int, int] = {}
        members: Dict[int, List[int]] = {}
        parity: Dict[int, int] = {}
        boundary: Dict[int, bool] = {}

        def find(node):
            root = node
            while parent.get(root, root) != root:
                root = parent[root]
            while node != root:
                parent[node], node = root, parent[node]
            return root

        def ensure(node):
            if node not in parent:
                parent[node] = node
                members[node] = [node]
                parity[node] = 0
                boundary[node] = self._is_virtual(node)

        def union(a, b):
            ensure(a)
            ensure(b)
            ra, rb = find(a), find(b)
            if ra == rb:
                return
            if len(members[ra]) < len(members[rb]):
                ra, rb = rb, ra
            parent[rb] = ra
            members[ra].extend(members.pop(rb))
            parity[ra] ^= parity.pop(rb)
            boundary[ra] = boundary[ra] or boundary.pop(rb)

        for node in fired:
            ensure(node)
            parity[node] ^= 1

        growth: Dict[int, float] = {}
        while True:
            active = [
                root
                for root in members
                if parity[root] and not boundary[root]
            ]
            if not active:
                break
            rate: Dict[int, int] = {}
            for root in active:
                for node in members[root]:
                    for e in self.incident.get(node, ()):
                        if growth.get(e, 0.0) >= self.w[e]:
                            continue
                        other = self.v[e] if self.u[e] == node else self.u[e]
                        if find(other) == root:
                            continue
                        rate[e] = rate.get(e, 0) + 1
            if not rate:
                raise DecodingInfeasibleError(
                    "Odd cluster around detector {} cannot grow".format(
                        active[0]
                    )
                )
            step = min(
                (self.w[e] - growth.get(e, 0.0)) / r for e, r in rate.items()
            )
            completed = []
            for e, r in rate.items():
                grown = growth.get(e, 0.0) + r * step
                if grown >= self.w[e] - _EPS * max(1.0, self.w[e]):
                    grown = self.w[e]
                    completed.append(e)
                growth[e] = grown
            for e in completed:
                union(self.u[e], self.v[e])

        grown_edges = [e for e, g in growth.items() if g >= self.w[e]]
        return self._peel(fired, grown_edges)

    def _peel(self, fired, grown_edges) -> int:
        adjacency: Dict[int, List[tuple]] = {}
        for e in sorted(grown_edges):
            a = self._node(self.u[e])
            b = self._node(self.v[e])
            adjacency.setdefault(a, []).append((b, e))
            adjacency.setdefault(b, []).append((a, e))

        # Shortest-path forest over the grown edges, rooted at the boundary
        # when a component touches it.
        parent_edge: Dict[int, tuple] = {}
        order: List[int] = []
        done = set()
        starts = [_BOUNDARY] if _BOUNDARY in adjacency else []
        starts += sorted(fired)
        for start in starts:
            if start in done:
                continue
            best = {start: 0.0}
            heap = [(0.0, start)]
            while heap:
                dist, node = heappop(heap)
                if node in done:
                    continue
                done.add(node)
                order.append(node)
                for other, e in adjacency.get(node, ()):
                    candidate = dist + self.w[e]
                    if other in done or candidate >= best.get(
                        other, float("inf")
                    ):
                        continue
                    best[other] = candidate
                    parent_edge[other] = (node, e)
                    heappush(heap, (candidate, other))

        marked = set(fired)
        correction = 0
        for node in reversed(order):
            if node not in parent_edge or node not in marked:
                continue
            up, e = parent_edge[node]
            correction ^= self.mask[e]
            marked.discard(node)
            marked.symmetric_difference_update({up})
        return correction

    def _node(self, node: int) -> int:
        return _BOUNDARY if self._is_virtual(node) else node
