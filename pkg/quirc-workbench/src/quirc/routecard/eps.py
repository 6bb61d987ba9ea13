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
Entangled-pair generation scheduled in node-disjoint layers.

Each layer routes requests in order along the shortest path through nodes
not yet used in that layer; BFS visits neighbours in ascending id order, so
ties go to the path through the smaller next node. Requests without a free
path are deferred to the next layer.
"""

import csv
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from logging import getLogger
from statistics import fmean
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from quirc.routecard.topology import (
    DEFAULT_INTERNALS_PER_GAP,
    RoutingCardGraph,
    make_topology,
)

logger = getLogger(__name__)

SEED_MASK = (1 << 64) - 1


class InfeasibleRequestError(RuntimeError):
    """Raised when a request cannot be routed even on an idle card."""


class EPRequest(NamedTuple):
    a: int
    b: int


@dataclass(frozen=True)
class RoutedPair:
    request: EPRequest
    path: Tuple[int, ...]


@dataclass(frozen=True)
class EPSchedule:
    layers: Tuple[Tuple[RoutedPair, ...], ...]

    @property
    def num_layers(self) -> int:
        return len(self.layers)

    def routed(self) -> List[RoutedPair]:
        return [pair for layer in self.layers for pair in layer]


def _free_path(
    g: RoutingCardGraph, source: int, target: int, used: set
) -> Optional[Tuple[int, ...]]:
    if source in used or target in used:
        return None
    parent: Dict[int, int] = {source: source}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        if node == target:
            break
        for nxt in g.neighbors(node):
            if nxt in parent or nxt in used:
                continue
            parent[nxt] = node
            queue.append(nxt)
    if target not in parent:
        return None
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def _check_requests(requests: Sequence[EPRequest], g: RoutingCardGraph):
    externals = set(g.externals())
    for request in requests:
        a, b = request
        if a == b or a not in externals or b not in externals:
            raise InfeasibleRequestError(
                "Request {} must join two distinct external nodes".format(
                    tuple(request)
                )
            )


def schedule_eps(
    requests: Sequence[EPRequest], g: RoutingCardGraph
) -> EPSchedule:
    requests = [EPRequest(*r) for r in requests]
    _check_requests(requests, g)
    remaining = list(requests)
    layers = []
    while remaining:
        used: set = set()
        layer = []
        deferred = []
        for request in remaining:
            path = _free_path(g, request.a, request.b, used)
            if path is None:
                deferred.append(request)
                continue
            used.update(path)
            layer.append(RoutedPair(request, path))
        if not layer:
            raise InfeasibleRequestError(
                "Requests {} have no path on {}".format(
                    [tuple(r) for r in deferred], g.name
                )
            )
        layers.append(tuple(layer))
        remaining = deferred
    logger.debug(
        "Scheduled %d EP requests on %s in %d layers",
        len(requests),
        g.name,
        len(layers),
    )
    return EPSchedule(tuple(layers))


def check_schedule(
    schedule: EPSchedule,
    requests: Sequence[EPRequest],
    g: RoutingCardGraph,
) -> bool:
    """Disjoint layers, valid paths, every request exactly once."""
    for layer in schedule.layers:
        used: set = set()
        for pair in layer:
            nodes = set(pair.path)
            if used & nodes or len(nodes) != len(pair.path):
                return False
            used |= nodes
    for pair in schedule.routed():
        path = pair.path
        if {path[0], path[-1]} != {pair.request.a, pair.request.b}:
            return False
        if not all(g.graph.has_edge(u, v) for u, v in zip(path, path[1:])):
            return False
    scheduled = sorted(tuple(p.request) for p in schedule.routed())
    return scheduled == sorted(tuple(EPRequest(*r)) for r in requests)


def random_requests(
    g: RoutingCardGraph, rng: np.random.Generator
) -> List[EPRequest]:
    """Uniform perfect matching of the external nodes."""
    externals = g.externals()
    if len(externals) % 2:
        raise InfeasibleRequestError(
            "{} has an odd number of externals".format(g.name)
        )
    order = rng.permutation(externals)
    return [
        EPRequest(int(order[i]), int(order[i + 1]))
        for i in range(0, len(order), 2)
    ]


def traffic_rng(seed: int, modules: int, sample: int) -> np.random.Generator:
    """Per-sample generator shared by every topology."""
    entropy = [seed & SEED_MASK, modules, sample]
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(entropy))
    )


class EPLayerRow(NamedTuple):
    topology: str
    M: int
    sample: int
    ep_layers: int


@dataclass(frozen=True)
class EPBenchmark:
    rows: Tuple[EPLayerRow, ...]

    def mean_layers(self, topology: str, modules: int) -> float:
        values = [
            row.ep_layers
            for row in self.rows
            if row.topology == topology and row.M == modules
        ]
        if not values:
            raise KeyError((topology, modules))
        return fmean(values)

    def write_csv(self, path: str):
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(EPLayerRow._fields)
            writer.writerows(self.rows)


def _run_cell(job) -> List[EPLayerRow]:
    kind, modules, samples, seed, internals_per_gap = job
    g = make_topology(kind, modules, internals_per_gap)
    rows = []
    for sample in range(samples):
        requests = random_requests(g, traffic_rng(seed, modules, sample))
        layers = schedule_eps(requests, g).num_layers
        rows.append(EPLayerRow(kind, modules, sample, layers))
    return rows


def ep_layer_benchmark(
    kinds: Sequence[str],
    modules: Sequence[int],
    samples: int = 100,
    seed: int = 0,
    internals_per_gap: int = DEFAULT_INTERNALS_PER_GAP,
    workers: int = 1,
) -> EPBenchmark:
    """EP layers for uniform random traffic on every ``(topology, M)``."""
    jobs = [
        (kind, m, samples, seed, internals_per_gap)
        for kind in kinds
        for m in modules
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_cell, jobs))
    else:
        parts = [_run_cell(job) for job in jobs]
    rows = tuple(row for part in parts for row in part)
    logger.info(
        "EP benchmark over %d topologies x %d module counts",
        len(kinds),
        len(modules),
    )
    return EPBenchmark(rows)
