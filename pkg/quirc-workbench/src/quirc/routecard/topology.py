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
Routing-card topologies.

A card for ``M`` modules exposes ``2M`` external nodes; internal nodes only
relay. Ring positions are numbered ``0..R-1`` and externals sit at evenly
spaced positions. Text form::

    # ring M=2 thickness=1
    node 0 external
    node 1 internal
    edge 0 1
"""

from logging import getLogger
from typing import Iterable, List, Optional, Tuple

import networkx as nx

logger = getLogger(__name__)

EXTERNAL = "external"
INTERNAL = "internal"
DEFAULT_DEGREE_BOUND = 4
DEFAULT_INTERNALS_PER_GAP = 1
TOPOLOGY_KINDS = ("ring", "double-ring", "ruche-4-2", "ruche-8-4")


class TopologyError(ValueError):
    """Raised for invalid parameters or a violated card constraint."""


class RoutingCardGraph:
    """Immutable card graph with tagged nodes."""

    def __init__(
        self,
        graph: nx.Graph,
        name: str,
        thickness: int,
        degree_bound: int = DEFAULT_DEGREE_BOUND,
    ):
        if thickness not in (1, 2):
            raise TopologyError(
                "Thickness must be 1 or 2, got {}".format(thickness)
            )
        self.graph = nx.freeze(graph)
        self.name = name
        self.thickness = thickness
        self.degree_bound = degree_bound
        self._check()

    def _check(self):
        worst = max((deg for _, deg in self.graph.degree), default=0)
        if worst > self.degree_bound:
            raise TopologyError(
                "{} has a node of degree {} above the bound {}".format(
                    self.name, worst, self.degree_bound
                )
            )
        if self.thickness == 1 and not self.is_planar():
            raise TopologyError(
                "{} is tagged thickness 1 but is not planar".format(self.name)
            )

    def is_planar(self) -> bool:
        planar, _ = nx.check_planarity(self.graph)
        return planar

    @property
    def max_degree(self) -> int:
        return max((deg for _, deg in self.graph.degree), default=0)

    def kind(self, node: int) -> str:
        return self.graph.nodes[node]["kind"]

    def externals(self) -> List[int]:
        return sorted(
            n for n, kind in self.graph.nodes(data="kind") if kind == EXTERNAL
        )

    def internals(self) -> List[int]:
        return sorted(
            n for n, kind in self.graph.nodes(data="kind") if kind == INTERNAL
        )

    def neighbors(self, node: int) -> List[int]:
        return sorted(self.graph.neighbors(node))

    def to_text(self) -> str:
        lines = [
            "# {} thickness={} degree_bound={}".format(
                self.name, self.thickness, self.degree_bound
            )
        ]
        for node in sorted(self.graph.nodes):
            lines.append("node {} {}".format(node, self.kind(node)))
        for a, b in sorted(tuple(sorted(e)) for e in self.graph.edges):
            lines.append("edge {} {}".format(a, b))
        return "\n".join(lines) + "\n"


def parse_topology(
    text: str,
    name: str = "custom",
    thickness: int = 1,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> RoutingCardGraph:
    graph = nx.Graph()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "node" and len(parts) == 3:
            if parts[2] not in (EXTERNAL, INTERNAL):
                raise TopologyError(
                    "Line {}: unknown node kind {!r}".format(number, parts[2])
                )
            graph.add_node(int(parts[1]), kind=parts[2])
        elif parts[0] == "edge" and len(parts) == 3:
            a, b = int(parts[1]), int(parts[2])
            if a not in graph or b not in graph:
                raise TopologyError(
                    "Line {}: edge before its nodes".format(number)
                )
            graph.add_edge(a, b)
        else:
            raise TopologyError(
                "Line {}: cannot parse {!r}".format(number, raw)
            )
    return RoutingCardGraph(graph, name, thickness, degree_bound)


def _ring(size: int, externals: Iterable[int]) -> nx.Graph:
    graph = nx.cycle_graph(size)
    nx.set_node_attributes(graph, INTERNAL, "kind")
    for node in externals:
        graph.nodes[node]["kind"] = EXTERNAL
    return graph


def _check_positive(**values):
    for key, value in values.items():
        if value < 1:
            raise TopologyError(
                "{} must be positive, got {}".format(key, value)
            )


def ring_size(modules: int, internals_per_gap: int) -> int:
    return 2 * modules * (internals_per_gap + 1)


def make_ring(
    modules: int, internals_per_gap: int = DEFAULT_INTERNALS_PER_GAP
) -> RoutingCardGraph:
    _check_positive(modules=modules)
    if internals_per_gap < 0:
        raise TopologyError("internals_per_gap must be non-negative")
    stride = internals_per_gap + 1
    size = ring_size(modules, internals_per_gap)
    graph = _ring(size, range(0, size, stride))
    return RoutingCardGraph(graph, "ring", 1)


def make_double_ring(
    modules: int, internals_per_gap: int = DEFAULT_INTERNALS_PER_GAP
) -> RoutingCardGraph:
    """Outer ring as :func:`make_ring` plus an inner cycle of the same
    length, coupled radially at every external position."""
    outer = make_ring(modules, internals_per_gap)
    size = outer.graph.number_of_nodes()
    graph = nx.Graph(outer.graph)
    for position in range(size):
        graph.add_node(size + position, kind=INTERNAL)
        graph.add_edge(size + position, size + (position + 1) % size)
    for external in outer.externals():
        graph.add_edge(external, size + external)
    return RoutingCardGraph(graph, "double-ring", 1)


def make_ruche(
    n_ring: Optional[int],
    i: int,
    j: int,
    modules: int,
    internals_per_gap: int = DEFAULT_INTERNALS_PER_GAP,
) -> RoutingCardGraph:
    """Ring of ``n_ring`` nodes with a chord from every ``j``-th position
    to the position ``i`` ahead. Self and duplicate chords are skipped."""
    _check_positive(i=i, j=j, modules=modules)
    if n_ring is None:
        n_ring = ring_size(modules, internals_per_gap)
    if n_ring < 2 * modules:
        raise TopologyError(
            "Ring of {} cannot host {} externals".format(n_ring, 2 * modules)
        )
    externals = [t * n_ring // (2 * modules) for t in range(2 * modules)]
    graph = _ring(n_ring, externals)
    chords = 0
    for start in range(0, n_ring, j):
        end = (start + i) % n_ring
        if end == start or graph.has_edge(start, end):
            continue
        graph.add_edge(start, end)
        chords += 1
    logger.debug(
        "Ruche(%d, %d) on %d nodes added %d chords", i, j, n_ring, chords
    )
    return RoutingCardGraph(graph, "ruche-{}-{}".format(i, j), 2)


def make_dumbbell(
    left: int = 2, right: int = 2, bridge: int = 2
) -> RoutingCardGraph:
    """Externals ``0..left-1`` and ``left..left+right-1`` hang off the two
    ends of a path of ``bridge`` internal nodes."""
    _check_positive(left=left, right=right, bridge=bridge)
    graph = nx.Graph()
    first_internal = left + right
    for node in range(first_internal):
        graph.add_node(node, kind=EXTERNAL)
    path = list(range(first_internal, first_internal + bridge))
    for node in path:
        graph.add_node(node, kind=INTERNAL)
    nx.add_path(graph, path)
    for node in range(left):
        graph.add_edge(node, path[0])
    for node in range(left, first_internal):
        graph.add_edge(node, path[-1])
    bound = max(DEFAULT_DEGREE_BOUND, left + 1, right + 1)
    return RoutingCardGraph(graph, "dumbbell", 1, bound)


def make_topology(
    kind: str,
    modules: int,
    internals_per_gap: int = DEFAULT_INTERNALS_PER_GAP,
) -> RoutingCardGraph:
    if kind == "ring":
        return make_ring(modules, internals_per_gap)
    if kind == "double-ring":
        return make_double_ring(modules, internals_per_gap)
    if kind.startswith("ruche-"):
        try:
            _, i, j = kind.split("-")
            return make_ruche(
                None, int(i), int(j), modules, internals_per_gap
            )
        except ValueError as exc:
            if isinstance(exc, TopologyError):
                raise
            raise TopologyError("Bad Ruche kind {!r}".format(kind)) from exc
    raise TopologyError(
        "Unknown topology {!r}; expected one of {}".format(
            kind, ", ".join(TOPOLOGY_KINDS)
        )
    )


def edge_list(g: RoutingCardGraph) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted(e)) for e in g.graph.edges))
