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
Weighted detector matching graph.

Text form, one edge per line, the boundary written as ``B``::

    detectors 4
    observables 1
    edge 0 1 4.59511985013459 0.01 0 X_ERROR@3:X0:X
    edge 2 B 3.8918202981106265 0.02 1 DEPOLARIZE1@7:Y2:Z
"""

from dataclasses import dataclass
from logging import getLogger
from math import log
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from quirc.circuit import Circuit
from quirc.decoder.analysis import DetectorErrorModel, analyze_circuit
from quirc.decoder.matching import ExactMatcher
from quirc.decoder.union_find import UnionFindDecoder

logger = getLogger(__name__)

EXACT_LIMIT = 6
WEIGHT_FLOOR = 1e-6
_P_CEILING = 1.0 - 1e-15


def edge_weight(probability: float) -> float:
    p = min(probability, _P_CEILING)
    return max(log((1 - p) / p), WEIGHT_FLOOR)


@dataclass(frozen=True)
class Edge:
    a: int
    b: Optional[int]
    weight: float
    probability: float
    mask: int
    provenance: str

    @property
    def is_boundary(self) -> bool:
        return self.b is None


class DetectorGraph:
    """Detectors plus one boundary node; immutable once built.

    Parallel edges with different observable masks stay separate. Path
    searches use the lightest edge of each node pair.
    """

    def __init__(
        self,
        num_detectors: int,
        num_observables: int,
        edges: Sequence[Edge],
        detector_coords: Sequence[Optional[tuple]] = (),
        exact_limit: int = EXACT_LIMIT,
    ):
        self.num_detectors = num_detectors
        self.num_observables = num_observables
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self.detector_coords = tuple(detector_coords)
        self.exact_limit = exact_limit
        self.boundary = num_detectors

        lightest: Dict[Tuple[int, int], Edge] = {}
        for edge in self.edges:
            key = self._key(edge)
            current = lightest.get(key)
            if current is None or edge.weight < current.weight:
                lightest[key] = edge
        pairs = {
            key: (edge.weight, edge.mask) for key, edge in lightest.items()
        }
        self._exact = ExactMatcher(num_detectors + 1, self.boundary, pairs)
        self._union_find = UnionFindDecoder(
            num_detectors,
            [
                (edge.a, edge.b, edge.weight, edge.mask)
                for edge in lightest.values()
            ],
        )

    def _key(self, edge: Edge) -> Tuple[int, int]:
        b = self.boundary if edge.b is None else edge.b
        return (edge.a, b) if edge.a < b else (b, edge.a)

    @classmethod
    def from_model(
        cls, model: DetectorErrorModel, exact_limit: int = EXACT_LIMIT
    ) -> "DetectorGraph":
        edges = []
        for m in model.mechanisms:
            a = m.detectors[0]
            b = m.detectors[1] if len(m.detectors) > 1 else None
            edges.append(
                Edge(
                    a,
                    b,
                    edge_weight(m.probability),
                    m.probability,
                    m.observable_mask,
                    m.provenance,
                )
            )
        return cls(
            model.num_detectors,
            model.num_observables,
            edges,
            model.detector_coords,
            exact_limit,
        )

    def sector_of(self, node: int) -> Optional[str]:
        """``"X"`` or ``"Z"`` from the detector's fourth coordinate."""
        if node >= len(self.detector_coords):
            return None
        coords = self.detector_coords[node]
        if coords is None or len(coords) < 4:
            return None
        return "X" if int(coords[3]) == 0 else "Z"

    def _mask_to_bits(self, mask: int) -> np.ndarray:
        return np.array(
            [(mask >> o) & 1 for o in range(self.num_observables)],
            dtype=bool,
        )

    def decode_mask(self, fired: Sequence[int]) -> int:
        fired = sorted(set(int(f) for f in fired))
        for node in fired:
            if not 0 <= node < self.num_detectors:
                raise ValueError(
                    "Detector {} not in graph of {}".format(
                        node, self.num_detectors
                    )
                )
        if not fired:
            return 0
        if len(fired) <= self.exact_limit:
            return self._exact.match(fired)[1]
        return self._union_find.decode(fired)

    def decode(self, syndrome: Iterable[int]) -> np.ndarray:
        return self._mask_to_bits(self.decode_mask(list(syndrome)))

    def decode_batch(self, detector_bits: np.ndarray) -> np.ndarray:
        """Predicts observable flips for a shots x detectors bit matrix."""
        detector_bits = np.asarray(detector_bits, dtype=bool)
        shots = detector_bits.shape[0]
        if shots == 0:
            return np.zeros((0, self.num_observables), dtype=bool)
        unique, inverse = np.unique(
            detector_bits, axis=0, return_inverse=True
        )
        predictions = np.zeros((len(unique), self.num_observables), bool)
        for row, bits in enumerate(unique):
            predictions[row] = self.decode(np.flatnonzero(bits))
        logger.debug(
            "Decoded %d shots through %d distinct syndromes",
            shots,
            len(unique),
        )
        return predictions[inverse.reshape(-1)]

    def dump(self) -> str:
        lines = [
            "detectors {}".format(self.num_detectors),
            "observables {}".format(self.num_observables),
        ]
        for edge in self.edges:
            lines.append(
                "edge {} {} {!r} {!r} {} {}".format(
                    edge.a,
                    "B" if edge.b is None else edge.b,
                    edge.weight,
                    edge.probability,
                    edge.mask,
                    edge.provenance,
                )
            )
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> DetectorGraph:
    num_detectors = 0
    num_observables = 0
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "detectors":
            num_detectors = int(parts[1])
        elif parts[0] == "observables":
            num_observables = int(parts[1])
        elif parts[0] == "edge" and len(parts) >= 6:
            edges.append(
                Edge(
                    int(parts[1]),
                    None if parts[2] == "B" else int(parts[2]),
                    float(parts[3]),
                    float(parts[4]),
                    int(parts[5]),
                    parts[6] if len(parts) > 6 else "",
                )
            )
        else:
            raise ValueError(
                "Line {}: cannot parse {!r}".format(number, raw)
            )
    return DetectorGraph(num_detectors, num_observables, edges)


def build_detector_graph(
    c: Circuit, exact_limit: int = EXACT_LIMIT
) -> DetectorGraph:
    """Matching graph of ``c`` from single-fault analysis.

    Raises:
        NonGraphlikeError: a fault part flips more than two detectors.
    """
    graph = DetectorGraph.from_model(analyze_circuit(c), exact_limit)
    logger.debug(
        "Detector graph: %d detectors, %d edges",
        graph.num_detectors,
        len(graph.edges),
    )
    return graph


def decode(g: DetectorGraph, s: Iterable[int]) -> np.ndarray:
    return g.decode(s)
