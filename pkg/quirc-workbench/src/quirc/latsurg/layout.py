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
Rotated surface-code layout for a two-patch merge.

Data qubits sit on a ``d x W`` grid, ``W = 2d + w_a``: columns ``[0, d)``
hold patch 1, the next ``w_a`` columns the ancilla region and the last
``d`` columns patch 2. A plaquette centred at ``(i, j)`` touches the data
qubits at rows ``i, i + 1`` and columns ``j, j + 1``. Its type is X when
``i + j`` is even and Z otherwise. Weight-2 plaquettes are kept on the top
and bottom edges when Z and on the left and right edges when X, so logical
Z runs down a column and logical X along a row.

The remote seam lies between column ``d - 1`` and column ``d``. Syndrome
qubits of plaquettes centred on column ``d - 1`` live in patch 1's module,
so every CX they make with column ``d`` is remote.
"""

from dataclasses import dataclass
from logging import getLogger
from typing import Dict, List, Optional, Tuple

from quirc.paulicore import PauliString

logger = getLogger(__name__)

NW, NE, SW, SE = range(4)
# N-shape for X plaquettes, Z-shape for Z plaquettes
EXTRACTION_ORDER = {"X": (NW, SW, NE, SE), "Z": (NW, NE, SW, SE)}

Corners = Tuple[Optional[int], ...]

PATCH1 = "patch1"
ANCILLA = "ancilla"
PATCH2 = "patch2"
SEAM = "seam"


class InvalidDistanceError(ValueError):
    """Raised for an unsupported code distance or ancilla width."""


@dataclass(frozen=True)
class Plaquette:
    centre: Tuple[int, int]
    basis: str
    corners: Corners
    region: str
    qubit: int

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(q for q in self.corners if q is not None)

    def schedule(self) -> Tuple[Optional[int], ...]:
        """Data qubit per extraction step, ``None`` for an idle step."""
        return tuple(self.corners[k] for k in EXTRACTION_ORDER[self.basis])


@dataclass(frozen=True)
class PatchLayout:
    d: int
    w_a: int
    width: int
    data: Tuple[Tuple[int, int], ...]
    plaquettes: Tuple[Plaquette, ...]
    seam_column: int
    _patches: Tuple[Tuple[Plaquette, ...], Tuple[Plaquette, ...]]

    @property
    def num_data(self) -> int:
        return len(self.data)

    @property
    def num_qubits(self) -> int:
        return len(self.data) + len(self.plaquettes)

    @property
    def patch2_column(self) -> int:
        return self.d + self.w_a

    def data_index(self, row: int, col: int) -> int:
        return row * self.width + col

    def region_of(self, col: int) -> str:
        if col < self.d:
            return PATCH1
        if col < self.patch2_column:
            return ANCILLA
        return PATCH2

    def data_in(self, region: str) -> Tuple[int, ...]:
        return tuple(
            index
            for index, (_, col) in enumerate(self.data)
            if self.region_of(col) == region
        )

    def patch_plaquettes(self, which: int) -> Tuple[Plaquette, ...]:
        """Plaquettes of patch 1 or 2 alone, supports cut at its edge."""
        if which not in (1, 2):
            raise ValueError("Patch must be 1 or 2, got {}".format(which))
        return self._patches[which - 1]

    def _patch_first_column(self, which: int) -> int:
        return 0 if which == 1 else self.patch2_column

    def logical_z(self, which: int) -> Tuple[int, ...]:
        """Z column on the patch edge facing the ancilla region."""
        if which not in (1, 2):
            raise ValueError("Patch must be 1 or 2, got {}".format(which))
        col = self.d - 1 if which == 1 else self.patch2_column
        return tuple(self.data_index(row, col) for row in range(self.d))

    def logical_x(self, which: int) -> Tuple[int, ...]:
        if which not in (1, 2):
            raise ValueError("Patch must be 1 or 2, got {}".format(which))
        first = self._patch_first_column(which)
        return tuple(
            self.data_index(0, col) for col in range(first, first + self.d)
        )

    @property
    def observable_plaquettes(self) -> Tuple[Plaquette, ...]:
        """Merged Z plaquettes whose product is ``Z_L1 Z_L2``."""
        return tuple(
            p
            for p in self.plaquettes
            if p.basis == "Z"
            and self.d - 1 <= p.centre[1] <= self.patch2_column - 1
        )

    def stabilizer(self, plaquette: Plaquette) -> PauliString:
        return PauliString.sparse(
            self.num_data, {q: plaquette.basis for q in plaquette.support}
        )

    def dump(self) -> str:
        lines = [
            "layout d={} w_a={} width={} seam_column={}".format(
                self.d, self.w_a, self.width, self.seam_column
            )
        ]
        for index, (row, col) in enumerate(self.data):
            lines.append(
                "data {} {} {} {}".format(
                    index, row, col, self.region_of(col)
                )
            )
        for p in self.plaquettes:
            lines.append(
                "plaquette {} {} {} {} {} {}".format(
                    p.qubit,
                    p.basis,
                    p.centre[0],
                    p.centre[1],
                    p.region,
                    ",".join(str(q) for q in p.support),
                )
            )
        return "\n".join(lines) + "\n"


def _keep(i, j, rows, first, last) -> Optional[str]:
    """Type of the plaquette at ``(i, j)`` on columns ``first..last``."""
    basis = "X" if (i + j) % 2 == 0 else "Z"
    top_or_bottom = i in (-1, rows - 1)
    left_or_right = j in (first - 1, last)
    if top_or_bottom and left_or_right:
        return None
    if top_or_bottom:
        return basis if basis == "Z" else None
    if left_or_right:
        return basis if basis == "X" else None
    return basis


def _corners(i, j, rows, first, last, width):
    corners = []
    for di, dj in ((0, 0), (0, 1), (1, 0), (1, 1)):
        row, col = i + di, j + dj
        if 0 <= row < rows and first <= col <= last:
            corners.append(row * width + col)
        else:
            corners.append(None)
    return tuple(corners)


def _plaquettes_on(rows, first, last, width):
    found = []
    for i in range(-1, rows):
        for j in range(first - 1, last + 1):
            basis = _keep(i, j, rows, first, last)
            if basis is not None:
                found.append(
                    ((i, j), basis, _corners(i, j, rows, first, last, width))
                )
    return found


def build_layout(d: int, w_a: Optional[int] = None) -> PatchLayout:
    if d < 3 or d % 2 == 0:
        raise InvalidDistanceError(
            "Distance must be odd and at least 3, got {}".format(d)
        )
    if w_a is None:
        w_a = 2 * d + 1
    if w_a < 1 or w_a % 2 == 0:
        raise InvalidDistanceError(
            "Ancilla width must be odd and positive, got {}".format(w_a)
        )
    width = 2 * d + w_a
    data = tuple((row, col) for row in range(d) for col in range(width))

    def region(j):
        if j == d - 1:
            return SEAM
        if j + 1 < d:
            return PATCH1
        if j >= d + w_a:
            return PATCH2
        return ANCILLA

    merged: List[Plaquette] = []
    by_centre: Dict[Tuple[int, int], int] = {}
    for centre, basis, corners in _plaquettes_on(d, 0, width - 1, width):
        qubit = len(data) + len(merged)
        by_centre[centre] = qubit
        merged.append(
            Plaquette(centre, basis, corners, region(centre[1]), qubit)
        )

    patches = []
    for first, label in ((0, PATCH1), (d + w_a, PATCH2)):
        patch = []
        for centre, basis, corners in _plaquettes_on(
            d, first, first + d - 1, width
        ):
            patch.append(
                Plaquette(centre, basis, corners, label, by_centre[centre])
            )
        patches.append(tuple(patch))

    layout = PatchLayout(
        d, w_a, width, data, tuple(merged), d, (patches[0], patches[1])
    )
    logger.debug(
        "Built layout d=%d w_a=%d: %d data, %d plaquettes",
        d,
        w_a,
        len(data),
        len(merged),
    )
    return layout
