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
Intermediate-block modules reduced to line graphs.

Qubit ``q`` (1-based) is also the id of its qubit-ancilla vertex. Module
``m`` holds qubits ``m * L + 1 .. (m + 1) * L`` and connects to other
modules at local indices ``ceil(L / 3)`` and ``ceil(2L / 3)``. Any two
connectors reach each other in one idealized hop.
"""

from dataclasses import dataclass
from typing import Tuple


class ModuleGraphError(ValueError):
    """Raised when the module count does not divide the qubit count."""


@dataclass(frozen=True)
class ModuleGraph:
    n: int
    m: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.n % self.m:
            raise ModuleGraphError(
                "Module count {} must divide {} qubits".format(self.m, self.n)
            )

    @property
    def line_length(self) -> int:
        return self.n // self.m

    def module_of(self, q: int) -> int:
        if not 1 <= q <= self.n:
            raise ModuleGraphError(
                "Qubit {} outside 1..{}".format(q, self.n)
            )
        return (q - 1) // self.line_length

    def local_index(self, q: int) -> int:
        return (q - 1) % self.line_length + 1

    def vertex(self, module: int, local: int) -> int:
        return module * self.line_length + local

    def connectors(self, module: int) -> Tuple[int, int]:
        """Global vertex ids of the two connectors; equal when ``L = 1``."""
        length = self.line_length
        return (
            self.vertex(module, -(-length // 3)),
            self.vertex(module, -(-2 * length // 3)),
        )
