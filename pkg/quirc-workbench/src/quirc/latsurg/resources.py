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

from typing import NamedTuple


class SeamResources(NamedTuple):
    cables_per_seam: int
    eps_per_round: int
    routing_cards: int
    external_nodes_per_card: int


def seam_resources(d: int, modules: int) -> SeamResources:
    """Per-seam hardware counts for distance ``d`` across ``modules``.

    One cable and one routing card per seam row; each round consumes two
    entangled pairs per row. A card serving ``modules`` modules exposes two
    external nodes per module.
    """
    if d < 1 or modules < 1:
        raise ValueError(
            "Need d >= 1 and modules >= 1, got d={} modules={}".format(
                d, modules
            )
        )
    return SeamResources(d, 2 * d, d, 2 * modules)
