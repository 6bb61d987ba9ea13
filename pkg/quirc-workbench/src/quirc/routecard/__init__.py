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
Routing cards: topologies, EP-layer scheduling, protocol checks and the
noise rates a card implies.

    >>> from quirc.routecard import make_ring, schedule_eps
    >>> card = make_ring(2)
    >>> schedule_eps([(0, 4), (2, 6)], card).num_layers
    2
"""

from quirc.routecard.eps import (
    EPBenchmark,
    EPLayerRow,
    EPRequest,
    EPSchedule,
    InfeasibleRequestError,
    RoutedPair,
    check_schedule,
    ep_layer_benchmark,
    random_requests,
    schedule_eps,
)
from quirc.routecard.noise import derive_latency_error, derive_remote_errors
from quirc.routecard.protocol import (
    BellBranch,
    BellVerdict,
    RemoteCXRow,
    RemoteCXVerdict,
    bell_correction,
    bell_via_graph_state,
    remote_cx_check,
)
from quirc.routecard.topology import (
    TOPOLOGY_KINDS,
    RoutingCardGraph,
    TopologyError,
    make_double_ring,
    make_dumbbell,
    make_ring,
    make_ruche,
    make_topology,
    parse_topology,
)

__all__ = [
    "TOPOLOGY_KINDS",
    "BellBranch",
    "BellVerdict",
    "EPBenchmark",
    "EPLayerRow",
    "EPRequest",
    "EPSchedule",
    "InfeasibleRequestError",
    "RemoteCXRow",
    "RemoteCXVerdict",
    "RoutedPair",
    "RoutingCardGraph",
    "TopologyError",
    "bell_correction",
    "bell_via_graph_state",
    "check_schedule",
    "derive_latency_error",
    "derive_remote_errors",
    "ep_layer_benchmark",
    "make_double_ring",
    "make_dumbbell",
    "make_ring",
    "make_topology",
    "parse_topology",
    "random_requests",
    "remote_cx_check",
    "schedule_eps",
]
