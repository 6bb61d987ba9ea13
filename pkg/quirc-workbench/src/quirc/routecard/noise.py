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

"""Card parameters translated into noise-model rates."""

import math
from typing import Tuple

DEFAULT_T_EP = 2e-6
DEFAULT_T1 = 100e-6


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, value))


def derive_remote_errors(nu: int, p_spam: float) -> Tuple[float, float]:
    """``(p_remote_x, p_remote_z)`` accumulated over a ``nu``-qubit chain."""
    if nu < 2:
        raise ValueError("Chain length must be at least 2, got {}".format(nu))
    if not 0.0 <= p_spam <= 1.0:
        raise ValueError("p_spam must be in [0, 1], got {}".format(p_spam))
    return _clamp(nu * p_spam), _clamp(nu / 2 * p_spam)


def derive_latency_error(
    ep_layers: int,
    t_ep: float = DEFAULT_T_EP,
    t1: float = DEFAULT_T1,
    printed_formula: bool = False,
) -> float:
    """Idle-decay probability while ``ep_layers`` EP layers are generated.

    With ``printed_formula`` the survival probability ``exp(-t / T1)`` is
    returned instead of the decay probability.
    """
    if t_ep <= 0 or t1 <= 0:
        raise ValueError("t_ep and t1 must be positive")
    if ep_layers < 0:
        raise ValueError("ep_layers must be non-negative")
    survival = math.exp(-ep_layers * t_ep / t1)
    if printed_formula:
        return survival
    return 1.0 - survival
