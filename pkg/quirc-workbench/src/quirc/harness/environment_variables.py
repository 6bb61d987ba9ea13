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

QUIRC_SEED = "QUIRC_SEED"
"""
.. envvar:: QUIRC_SEED

64-bit master seed for every random stream of an experiment.
"""

QUIRC_SHOTS = "QUIRC_SHOTS"
"""
.. envvar:: QUIRC_SHOTS

Monte Carlo shots per sweep point.
"""

QUIRC_WORKERS = "QUIRC_WORKERS"
"""
.. envvar:: QUIRC_WORKERS

Worker processes; ``0`` means one per CPU.
"""

QUIRC_OUT = "QUIRC_OUT"
"""
.. envvar:: QUIRC_OUT

Output directory for CSV and JSON results.
"""

QUIRC_LOG_LEVEL = "QUIRC_LOG_LEVEL"
"""
.. envvar:: QUIRC_LOG_LEVEL

One of ``debug``, ``info``, ``warning`` or ``error``.
"""

QUIRC_LOG_CORRELATION = "QUIRC_LOG_CORRELATION"
"""
.. envvar:: QUIRC_LOG_CORRELATION

``true`` calls ``logging.basicConfig`` with the span-aware format.
"""

QUIRC_LOG_FORMAT = "QUIRC_LOG_FORMAT"
"""
.. envvar:: QUIRC_LOG_FORMAT

Overrides the span-aware logging format.
"""

QUIRC_TRACES_EXPORTER = "QUIRC_TRACES_EXPORTER"
"""
.. envvar:: QUIRC_TRACES_EXPORTER

``none`` (default) or ``console``.
"""

QUIRC_PREFIX = "QUIRC_"
