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
Matching decoder for circuits whose faults are graph-like.

``build_detector_graph`` turns a noisy circuit into a weighted graph;
``decode`` predicts observable flips with exact matching for small
syndromes and weighted union-find otherwise. ``ml_oracle_decode`` is a
brute-force reference for tests and acceptance checks.
"""

from quirc.decoder.analysis import (
    DetectorErrorModel,
    Mechanism,
    NonGraphlikeError,
    analyze_circuit,
)
from quirc.decoder.graph import (
    EXACT_LIMIT,
    DetectorGraph,
    Edge,
    build_detector_graph,
    decode,
    edge_weight,
    parse_graph,
)
from quirc.decoder.oracle import (
    AgreementReport,
    OracleBudgetError,
    OracleIncompleteError,
    OracleResult,
    ml_oracle_decode,
    oracle_agreement,
)
from quirc.decoder.union_find import DecodingInfeasibleError

__all__ = [
    "EXACT_LIMIT",
    "AgreementReport",
    "DecodingInfeasibleError",
    "DetectorErrorModel",
    "DetectorGraph",
    "Edge",
    "Mechanism",
    "NonGraphlikeError",
    "OracleBudgetError",
    "OracleIncompleteError",
    "OracleResult",
    "analyze_circuit",
    "build_detector_graph",
    "decode",
    "edge_weight",
    "ml_oracle_decode",
    "oracle_agreement",
    "parse_graph",
]
