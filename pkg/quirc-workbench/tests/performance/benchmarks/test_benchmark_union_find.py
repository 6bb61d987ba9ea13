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

from quirc.circuit.frame import frame_sample
from quirc.circuit.noise import NoiseParams
from quirc.decoder.graph import build_detector_graph
from quirc.latsurg import build_layout, build_merge_circuit

circuit = build_merge_circuit(
    build_layout(3), NoiseParams(p_spam=0.01, p_local=0.005)
)
graph = build_detector_graph(circuit)
samples = frame_sample(circuit, 256, 5)


def test_decode_batch_merge_d3(benchmark):
    benchmark(graph.decode_batch, samples.detector_bits)
