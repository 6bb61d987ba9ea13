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
Pauli-frame detector sampling.

Shots are simulated in blocks of :data:`BLOCK_SHOTS`. Block ``b`` draws
from a Philox generator keyed by ``(seed, b)``. The matrix for a given
``(circuit, shots, seed)`` is therefore the same whatever the worker
count.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from logging import getLogger

import numpy as np

from quirc.circuit.ir import Circuit

logger = getLogger(__name__)

BLOCK_SHOTS = 1024
SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SampleMatrix:
    shots: int
    detector_bits: np.ndarray
    observable_bits: np.ndarray


def block_generator(seed: int, block: int) -> np.random.Generator:
    entropy = [seed & SEED_MASK, block]
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(entropy))
    )


class _Program:
    """Instruction list with targets pre-converted to index arrays."""

    def __init__(self, c: Circuit):
        self.n = c.n
        self.steps = []
        record = 0
        for inst in c.instructions:
            targets = np.asarray(inst.targets, dtype=np.intp)
            first = None
            if inst.is_measurement:
                first = record
                record += len(targets)
            self.steps.append((inst.opcode, targets, inst.prob, first))
        self.num_records = record
        self.detectors = [np.asarray(d, dtype=np.intp) for d in c.detectors]
        self.observables = [
            np.asarray(o, dtype=np.intp) for o in c.observables
        ]


def _flip_mask(rng, prob, shape):
    return rng.random(shape) < prob


def _run_block(program: _Program, shots: int, rng: np.random.Generator):
    n = program.n
    x = np.zeros((n, shots), dtype=bool)
    z = _flip_mask(rng, 0.5, (n, shots))
    records = np.zeros((program.num_records, shots), dtype=bool)

    for opcode, t, prob, first in program.steps:
        if opcode == "H":
            x[t], z[t] = z[t], x[t].copy()
        elif opcode in ("S", "S_DAG"):
            z[t] ^= x[t]
        elif opcode in ("X", "Y", "Z"):
            continue
        elif opcode == "CX":
            c, u = t[0::2], t[1::2]
            x[u] ^= x[c]
            z[c] ^= z[u]
        elif opcode == "CZ":
            a, b = t[0::2], t[1::2]
            z[a] ^= x[b]
            z[b] ^= x[a]
        elif opcode == "SWAP":
            a, b = t[0::2], t[1::2]
            x[a], x[b] = x[b], x[a].copy()
            z[a], z[b] = z[b], z[a].copy()
        elif opcode == "R_Z":
            x[t] = False
            z[t] = _flip_mask(rng, 0.5, (len(t), shots))
        elif opcode == "R_X":
            z[t] = False
            x[t] = _flip_mask(rng, 0.5, (len(t), shots))
        elif opcode == "M_Z":
            records[first : first + len(t)] = x[t]
            z[t] ^= _flip_mask(rng, 0.5, (len(t), shots))
        elif opcode == "M_X":
            records[first : first + len(t)] = z[t]
            x[t] ^= _flip_mask(rng, 0.5, (len(t), shots))
        elif opcode == "M_Y":
            records[first : first + len(t)] = x[t] ^ z[t]
            flip = _flip_mask(rng, 0.5, (len(t), shots))
            x[t] ^= flip
            z[t] ^= flip
        elif prob == 0:
            continue
        elif opcode == "X_ERROR":
            x[t] ^= _flip_mask(rng, prob, (len(t), shots))
        elif opcode == "Z_ERROR":
            z[t] ^= _flip_mask(rng, prob, (len(t), shots))
        elif opcode == "DEPOLARIZE1":
            hit = _flip_mask(rng, prob, (len(t), shots))
            # 0 -> X, 1 -> Y, 2 -> Z
            kind = rng.integers(0, 3, size=(len(t), shots))
            x[t] ^= hit & (kind != 2)
            z[t] ^= hit & (kind != 0)
        elif opcode == "DEPOLARIZE2":
            a, b = t[0::2], t[1::2]
            hit = _flip_mask(rng, prob, (len(a), shots))
            code = rng.integers(1, 16, size=(len(a), shots))
            x[a] ^= hit & ((code & 1) != 0)
            z[a] ^= hit & ((code & 2) != 0)
            x[b] ^= hit & ((code & 4) != 0)
            z[b] ^= hit & ((code & 8) != 0)
        else:
            raise ValueError("Unsupported opcode {}".format(opcode))

    return (
        _parity_rows(records, program.detectors, shots),
        _parity_rows(records, program.observables, shots),
    )


def _parity_rows(records, groups, shots):
    out = np.zeros((shots, len(groups)), dtype=bool)
    for column, group in enumerate(groups):
        if group.size:
            out[:, column] = np.bitwise_xor.reduce(records[group], axis=0)
    return out


def _sample_block(args):
    program, seed, block, shots = args
    return _run_block(program, shots, block_generator(seed, block))


def frame_sample(
    c: Circuit, shots: int, seed: int, workers: int = 1
) -> SampleMatrix:
    """Samples detector and observable flips for ``shots`` noisy runs.

    Args:
        c: a valid circuit.
        shots: number of shots.
        seed: 64-bit seed; equal seeds give bit-identical matrices.
        workers: process count; ``1`` samples in this process.
    """
    c.check()
    if shots < 0:
        raise ValueError("shots must be non-negative, got {}".format(shots))
    program = _Program(c)
    jobs = [
        (program, seed, block, min(BLOCK_SHOTS, shots - start))
        for block, start in enumerate(range(0, shots, BLOCK_SHOTS))
    ]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sample_block, jobs))
    else:
        parts = [_sample_block(job) for job in jobs]
    logger.debug(
        "Sampled %d shots of a %d-qubit circuit in %d blocks",
        shots,
        c.n,
        len(jobs),
    )
    if parts:
        detectors = np.concatenate([part[0] for part in parts])
        observables = np.concatenate([part[1] for part in parts])
    else:
        detectors = np.zeros((0, len(c.detectors)), dtype=bool)
        observables = np.zeros((0, len(c.observables)), dtype=bool)
    return SampleMatrix(shots, detectors, observables)
