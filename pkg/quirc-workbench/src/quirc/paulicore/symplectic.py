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

"""Word-level helpers for bit-packed symplectic rows.

Qubit ``q`` lives in bit ``q % 64`` of word ``q // 64``. Words are stored
as little-endian ``uint64`` so packing is identical on every host.

Phases are kept as exponents of ``i`` modulo 4 over the letter basis
(``Y`` is a letter, not ``iXZ``).
"""

import numpy as np

WORD = np.dtype("<u8")
_ONE = np.uint64(1)

GATE_ARITY = {
    "H": 1,
    "S": 1,
    "S_DAG": 1,
    "X": 1,
    "Y": 1,
    "Z": 1,
    "CX": 2,
    "CZ": 2,
    "SWAP": 2,
}

INVERSE_GATE = {
    "H": "H",
    "S": "S_DAG",
    "S_DAG": "S",
    "X": "X",
    "Y": "Y",
    "Z": "Z",
    "CX": "CX",
    "CZ": "CZ",
    "SWAP": "SWAP",
}


def num_words(n):
    return (n + 63) // 64


def pack(bits, n=None):
    """Packs a trailing axis of booleans into little-endian words."""
    bits = np.asarray(bits, dtype=bool)
    n = bits.shape[-1] if n is None else n
    padded = np.zeros(bits.shape[:-1] + (num_words(n) * 64,), dtype=bool)
    padded[..., : bits.shape[-1]] = bits
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(WORD)


def unpack(words, n):
    raw = np.ascontiguousarray(words, dtype=WORD).view(np.uint8)
    return np.unpackbits(raw, axis=-1, bitorder="little")[..., :n].astype(
        bool
    )


def get_bit(words, q):
    shift = np.uint64(q & 63)
    return ((words[..., q >> 6] >> shift) & _ONE).astype(bool)


def xor_bit(words, q, values):
    shift = np.uint64(q & 63)
    words[..., q >> 6] ^= np.asarray(values, dtype=WORD) << shift


def set_bit(words, q, values):
    xor_bit(words, q, get_bit(words, q) ^ np.asarray(values, dtype=bool))


def popcount(words):
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


def product_phase(x1, z1, x2, z2):
    """Exponent of ``i`` picked up by the letter product ``P1 * P2``.

    Arguments broadcast, so one row may be multiplied into many.
    """
    nx1 = ~x1
    nz1 = ~z1
    nx2 = ~x2
    nz2 = ~z2
    plus = (
        (x1 & z1 & nx2 & z2) | (x1 & nz1 & x2 & z2) | (nx1 & z1 & x2 & nz2)
    )
    minus = (
        (x1 & z1 & x2 & nz2) | (x1 & nz1 & nx2 & z2) | (nx1 & z1 & x2 & z2)
    )
    return (popcount(plus) - popcount(minus)) % 4


def anticommutes(x1, z1, x2, z2):
    return ((popcount(x1 & z2) + popcount(z1 & x2)) & 1).astype(bool)


def _add_phase(phase, mask):
    phase += np.asarray(mask, dtype=np.uint8) << np.uint8(1)
    phase &= np.uint8(3)


def apply_gate(x, z, phase, gate, targets):
    """Conjugates every row of ``(x, z, phase)`` in place by ``gate``.

    ``x`` and ``z`` have shape ``(rows, words)`` and ``phase`` has shape
    ``(rows,)``. Targets are consumed ``GATE_ARITY[gate]`` at a time.
    """
    arity = GATE_ARITY[gate]
    for start in range(0, len(targets), arity):
        group = targets[start : start + arity]
        if arity == 1:
            _apply_single(x, z, phase, gate, group[0])
        else:
            _apply_pair(x, z, phase, gate, group[0], group[1])


def _apply_single(x, z, phase, gate, a):
    xa = get_bit(x, a)
    za = get_bit(z, a)
    if gate == "H":
        _add_phase(phase, xa & za)
        set_bit(x, a, za)
        set_bit(z, a, xa)
    elif gate == "S":
        _add_phase(phase, xa & za)
        xor_bit(z, a, xa)
    elif gate == "S_DAG":
        _add_phase(phase, xa & ~za)
        xor_bit(z, a, xa)
    elif gate == "X":
        _add_phase(phase, za)
    elif gate == "Y":
        _add_phase(phase, xa ^ za)
    elif gate == "Z":
        _add_phase(phase, xa)
    else:
        raise ValueError("Unknown single-qubit gate {}".format(gate))


def _apply_pair(x, z, phase, gate, a, b):
    xa = get_bit(x, a)
    za = get_bit(z, a)
    xb = get_bit(x, b)
    zb = get_bit(z, b)
    if gate == "CX":
        _add_phase(phase, xa & zb & ~(xb ^ za))
        xor_bit(x, b, xa)
        xor_bit(z, a, zb)
    elif gate == "CZ":
        _add_phase(phase, xa & xb & (za ^ zb))
        xor_bit(z, a, xb)
        xor_bit(z, b, xa)
    elif gate == "SWAP":
        set_bit(x, a, xb)
        set_bit(x, b, xa)
        set_bit(z, a, zb)
        set_bit(z, b, za)
    else:
        raise ValueError("Unknown two-qubit gate {}".format(gate))
