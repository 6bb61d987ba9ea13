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

from typing import Iterable, Sequence

import numpy as np

from quirc.paulicore import symplectic

_LETTERS = {"I": (0, 0), "_": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_PREFIXES = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_PHASE_TEXT = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PHASE_VALUE = {0: 1, 1: 1j, 2: -1, 3: -1j}


class InvalidSizeError(ValueError):
    """Raised when a qubit count is not positive."""


class QubitIndexError(IndexError):
    """Raised for duplicate, out-of-range or mis-sized qubit targets."""


def check_targets(n: int, gate: str, targets: Sequence[int]):
    arity = symplectic.GATE_ARITY.get(gate)
    if arity is None:
        raise ValueError("Unsupported gate {!r}".format(gate))
    if len(targets) == 0 or len(targets) % arity:
        raise QubitIndexError(
            "{} takes targets in groups of {}, got {}".format(
                gate, arity, len(targets)
            )
        )
    for target in targets:
        if not 0 <= target < n:
            raise QubitIndexError(
                "Target {} out of range for {} qubits".format(target, n)
            )
    if len(set(targets)) != len(targets):
        raise QubitIndexError(
            "Duplicate targets {} for {}".format(list(targets), gate)
        )


class PauliString:
    """An n-qubit Pauli operator ``i**phase`` times a tensor of letters.

    The letters are stored as packed ``x``/``z`` words. ``phase`` is the
    exponent of ``i`` modulo 4, so ``-Y`` is ``phase=2`` with both bits set.
    """

    __slots__ = ("n", "_x", "_z", "_phase")

    def __init__(self, n: int, x_words, z_words, phase: int = 0):
        if n < 1:
            raise InvalidSizeError("PauliString needs n >= 1, got %d" % n)
        self.n = n
        self._x = np.array(x_words, dtype=symplectic.WORD).reshape(-1)
        self._z = np.array(z_words, dtype=symplectic.WORD).reshape(-1)
        self._phase = np.array([phase % 4], dtype=np.uint8)

    @classmethod
    def from_bits(cls, x_bits, z_bits, phase: int = 0) -> "PauliString":
        x_bits = np.asarray(x_bits, dtype=bool)
        z_bits = np.asarray(z_bits, dtype=bool)
        if x_bits.shape != z_bits.shape or x_bits.ndim != 1:
            raise InvalidSizeError("x_bits and z_bits must be equal-length")
        n = x_bits.shape[0]
        return cls(n, symplectic.pack(x_bits), symplectic.pack(z_bits), phase)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls.from_bits(np.zeros(n, bool), np.zeros(n, bool))

    @classmethod
    def from_text(cls, text: str) -> "PauliString":
        """Parses ``"+XZ_Y"``, ``"-iZZ"`` and similar forms."""
        text = text.strip()
        split = 0
        while split < len(text) and text[split] in "+-i":
            split += 1
        prefix, body = text[:split], text[split:]
        if prefix not in _PREFIXES or not body:
            raise ValueError("Cannot parse Pauli string {!r}".format(text))
        try:
            bits = [_LETTERS[letter] for letter in body.upper()]
        except KeyError as exc:
            raise ValueError(
                "Unknown Pauli letter in {!r}".format(text)
            ) from exc
        x_bits = [bit[0] for bit in bits]
        z_bits = [bit[1] for bit in bits]
        return cls.from_bits(x_bits, z_bits, _PREFIXES[prefix])

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliString":
        return cls.sparse(n, {qubit: letter})

    @classmethod
    def sparse(cls, n: int, letters: dict, phase: int = 0) -> "PauliString":
        x_bits = np.zeros(n, bool)
        z_bits = np.zeros(n, bool)
        for qubit, letter in letters.items():
            if not 0 <= qubit < n:
                raise QubitIndexError(
                    "Qubit {} out of range for {} qubits".format(qubit, n)
                )
            x_bits[qubit], z_bits[qubit] = _LETTERS[letter.upper()]
        return cls.from_bits(x_bits, z_bits, phase)

    @property
    def x_bits(self) -> np.ndarray:
        return symplectic.unpack(self._x, self.n)

    @property
    def z_bits(self) -> np.ndarray:
        return symplectic.unpack(self._z, self.n)

    @property
    def phase(self) -> int:
        return int(self._phase[0])

    @property
    def sign(self) -> complex:
        return _PHASE_VALUE[self.phase]

    @property
    def words(self):
        return self._x, self._z

    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    def weight(self) -> int:
        return int(symplectic.popcount(self._x | self._z))

    def letter(self, qubit: int) -> str:
        x_bit = bool(symplectic.get_bit(self._x, qubit))
        z_bit = bool(symplectic.get_bit(self._z, qubit))
        return "IXZY"[x_bit + 2 * z_bit]

    def commutes(self, other: "PauliString") -> bool:
        self._check_size(other)
        return not bool(
            symplectic.anticommutes(self._x, self._z, other._x, other._z)
        )

    def tensor(self, other: "PauliString") -> "PauliString":
        return PauliString.from_bits(
            np.concatenate([self.x_bits, other.x_bits]),
            np.concatenate([self.z_bits, other.z_bits]),
            self.phase + other.phase,
        )

    def copy(self) -> "PauliString":
        return PauliString(self.n, self._x.copy(), self._z.copy(), self.phase)

    def negated(self) -> "PauliString":
        return PauliString(self.n, self._x, self._z, self.phase + 2)

    def __mul__(self, other: "PauliString") -> "PauliString":
        self._check_size(other)
        extra = int(
            symplectic.product_phase(self._x, self._z, other._x, other._z)
        )
        return PauliString(
            self.n,
            self._x ^ other._x,
            self._z ^ other._z,
            self.phase + other.phase + extra,
        )

    def __eq__(self, other):
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.n == other.n
            and self.phase == other.phase
            and np.array_equal(self._x, other._x)
            and np.array_equal(self._z, other._z)
        )

    def __hash__(self):
        return hash((self.n, self.phase, self._x.tobytes(), self._z.tobytes()))

    def __str__(self):
        body = "".join(
            "_XZY"[int(x_bit) + 2 * int(z_bit)]
            for x_bit, z_bit in zip(self.x_bits, self.z_bits)
        )
        return _PHASE_TEXT[self.phase] + body

    def __repr__(self):
        return "PauliString({!r})".format(str(self))

    def _check_size(self, other):
        if self.n != other.n:
            raise InvalidSizeError(
                "Pauli sizes differ: {} != {}".format(self.n, other.n)
            )


def conjugate(
    pauli: PauliString, gate: str, targets: Sequence[int]
) -> PauliString:
    """Returns ``G P G†`` for a Clifford gate from the supported set."""
    check_targets(pauli.n, gate, targets)
    x_row, z_row = pauli.words
    x_words = x_row.copy().reshape(1, -1)
    z_words = z_row.copy().reshape(1, -1)
    phase = np.array([pauli.phase], dtype=np.uint8)
    symplectic.apply_gate(x_words, z_words, phase, gate, list(targets))
    return PauliString(pauli.n, x_words[0], z_words[0], int(phase[0]))


def product(paulis: Iterable[PauliString]) -> PauliString:
    result = None
    for pauli in paulis:
        result = pauli.copy() if result is None else result * pauli
    if result is None:
        raise InvalidSizeError("Product of an empty sequence is undefined")
    return result
