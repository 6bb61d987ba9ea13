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
Stabilizer tableau with bit-packed rows.

Rows ``0..n-1`` are destabilizers and rows ``n..2n-1`` stabilizers. A
tableau is a single-owner mutable value: operations update it in place and
also return it so calls can be chained.

.. code:: python

    from quirc.paulicore import PauliString, identity_tableau
    from quirc.paulicore import apply_clifford, measure_pauli

    tableau = identity_tableau(2)
    apply_clifford(tableau, "H", [0])
    apply_clifford(tableau, "CX", [0, 1])
    outcome, deterministic, tableau = measure_pauli(
        tableau, PauliString.from_text("ZZ"), rng
    )
"""

from logging import getLogger
from typing import Optional, Sequence, Tuple

import numpy as np

from quirc.paulicore import symplectic
from quirc.paulicore.pauli import (
    InvalidSizeError,
    PauliString,
    check_targets,
)

logger = getLogger(__name__)

MAX_DENSE_QUBITS = 12


class InvalidMeasurementError(ValueError):
    """Raised when measuring a Pauli with an imaginary phase."""


class ImpossibleOutcomeError(ValueError):
    """Raised when a forced outcome contradicts a deterministic result."""


class SizeLimitError(ValueError):
    """Raised when a dense representation would exceed the qubit limit."""


class StabilizerTableau:
    def __init__(self, n: int, x, z, phase):
        self.n = n
        self.x = x
        self.z = z
        self.phase = phase

    @classmethod
    def identity(cls, n: int) -> "StabilizerTableau":
        if n < 1:
            raise InvalidSizeError("Tableau needs n >= 1, got %d" % n)
        eye = np.eye(n, dtype=bool)
        zeros = np.zeros((n, n), dtype=bool)
        x = symplectic.pack(np.vstack([eye, zeros]), n)
        z = symplectic.pack(np.vstack([zeros, eye]), n)
        return cls(n, x, z, np.zeros(2 * n, dtype=np.uint8))

    def copy(self) -> "StabilizerTableau":
        return StabilizerTableau(
            self.n, self.x.copy(), self.z.copy(), self.phase.copy()
        )

    def row(self, index: int) -> PauliString:
        return PauliString(
            self.n, self.x[index], self.z[index], int(self.phase[index])
        )

    def stabilizers(self):
        return [self.row(self.n + i) for i in range(self.n)]

    def destabilizers(self):
        return [self.row(i) for i in range(self.n)]

    def is_valid(self) -> bool:
        """Checks the symplectic pattern between all rows."""
        x_bits = symplectic.unpack(self.x, self.n).astype(np.int64)
        z_bits = symplectic.unpack(self.z, self.n).astype(np.int64)
        inner = (x_bits @ z_bits.T + z_bits @ x_bits.T) % 2
        expected = np.zeros((2 * self.n, 2 * self.n), dtype=np.int64)
        expected[: self.n, self.n :] = np.eye(self.n, dtype=np.int64)
        expected[self.n :, : self.n] = np.eye(self.n, dtype=np.int64)
        return bool(np.array_equal(inner, expected)) and bool(
            np.all(self.phase % 2 == 0)
        )

    def apply(self, gate: str, targets: Sequence[int]):
        check_targets(self.n, gate, targets)
        symplectic.apply_gate(self.x, self.z, self.phase, gate, list(targets))
        return self

    def _anticommuting_rows(self, pauli: PauliString):
        px, pz = pauli.words
        return symplectic.anticommutes(self.x, self.z, px, pz)

    def _deterministic_sign(self, pauli: PauliString, anti) -> int:
        """Phase exponent of the stabilizer product that equals +-pauli."""
        n = self.n
        acc_x = np.zeros_like(self.x[0])
        acc_z = np.zeros_like(self.z[0])
        acc_phase = 0
        for i in np.flatnonzero(anti[:n]):
            row = n + int(i)
            acc_phase += int(self.phase[row]) + int(
                symplectic.product_phase(
                    acc_x, acc_z, self.x[row], self.z[row]
                )
            )
            acc_x ^= self.x[row]
            acc_z ^= self.z[row]
        px, pz = pauli.words
        if not (np.array_equal(acc_x, px) and np.array_equal(acc_z, pz)):
            raise RuntimeError(
                "Stabilizer product does not reproduce {}".format(pauli)
            )
        return acc_phase % 4

    def peek(self, pauli: PauliString) -> int:
        """Returns the expectation of ``pauli``: +1, -1, or 0 if random."""
        _check_measurable(self.n, pauli)
        anti = self._anticommuting_rows(pauli)
        if anti[self.n :].any():
            return 0
        sign = self._deterministic_sign(pauli, anti)
        return 1 if sign == pauli.phase else -1

    def measure(
        self,
        pauli: PauliString,
        rng: Optional[np.random.Generator] = None,
        forced: Optional[int] = None,
        strict: bool = True,
    ) -> Tuple[int, bool]:
        """Measures ``pauli`` and returns ``(outcome, deterministic)``.

        ``forced`` fixes the outcome of a random measurement. With
        ``strict`` a forced value that contradicts a deterministic outcome
        raises; otherwise the deterministic outcome wins.
        """
        _check_measurable(self.n, pauli)
        n = self.n
        anti = self._anticommuting_rows(pauli)
        stabilizer_hits = np.flatnonzero(anti[n:])
        if stabilizer_hits.size == 0:
            sign = self._deterministic_sign(pauli, anti)
            outcome = ((sign - pauli.phase) % 4) // 2
            if strict and forced is not None and forced != outcome:
                raise ImpossibleOutcomeError(
                    "Measurement of {} is deterministically {}".format(
                        pauli, outcome
                    )
                )
            return outcome, True

        pivot = n + int(stabilizer_hits[0])
        if forced is not None:
            outcome = int(forced) & 1
        else:
            if rng is None:
                rng = np.random.default_rng()
            outcome = int(rng.integers(2))

        others = anti.copy()
        others[pivot] = False
        others[pivot - n] = False
        rows = np.flatnonzero(others)
        if rows.size:
            extra = symplectic.product_phase(
                self.x[pivot], self.z[pivot], self.x[rows], self.z[rows]
            )
            self.phase[rows] = (
                self.phase[pivot].astype(np.int64)
                + self.phase[rows].astype(np.int64)
                + extra
            ) % 4
            self.x[rows] ^= self.x[pivot]
            self.z[rows] ^= self.z[pivot]

        self.x[pivot - n] = self.x[pivot]
        self.z[pivot - n] = self.z[pivot]
        self.phase[pivot - n] = self.phase[pivot]
        px, pz = pauli.words
        self.x[pivot] = px
        self.z[pivot] = pz
        self.phase[pivot] = (pauli.phase + 2 * outcome) % 4
        return outcome, False

    def reset(self, qubit: int, basis: str = "Z"):
        """Measures ``qubit`` and flips it onto the +1 eigenstate."""
        pauli = PauliString.single(self.n, qubit, basis)
        outcome, _ = self.measure(pauli, forced=0, strict=False)
        if outcome:
            flip = "X" if basis == "Z" else "Z"
            self.apply(flip, [qubit])
        return self

    def to_state_vector(self) -> np.ndarray:
        """Dense amplitudes, qubit 0 most significant, up to global phase."""
        if self.n > MAX_DENSE_QUBITS:
            raise SizeLimitError(
                "Dense export limited to {} qubits".format(MAX_DENSE_QUBITS)
            )
        # pylint: disable-next=import-outside-toplevel
        from quirc.paulicore.oracle import apply_pauli_dense

        dim = 1 << self.n
        for seed_index in range(dim):
            state = np.zeros(dim, dtype=complex)
            state[seed_index] = 1.0
            for stabilizer in self.stabilizers():
                state = 0.5 * (state + apply_pauli_dense(state, stabilizer))
            norm = np.linalg.norm(state)
            if norm > 1e-9:
                state = state / norm
                pivot = np.flatnonzero(np.abs(state) > 1e-9)[0]
                return state * (abs(state[pivot]) / state[pivot])
        raise RuntimeError("Stabilizer projection vanished on every basis")


def _check_measurable(n: int, pauli: PauliString):
    if pauli.n != n:
        raise InvalidSizeError(
            "Pauli on {} qubits measured on {} qubits".format(pauli.n, n)
        )
    if not pauli.is_hermitian():
        raise InvalidMeasurementError(
            "Cannot measure non-Hermitian {}".format(pauli)
        )


def identity_tableau(n: int) -> StabilizerTableau:
    return StabilizerTableau.identity(n)


def apply_clifford(
    t: StabilizerTableau, gate: str, targets: Sequence[int]
) -> StabilizerTableau:
    return t.apply(gate, targets)


def measure_pauli(
    t: StabilizerTableau,
    p: PauliString,
    rng: Optional[np.random.Generator] = None,
    forced: Optional[int] = None,
) -> Tuple[int, bool, StabilizerTableau]:
    outcome, deterministic = t.measure(p, rng=rng, forced=forced)
    logger.debug(
        "Measured %s -> %d (%s)",
        p,
        outcome,
        "deterministic" if deterministic else "random",
    )
    return outcome, deterministic, t


def peek_pauli(t: StabilizerTableau, p: PauliString) -> int:
    return t.peek(p)
