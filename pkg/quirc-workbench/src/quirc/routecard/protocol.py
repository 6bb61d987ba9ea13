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
Exact checks of the card's entanglement protocols on a stabilizer tableau.

The Bell protocol prepares a ``nu``-qubit linear graph state, pre-rotates it
so the interior Y measurements leave a Bell pair between the two end
qubits, and fixes the Pauli frame on the first qubit with
``Z**sum((nu - i) * m_i) X**sum(m_i)`` over the measured qubits ``i``
(counted from 1). Qubit indices in code are zero-based; the Hadamard goes
on the last qubit of the chain.
"""

from dataclasses import dataclass
from itertools import product
from logging import getLogger
from typing import Optional, Sequence, Tuple

from quirc.paulicore import ImpossibleOutcomeError
from quirc.paulicore import PauliString, StabilizerTableau, conjugate

logger = getLogger(__name__)

MAX_CHAIN = 16


@dataclass(frozen=True)
class BellBranch:
    outcomes: Tuple[int, ...]
    x_correction: int
    z_correction: int
    xx: int
    zz: int

    @property
    def ok(self) -> bool:
        return self.xx == 1 and self.zz == 1


@dataclass(frozen=True)
class BellVerdict:
    nu: int
    branches: Tuple[BellBranch, ...]

    @property
    def ok(self) -> bool:
        return all(branch.ok for branch in self.branches)

    @property
    def failing_branch(self) -> Optional[BellBranch]:
        return next((b for b in self.branches if not b.ok), None)


def bell_correction(nu: int, outcomes: Sequence[int]) -> Tuple[int, int]:
    """``(x, z)`` correction bits on the first qubit."""
    measured = range(2, nu)
    x_power = sum(outcomes)
    z_power = sum((nu - i) * m for i, m in zip(measured, outcomes))
    return x_power % 2, z_power % 2


def _prepare_chain(nu: int) -> StabilizerTableau:
    tableau = StabilizerTableau.identity(nu)
    for qubit in range(nu):
        tableau.apply("H", [qubit])
    for qubit in range(2, nu):
        tableau.apply("S_DAG", [qubit])
    for _ in range((nu - 2) % 4):
        tableau.apply("S_DAG", [0])
    for qubit in range(nu - 1):
        tableau.apply("CZ", [qubit, qubit + 1])
    tableau.apply("H", [nu - 1])
    return tableau


def _run_branch(nu: int, outcomes: Tuple[int, ...]) -> BellBranch:
    tableau = _prepare_chain(nu)
    x_bit, z_bit = bell_correction(nu, outcomes)
    try:
        for qubit, outcome in zip(range(1, nu - 1), outcomes):
            tableau.measure(
                PauliString.single(nu, qubit, "Y"), forced=outcome
            )
    except ImpossibleOutcomeError:
        logger.warning("Branch %s is not reachable", outcomes)
        return BellBranch(outcomes, x_bit, z_bit, 0, 0)
    if x_bit:
        tableau.apply("X", [0])
    if z_bit:
        tableau.apply("Z", [0])
    xx = tableau.peek(PauliString.sparse(nu, {0: "X", nu - 1: "X"}))
    zz = tableau.peek(PauliString.sparse(nu, {0: "Z", nu - 1: "Z"}))
    return BellBranch(outcomes, x_bit, z_bit, xx, zz)


def bell_via_graph_state(
    nu: int, outcomes: Optional[Sequence[int]] = None
) -> BellVerdict:
    """Runs one outcome branch, or all ``2**(nu - 2)`` when ``outcomes``
    is None, and checks the end qubits for ``+XX`` and ``+ZZ``."""
    if not 2 <= nu <= MAX_CHAIN:
        raise ValueError(
            "Chain length must be in 2..{}, got {}".format(MAX_CHAIN, nu)
        )
    if outcomes is not None:
        if len(outcomes) != nu - 2:
            raise ValueError(
                "Need {} outcomes for nu={}, got {}".format(
                    nu - 2, nu, len(outcomes)
                )
            )
        branches = [tuple(int(m) & 1 for m in outcomes)]
    else:
        branches = list(product((0, 1), repeat=nu - 2))
    verdict = BellVerdict(nu, tuple(_run_branch(nu, b) for b in branches))
    if not verdict.ok:
        logger.error(
            "Bell protocol failed for nu=%d on branch %s",
            nu,
            verdict.failing_branch.outcomes,
        )
    return verdict


# Remote CX: reference halves hold Choi copies of control and target.
REF_C, REF_T, CONTROL, TARGET, EP_C, EP_T = range(6)
NUM_REMOTE_QUBITS = 6
PAULI_LETTERS = "IXYZ"


@dataclass(frozen=True)
class RemoteCXRow:
    branch: Tuple[int, int]
    input: str
    output: str
    expected: str
    ok: bool


@dataclass(frozen=True)
class RemoteCXVerdict:
    table: Tuple[RemoteCXRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.table)

    def mismatches(self) -> Tuple[RemoteCXRow, ...]:
        return tuple(row for row in self.table if not row.ok)


def _two_qubit(text: str) -> PauliString:
    """Signed two-qubit Pauli on (control, target), e.g. ``"+XZ"``."""
    return PauliString.from_text(text)


def _embed(pauli: PauliString, first: int, second: int) -> PauliString:
    letters = {}
    for local, qubit in ((0, first), (1, second)):
        letter = pauli.letter(local)
        if letter != "I":
            letters[qubit] = letter
    return PauliString.sparse(NUM_REMOTE_QUBITS, letters, pauli.phase)


def _transpose(pauli: PauliString) -> PauliString:
    """``P^T``: one sign flip per Y letter."""
    flips = sum(pauli.letter(q) == "Y" for q in range(pauli.n))
    return pauli.negated() if flips % 2 else pauli.copy()


def _remote_cx_state(branch: Tuple[int, int]) -> StabilizerTableau:
    m1, m2 = branch
    tableau = StabilizerTableau.identity(NUM_REMOTE_QUBITS)
    for a, b in ((REF_C, CONTROL), (REF_T, TARGET), (EP_C, EP_T)):
        tableau.apply("H", [a])
        tableau.apply("CX", [a, b])
    tableau.apply("CX", [CONTROL, EP_C])
    tableau.apply("CX", [EP_T, TARGET])
    tableau.measure(
        PauliString.single(NUM_REMOTE_QUBITS, EP_C, "Z"), forced=m1
    )
    if m1:
        tableau.apply("X", [TARGET])
    tableau.measure(
        PauliString.single(NUM_REMOTE_QUBITS, EP_T, "X"), forced=m2
    )
    if m2:
        tableau.apply("Z", [CONTROL])
    return tableau


def _all_paulis():
    for a, b in product(PAULI_LETTERS, repeat=2):
        yield _two_qubit("+" + a + b)


def _observed_output(
    tableau: StabilizerTableau, reference: PauliString
) -> str:
    for candidate in _all_paulis():
        for signed in (candidate, candidate.negated()):
            operator = reference * _embed(signed, CONTROL, TARGET)
            if tableau.peek(operator) == 1:
                return str(signed)
    return "?"


def remote_cx_check() -> RemoteCXVerdict:
    """Compares the EP-mediated CX with an ideal CX on all Pauli inputs
    and all four measurement branches."""
    rows = []
    for branch in product((0, 1), repeat=2):
        try:
            tableau = _remote_cx_state(branch)
        except ImpossibleOutcomeError:
            for pauli in _all_paulis():
                rows.append(
                    RemoteCXRow(branch, str(pauli), "?", "?", False)
                )
            continue
        for pauli in _all_paulis():
            expected = conjugate(pauli, "CX", [0, 1])
            reference = _embed(_transpose(pauli), REF_C, REF_T)
            operator = reference * _embed(expected, CONTROL, TARGET)
            ok = tableau.peek(operator) == 1
            output = (
                str(expected) if ok else _observed_output(tableau, reference)
            )
            rows.append(
                RemoteCXRow(branch, str(pauli), output, str(expected), ok)
            )
    verdict = RemoteCXVerdict(tuple(rows))
    if not verdict.ok:
        for row in verdict.mismatches():
            logger.error(
                "Remote CX branch %s maps %s to %s, expected %s",
                row.branch,
                row.input,
                row.output,
                row.expected,
            )
    return verdict
