# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from sls.constants import StepLabel
from sls.exception import ConsistencyError, DimensionError
from sls.pauli.gf2 import GF2Basis
from sls.pauli.group import ordered_product, select
from sls.pauli.pauli import PauliOperator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementRecord:
    operator: PauliOperator
    outcome: int
    deterministic: bool
    step_label: StepLabel

    def to_json(self) -> dict:
        return {
            "operator": str(self.operator),
            "outcome": self.outcome,
            "deterministic": self.deterministic,
            "step": self.step_label.value,
        }


class StabilizerState:
    """
    Pure stabilizer state on n qubits held as n signed, independent, pairwise commuting Hermitian generators.

    Deterministic outcomes are read off by expressing the measured operator as a product of generators; random
    outcomes come from a Philox stream seeded with `seed`, so equal seeds give equal record streams.
    """

    def __init__(self, generators: Sequence[PauliOperator], seed: int = 0, check: bool = False):
        self._generators: List[PauliOperator] = list(generators)
        self.n = len(self._generators)
        self.seed = seed
        self.check = check
        self._rng = np.random.Generator(np.random.Philox(seed))
        self._basis: Optional[GF2Basis] = None
        self.records: List[MeasurementRecord] = []
        self.validate()

    @property
    def generators(self) -> Tuple[PauliOperator, ...]:
        return tuple(self._generators)

    def validate(self):
        """Raise ConsistencyError unless the generators define a valid pure stabilizer state."""
        for generator in self._generators:
            if generator.n != self.n:
                raise DimensionError(f"Generator {generator} does not act on {self.n} qubits")
            if not generator.is_hermitian:
                raise ConsistencyError(f"Generator {generator} is not Hermitian")
        for i, a in enumerate(self._generators):
            for b in self._generators[i + 1 :]:
                if not a.commutes_with(b):
                    raise ConsistencyError(f"Generators {a} and {b} anticommute")
        if self._get_basis().rank != self.n:
            raise ConsistencyError("Generators are not independent")

    def _get_basis(self) -> GF2Basis:
        if self._basis is None:
            self._basis = GF2Basis(g.packed for g in self._generators)
        return self._basis

    def _mutated(self, bits_changed: bool):
        if bits_changed:
            self._basis = None
        if self.check:
            self.validate()

    def _check_operator(self, p: PauliOperator):
        if p.n != self.n:
            raise DimensionError(f"Operator on {p.n} qubits measured on a {self.n}-qubit state")
        if not p.is_hermitian:
            raise ValueError(f"Cannot measure the non-Hermitian operator {p}")

    def _deterministic_value(self, p: PauliOperator) -> int:
        combination = self._get_basis().express(p.packed)
        if combination is None:
            raise ConsistencyError(f"{p} commutes with a complete generator set but is not in the group")
        product = ordered_product(select(self._generators, combination), self.n)
        return 1 if (p.phase_exp - product.phase_exp) % 4 == 0 else -1

    def expectation(self, p: PauliOperator) -> int:
        """+1 or -1 when `p` is sharp on this state, 0 when measuring it would give a random outcome."""
        self._check_operator(p)
        if any(not p.commutes_with(g) for g in self._generators):
            return 0
        return self._deterministic_value(p)

    def measure(self, p: PauliOperator, step_label: StepLabel = StepLabel.READOUT) -> MeasurementRecord:
        self._check_operator(p)
        anticommuting = [i for i, g in enumerate(self._generators) if not p.commutes_with(g)]
        if not anticommuting:
            record = MeasurementRecord(p, self._deterministic_value(p), True, StepLabel(step_label))
        else:
            pivot = anticommuting[0]
            for i in anticommuting[1:]:
                self._generators[i] = self._generators[i] * self._generators[pivot]
            outcome = 1 - 2 * int(self._rng.integers(0, 2))
            self._generators[pivot] = p if outcome == 1 else -p
            self._mutated(bits_changed=True)
            record = MeasurementRecord(p, outcome, False, StepLabel(step_label))
        self.records.append(record)
        return record

    def apply_pauli(self, e: PauliOperator):
        """Conjugate the state by `e`: generators anticommuting with it change sign."""
        if e.n != self.n:
            raise DimensionError(f"Operator on {e.n} qubits applied to a {self.n}-qubit state")
        self._generators = [g if g.commutes_with(e) else -g for g in self._generators]
        self._mutated(bits_changed=False)

    def tensor(self, other: "StabilizerState", seed: Optional[int] = None) -> "StabilizerState":
        """Product state with this state's qubits first."""
        n = self.n + other.n
        generators = [g.embed(n, range(self.n)) for g in self._generators]
        generators += [g.embed(n, range(self.n, n)) for g in other.generators]
        return StabilizerState(generators, seed=self.seed if seed is None else seed, check=self.check)

    @classmethod
    def plus_state(cls, n: int, seed: int = 0) -> "StabilizerState":
        return cls([PauliOperator.single(n, qubit, "X") for qubit in range(n)], seed=seed)


def measure_pauli(
    state: StabilizerState, p: PauliOperator, step_label: Union[StepLabel, str] = StepLabel.READOUT
) -> Tuple[MeasurementRecord, StabilizerState]:
    return state.measure(p, StepLabel(step_label)), state


def inject_error(
    state: StabilizerState, e: PauliOperator, when: Union[StepLabel, str] = StepLabel.BEFORE_ROUNDS
) -> StabilizerState:
    """Apply the Pauli error `e`; `when` tags the protocol step for the log."""
    if not e.is_hermitian:
        raise ValueError(f"Error operator {e} is not Hermitian")
    logger.debug(f"Injecting {e} at step {StepLabel(when).value}")
    state.apply_pauli(e)
    return state
