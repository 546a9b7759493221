# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import json
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import Field

from sls.code.analysis import analyze, partner_logical
from sls.code.distance import distance
from sls.code.subsystem_code import SubsystemCode
from sls.common.config_utils import ConfigBase
from sls.constants import LogicalBasis, PauliType, StepLabel
from sls.exception import TeleportationError
from sls.pauli.pauli import PauliOperator
from sls.simulator.encoding import encode, logical_operator
from sls.simulator.schedule import run_merge_schedule, run_split_schedule
from sls.simulator.state import StabilizerState
from sls.surgery.merge import merge_codes

logger = logging.getLogger(__name__)


class TeleportReport(ConfigBase):
    seed: int
    input_label: LogicalBasis
    m1: int
    m2: int
    ancilla_outcomes: List[int]
    correction: str
    final_expectations: Dict[str, int]
    expected_expectations: Dict[str, int]
    passed: bool = Field(..., alias="pass")
    trace: List[dict] = []

    class Config:
        allow_population_by_field_name = True

    def to_json(self) -> dict:
        return json.loads(self.json(by_alias=True))

    def raise_for_failure(self):
        if not self.passed:
            raise TeleportationError(
                f"Teleporting {self.input_label.value} (seed {self.seed}) ended in {self.final_expectations}",
                self.trace,
            )


def _oriented_pair(boundary: PauliOperator, partner: PauliOperator) -> Tuple[PauliOperator, PauliOperator]:
    """(X_L, Z_L) pair made of the boundary logical and its partner; an X-type boundary logical plays X_L."""
    return (boundary, partner) if boundary.pauli_type == PauliType.X.value else (partner, boundary)


def _gauge_choices(code: SubsystemCode, logicals: Sequence[PauliOperator]) -> List[str]:
    choices = []
    for x_like, z_like in analyze(code).gauge_pairs:
        if all(z_like.commutes_with(op) for op in logicals):
            choices.append(PauliType.Z.value)
        elif all(x_like.commutes_with(op) for op in logicals):
            choices.append(PauliType.X.value)
        else:
            raise TeleportationError(f"No gauge choice of code '{code.name}' commutes with its boundary logicals")
    return choices


class Teleporter:
    """
    Logical teleportation from `input_code` into `memory_code` through one merge and split.

    The memory code sits left of the seam and the input code right of it. With boundary logicals P (on both codes) and
    their partners Q, the memory starts in the +1 eigenstate of Q; the merge measures P (x) P (m1), the split restores
    both codes, Q is measured on the input (m2), and the memory receives Q when m1 = -1 and P when m2 = -1.

    The merge is prepared once; `run` executes the protocol for one input label and seed.
    """

    def __init__(
        self,
        input_code: SubsystemCode,
        memory_code: SubsystemCode,
        with_ancillas: bool = True,
        pauli_type: Optional[Union[PauliType, str]] = None,
        rounds: Optional[int] = None,
    ):
        self.input_code = input_code
        self.memory_code = memory_code
        self.result = merge_codes(memory_code, input_code, with_ancillas=with_ancillas, pauli_type=pauli_type)
        spec = self.result.spec
        boundary_memory, boundary_input = spec.logical_a.operator, spec.logical_b.operator
        self.partner_memory = partner_logical(memory_code, boundary_memory)
        self.partner_input = partner_logical(input_code, boundary_input)
        self.pair_memory = _oriented_pair(boundary_memory, self.partner_memory)
        self.pair_input = _oriented_pair(boundary_input, self.partner_input)
        self.boundary_memory = boundary_memory
        self.gauge_memory = _gauge_choices(memory_code, self.pair_memory)
        self.gauge_input = _gauge_choices(input_code, self.pair_input)
        boundary_is_x = boundary_memory.pauli_type == PauliType.X.value
        self.memory_label = LogicalBasis.Z_PLUS if boundary_is_x else LogicalBasis.X_PLUS
        if rounds is None:
            distances = [d for d in (distance(memory_code), distance(input_code)) if d is not None]
            rounds = min(distances) if distances else 1
        self.rounds = rounds

    def prepare(self, input_label: Union[LogicalBasis, str], seed: int) -> StabilizerState:
        memory = encode(self.memory_code, [self.memory_label], self.gauge_memory, [self.pair_memory], seed=seed)
        data = encode(self.input_code, [input_label], self.gauge_input, [self.pair_input], seed=seed)
        ancillas = StabilizerState.plus_state(len(self.result.ancilla_ids), seed=seed)
        return memory.tensor(data).tensor(ancillas, seed=seed)

    def run(self, input_label: Union[LogicalBasis, str], seed: int = 0) -> TeleportReport:
        input_label = LogicalBasis(input_label)
        spec = self.result.spec
        state = self.prepare(input_label, seed)

        merge = run_merge_schedule(state, self.result, rounds=self.rounds)
        split = run_split_schedule(state, self.result)
        m2 = state.measure(spec.embed_b(self.partner_input), StepLabel.READOUT).outcome

        corrections = []
        if merge.m1 == -1:
            corrections.append(spec.embed_a(self.partner_memory))
        if m2 == -1:
            corrections.append(spec.embed_a(self.boundary_memory))
        for correction in corrections:
            state.apply_pauli(correction)

        final = {
            axis: state.expectation(spec.embed_a(logical_operator(self.pair_memory, axis))) for axis in ("X", "Y", "Z")
        }
        expected = input_label.expectations()
        passed = final == expected
        if not passed:
            logger.warning(f"Teleporting {input_label.value} with seed {seed} gave {final}, expected {expected}")
        return TeleportReport(
            seed=seed,
            input_label=input_label,
            m1=merge.m1,
            m2=m2,
            ancilla_outcomes=split.ancilla_outcomes,
            correction=str(split.correction),
            final_expectations=final,
            expected_expectations=expected,
            passed=passed,
            trace=[] if passed else [record.to_json() for record in state.records],
        )


def teleport(
    input_code: SubsystemCode,
    memory_code: SubsystemCode,
    input_state_label: Union[LogicalBasis, str],
    seed: int = 0,
    with_ancillas: bool = True,
) -> TeleportReport:
    return Teleporter(input_code, memory_code, with_ancillas=with_ancillas).run(input_state_label, seed)
