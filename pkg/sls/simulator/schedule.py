# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence

import numpy as np

from sls.code.analysis import analyze
from sls.constants import StepLabel
from sls.exception import ConsistencyError
from sls.pauli.gf2 import solve_affine_gf2
from sls.pauli.pauli import PauliOperator
from sls.simulator.state import MeasurementRecord, StabilizerState, inject_error
from sls.surgery.merge import MergeResult

logger = logging.getLogger(__name__)


@dataclass
class MergeScheduleResult:
    m1: int
    records: List[MeasurementRecord]
    frame: List[PauliOperator]
    syndrome: List[int]
    state: StabilizerState

    @property
    def outcomes(self) -> List[int]:
        return [record.outcome for record in self.records if record.step_label == StepLabel.MERGE]


@dataclass
class SplitScheduleResult:
    records: List[MeasurementRecord]
    correction: PauliOperator
    state: StabilizerState
    ancilla_outcomes: List[int] = field(default_factory=list)


def run_merge_schedule(
    state: StabilizerState,
    result: MergeResult,
    rounds: int = 1,
    errors: Optional[Mapping[StepLabel, Sequence[PauliOperator]]] = None,
) -> MergeScheduleResult:
    """
    Measure every merging operator in boundary order; m1 is the product of the outcomes. The merged stabilizer
    generators are then signed by their post-merge values (the Pauli frame) and re-measured `rounds` times.

    Errors listed under StepLabel.BEFORE_ROUNDS are applied between the merge and the first sweep; the syndrome is the
    list of frame positions that read -1 in the first sweep. Without injected errors every sweep must read +1.
    """
    errors = errors or {}
    records = []
    m1 = 1
    for operator in result.merging_operators:
        record = state.measure(operator, StepLabel.MERGE)
        records.append(record)
        m1 *= record.outcome

    joint = state.expectation(result.joint_logical)
    if joint != m1:
        raise ConsistencyError(f"Joint logical reads {joint} after the merge, expected {m1}")

    frame = []
    for stabilizer in analyze(result.merged).stabilizer_generators:
        value = state.expectation(stabilizer)
        if value == 0:
            raise ConsistencyError(f"Merged stabilizer {stabilizer} is not sharp after the merge")
        frame.append(stabilizer if value == 1 else -stabilizer)

    injected = list(errors.get(StepLabel.BEFORE_ROUNDS, ()))
    for error in injected:
        inject_error(state, error, StepLabel.BEFORE_ROUNDS)

    syndrome = []
    for sweep in range(rounds):
        flagged = []
        for position, stabilizer in enumerate(frame):
            record = state.measure(stabilizer, StepLabel.ROUNDS)
            records.append(record)
            if not record.deterministic:
                raise ConsistencyError(f"Stabilizer {stabilizer} gave a random outcome in sweep {sweep}")
            if record.outcome == -1:
                flagged.append(position)
        if flagged and not injected:
            raise ConsistencyError(f"Noiseless sweep {sweep} flagged stabilizers {flagged}")
        if sweep == 0:
            syndrome = flagged
    logger.debug(f"Merge schedule: m1={m1}, {rounds} sweeps, syndrome {syndrome}")
    return MergeScheduleResult(m1, records, frame, syndrome, state)


def _correction_rows(operators: Sequence[PauliOperator], n_code: int) -> np.ndarray:
    """Rows giving the symplectic product of a code-qubit correction [c_x | c_z] with each operator."""
    mask = (1 << n_code) - 1
    rows = np.zeros((len(operators), 2 * n_code), dtype=np.uint8)
    for i, operator in enumerate(operators):
        x_bits, z_bits = operator.x_bits & mask, operator.z_bits & mask
        for qubit in range(n_code):
            rows[i, qubit] = (z_bits >> qubit) & 1
            rows[i, n_code + qubit] = (x_bits >> qubit) & 1
    return rows


def run_split_schedule(state: StabilizerState, result: MergeResult) -> SplitScheduleResult:
    """
    Measure the ancillas in X, measure the pre-merge stabilizers the merge left indeterminate, then solve a Pauli
    correction on the code qubits that returns every pre-merge stabilizer to +1. The correction commutes with the
    joint logical and, for every bare logical of the merged code, anticommutes with its code part exactly when the
    ancilla outcomes under its X part multiply to -1, so logical information of the merged code carries over.
    """
    records = []
    ancilla_outcomes = []
    for operator in result.ancilla_x:
        record = state.measure(operator, StepLabel.SPLIT)
        records.append(record)
        ancilla_outcomes.append(record.outcome)
    outcome_by_qubit = dict(zip(result.ancilla_ids, ancilla_outcomes))

    stabilizers = list(result.pre_merge_stabilizers)
    for stabilizer in stabilizers:
        if state.expectation(stabilizer) == 0:
            records.append(state.measure(stabilizer, StepLabel.GAUGE_FIX))
    values = [state.expectation(stabilizer) for stabilizer in stabilizers]

    n_code = result.n_code_qubits
    constraints, targets = list(stabilizers), [int(value == -1) for value in values]
    constraints.append(result.joint_logical)
    targets.append(0)
    ancilla_mask = sum(1 << qubit for qubit in result.ancilla_ids)
    for logical in analyze(result.merged).bare_logicals():
        if logical.z_bits & ancilla_mask:
            raise ConsistencyError(f"Merged logical {logical} acts on an ancilla with Z")
        parity = 0
        for qubit, outcome in outcome_by_qubit.items():
            if (logical.x_bits >> qubit) & 1 and outcome == -1:
                parity ^= 1
        constraints.append(logical)
        targets.append(parity)

    solution = solve_affine_gf2(_correction_rows(constraints, n_code), np.array(targets, dtype=np.uint8))
    if solution is None:
        raise ConsistencyError("No Pauli frame restores the pre-merge stabilizers")
    vector = solution.minimize(lambda v: int(np.count_nonzero(v[:n_code] | v[n_code:])))
    correction = PauliOperator.from_symplectic(vector).embed(result.n, range(n_code))
    if not correction.is_identity:
        state.apply_pauli(correction)

    for stabilizer in stabilizers:
        if state.expectation(stabilizer) != 1:
            raise ConsistencyError(f"Pre-merge stabilizer {stabilizer} is not +1 after the correction")
    if state.expectation(result.joint_logical) == 0:
        raise ConsistencyError("Joint logical is not sharp after the split")
    logger.debug(f"Split schedule: ancilla outcomes {ancilla_outcomes}, correction weight {correction.weight}")
    return SplitScheduleResult(records, correction, state, ancilla_outcomes)
