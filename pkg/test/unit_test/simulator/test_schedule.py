# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import pytest

from sls.constants import StepLabel
from sls.exception import ConsistencyError
from sls.pauli.pauli import PauliOperator
from sls.simulator.schedule import run_merge_schedule, run_split_schedule
from test.unit_test.utils import merged_product_state

MERGES = ["ssc+ssc", "sc+cc", "bs+bs"]


@pytest.mark.parametrize("name", MERGES)
def test_joint_logical_equals_merge_outcome(corpus_merges, name):
    result = corpus_merges[name]
    for seed in range(100):
        state = merged_product_state(result, seed=seed)
        merge = run_merge_schedule(state, result)
        assert state.expectation(result.joint_logical) == merge.m1
        assert len(merge.outcomes) == len(result.merging_operators)
        assert merge.syndrome == []


@pytest.mark.parametrize("name", MERGES)
def test_split_restores_pre_merge_stabilizers(corpus_merges, name):
    result = corpus_merges[name]
    for seed in range(20):
        state = merged_product_state(result, labels=("X+", "Y-"), seed=seed)
        merge = run_merge_schedule(state, result, rounds=2)
        split = run_split_schedule(state, result)
        for stabilizer in result.pre_merge_stabilizers:
            assert state.expectation(stabilizer) == 1
        assert state.expectation(result.joint_logical) == merge.m1
        assert len(split.ancilla_outcomes) == len(result.ancilla_ids)
        assert all(record.step_label == StepLabel.SPLIT for record in split.records[: len(result.ancilla_ids)])


def test_merge_is_reproducible(merged_sc_cc):
    outcomes = []
    for _ in range(2):
        state = merged_product_state(merged_sc_cc, seed=11)
        outcomes.append(run_merge_schedule(state, merged_sc_cc).outcomes)
    assert outcomes[0] == outcomes[1]


def test_injected_error_is_flagged(merged_ssc):
    state = merged_product_state(merged_ssc, seed=2)
    error = PauliOperator.single(merged_ssc.n, 0, "Y")
    merge = run_merge_schedule(state, merged_ssc, rounds=3, errors={StepLabel.BEFORE_ROUNDS: [error]})
    assert merge.syndrome
    frame_records = [record for record in merge.records if record.step_label == StepLabel.ROUNDS]
    assert len(frame_records) == 3 * len(merge.frame)


def test_stabilizer_error_leaves_no_syndrome(merged_ssc):
    state = merged_product_state(merged_ssc, seed=2)
    stabilizer = merged_ssc.pre_merge_stabilizers[0]
    merge = run_merge_schedule(state, merged_ssc, errors={StepLabel.BEFORE_ROUNDS: [stabilizer]})
    assert merge.syndrome == []
    assert state.expectation(merged_ssc.joint_logical) == merge.m1
