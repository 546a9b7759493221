# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import pytest

from sls.code.analysis import analyze
from sls.exception import InvalidCodeError
from sls.pauli.group import groups_equal, in_group
from sls.pauli.pauli import PauliOperator
from sls.surgery.gauge import gauge_fix, split


def test_gauge_fix_consumes_gauge_qubit(ssc):
    ((x_like, z_like),) = analyze(ssc).gauge_pairs
    fixed = gauge_fix(ssc, [z_like])
    analysis = analyze(fixed)
    assert (analysis.k, analysis.g, analysis.s) == (1, 0, 7)
    assert in_group(z_like, analysis.stabilizer_generators, ignore_phase=True)


def test_gauge_fix_empty_set(ssc):
    assert gauge_fix(ssc, []) is ssc


def test_gauge_fix_rejects_non_gauge_operator(ssc):
    logical = analyze(ssc).logical_pairs[0][0]
    with pytest.raises(InvalidCodeError):
        gauge_fix(ssc, [logical])


def test_gauge_fix_rejects_anticommuting_set(ssc):
    ((x_like, z_like),) = analyze(ssc).gauge_pairs
    with pytest.raises(InvalidCodeError):
        gauge_fix(ssc, [x_like, z_like])


@pytest.mark.parametrize("merge", ["ssc+ssc", "sc+cc", "bs+bs"])
def test_split_restores_inputs(corpus_merges, merge):
    result = corpus_merges[merge]
    split_result = split(result)
    spec = result.spec
    a, b = analyze(spec.code_a), analyze(spec.code_b)
    fixed = analyze(split_result.fixed)
    assert fixed.k == a.k + b.k - 1
    assert fixed.g == a.g + b.g
    assert split_result.record.operator == result.joint_logical
    assert split_result.record.ancilla_ids == result.ancilla_ids
    expected = list(result.generators_a) + list(result.generators_b) + list(result.ancilla_x) + [result.joint_logical]
    assert groups_equal(split_result.fixed.gauge_generators, expected)


def test_joint_record_json(merged_sc_cc):
    record = split(merged_sc_cc).record.to_json()
    assert record["ancilla_ids"] == [16, 17]
    assert PauliOperator.from_string(record["operator"]).weight == 6
