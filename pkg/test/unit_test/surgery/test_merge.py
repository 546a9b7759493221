# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from test.unit_test.utils import single_qubit_errors

import pytest

from sls.code.analysis import analyze, in_gauge_group
from sls.code.distance import distance
from sls.exception import GeometryError, LedgerMismatchError
from sls.lattice.builders import build_bacon_shor, build_surface_code
from sls.pauli.group import in_group
from sls.surgery.merge import MergeSpec, merge_codes
from sls.surgery.verification import Violation, matches_reference_code, verify_lemma2, verify_merged_parameters

CORPUS = ["ssc+ssc", "sc+cc", "bs+bs"]


class TestMergedSubsystemSurfaceCode:
    @pytest.fixture(autouse=True)
    def setup(self, merged_ssc):
        self.result = merged_ssc
        self.analysis = analyze(merged_ssc.merged)

    def test_parameters(self):
        assert (self.analysis.n, self.analysis.k, self.analysis.g, self.analysis.s) == (16, 1, 4, 11)
        assert self.result.delta_g == 2

    def test_distance(self):
        assert distance(self.result.merged) == 2

    def test_merging_generators_are_the_seam_ends(self):
        assert len(self.result.merging_operators) == 3
        assert self.result.merging_generators == (0, 2)

    def test_merging_operators_are_gauge_operators(self):
        for operator in self.result.merging_operators:
            assert in_gauge_group(self.result.merged, operator)

    def test_ledger(self):
        report = verify_merged_parameters(self.result)
        assert report.passed
        assert str(self.analysis.parameters(report.ledger.d)) == "[[16,1,4,2]]"
        assert report.d_min == 2

    def test_boundary_checks_survive_in_the_center(self):
        spec = self.result.spec
        g = spec.code_a.gauge_generators
        members = [
            spec.embed_a(g[4]),
            spec.embed_b(g[7]),
            spec.embed_a(g[1] * g[2]) * spec.embed_b(g[4]),
            spec.embed_a(g[7]) * spec.embed_b(g[1] * g[2]),
            self.result.joint_logical,
        ]
        for member in members:
            assert all(member.commutes_with(op) for op in self.result.merging_operators)
            assert in_group(member, self.analysis.stabilizer_generators, ignore_phase=True)

    def test_witnesses_pair_with_the_far_boundary_checks(self):
        spec = self.result.spec
        g = spec.code_a.gauge_generators
        stabilizers = self.analysis.stabilizer_generators
        (first, w0), (last, w2) = self.result.lemma2_witnesses
        assert not first.commutes_with(spec.embed_b(g[4]))
        assert not last.commutes_with(spec.embed_a(g[7]))
        assert in_group(w0 * spec.embed_b(g[4]), stabilizers, ignore_phase=True)
        assert in_group(w2 * spec.embed_a(g[7]), stabilizers, ignore_phase=True)


def test_sc_cc_merge(merged_sc_cc):
    analysis = analyze(merged_sc_cc.merged)
    assert (analysis.n, analysis.k, analysis.g, analysis.s) == (18, 1, 2, 15)
    assert merged_sc_cc.delta_g == 2
    assert [op.weight for op in merged_sc_cc.merging_operators] == [3, 4, 3]
    assert merged_sc_cc.ancilla_ids == (16, 17)


@pytest.mark.parametrize("merge", CORPUS)
def test_ledger_law(corpus_merges, merge):
    result = corpus_merges[merge]
    report = verify_merged_parameters(result, check_distance=False)
    assert report.violations == []
    spec = result.spec
    a, b, m = analyze(spec.code_a), analyze(spec.code_b), analyze(result.merged)
    assert m.k == a.k + b.k - 1
    assert m.g == a.g + b.g + result.delta_g
    assert m.n == a.n + b.n + len(result.ancilla_ids)
    assert report.ancilla.gauge_qubits == 0


@pytest.mark.parametrize("merge", CORPUS)
def test_lemma2_witnesses(corpus_merges, merge):
    result = corpus_merges[merge]
    generators = result.merging_generator_operators()
    witnesses = verify_lemma2(result)
    assert len(witnesses) == len(generators)
    for i, (generator, witness) in enumerate(witnesses):
        assert generator == generators[i]
        assert in_group(witness, result.pre_merge_stabilizers, ignore_phase=True)
        for j, other in enumerate(generators):
            assert witness.commutes_with(other) == (i != j)


@pytest.mark.parametrize("merge", CORPUS)
def test_joint_logical_is_merged_stabilizer(corpus_merges, merge):
    result = corpus_merges[merge]
    assert in_group(result.joint_logical, analyze(result.merged).stabilizer_generators, ignore_phase=True)
    assert not in_group(result.joint_logical, result.pre_merge_stabilizers, ignore_phase=True)


@pytest.mark.parametrize("merge", ["ssc+ssc", "sc+cc"])
def test_single_qubit_errors_are_detected_or_gauge(corpus_merges, merge):
    merged = corpus_merges[merge].merged
    stabilizers = analyze(merged).stabilizer_generators
    for error in single_qubit_errors(merged.n):
        detected = any(not error.commutes_with(s) for s in stabilizers)
        assert detected or in_gauge_group(merged, error), f"{error} is undetectable"


def test_ledger_violation_raises(corpus_merges):
    report = verify_merged_parameters(corpus_merges["bs+bs"], check_distance=False)
    report.raise_for_violations()
    broken = report.copy(update={"violations": [Violation(quantity="g", expected="10", actual="9")]})
    assert not broken.passed
    with pytest.raises(LedgerMismatchError) as excinfo:
        broken.raise_for_violations()
    assert excinfo.value.quantity == "g"


@pytest.mark.parametrize("merge", CORPUS)
def test_locality(corpus_merges, merge):
    report = verify_merged_parameters(corpus_merges[merge], check_distance=False)
    assert report.locality.r_after - report.locality.r_before <= 2


def test_bacon_shor_closure(merged_bacon_shor):
    assert analyze(merged_bacon_shor.merged).g == 10
    assert matches_reference_code(merged_bacon_shor.merged, build_bacon_shor(6, 3))
    assert not matches_reference_code(merged_bacon_shor.merged, build_bacon_shor(3, 6))


def test_merge_needs_geometry(ssc):
    with pytest.raises(GeometryError):
        merge_codes(ssc.with_geometry(None), ssc)


def test_merge_spec_embeddings(surface3, color3):
    spec = MergeSpec.create(surface3, color3, pauli_type="Z")
    assert spec.n_pairs == 3
    assert spec.n_total == 18
    assert spec.embed_b(color3.gauge_generators[0]).n == 18
    assert spec.embedding_a == tuple(range(9))


def test_unequal_boundary_lengths(surface3):
    result = merge_codes(surface3, build_surface_code(5), pauli_type="Z")
    assert [op.weight for op in result.merging_operators] == [3, 4, 4, 3, 2]
    assert result.delta_g == 4
    report = verify_merged_parameters(result, check_distance=False)
    assert report.violations == []
    analysis = analyze(result.merged)
    assert str(analysis.parameters(distance(result.merged, max_weight=3))) == "[[38,1,4,3]]"


def test_capped_input_distance_is_noted(merged_sc_cc):
    report = verify_merged_parameters(merged_sc_cc, max_weight=2)
    assert (report.code_a.d, report.code_b.d, report.d_min) == (None, None, None)
    assert report.violations == []
    assert len(report.notes) == 1
    assert report.notes[0].startswith("d_A and d_B exceed")
    assert verify_merged_parameters(merged_sc_cc, check_distance=False).notes == []
