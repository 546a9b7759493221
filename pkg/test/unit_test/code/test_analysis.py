# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from test.unit_test.utils import single_qubit_errors

import pytest

from sls.code.analysis import (
    analyze,
    center,
    find_logical_in_region,
    in_gauge_group,
    is_bare_logical,
    is_correctable,
    is_dressed_logical,
    partner_logical,
    reduce_to_support,
)
from sls.code.subsystem_code import SubsystemCode
from sls.exception import DimensionError, InvalidCodeError
from sls.pauli.group import groups_equal, in_group
from sls.pauli.pauli import PauliOperator


def code_from_strings(*texts, name="test"):
    return SubsystemCode([PauliOperator.from_string(text) for text in texts], name=name)


class TestSubsystemSurfaceCode:
    @pytest.fixture(autouse=True)
    def setup(self, ssc):
        self.code = ssc
        self.analysis = analyze(ssc)

    def test_parameters(self):
        assert (self.analysis.n, self.analysis.k, self.analysis.g, self.analysis.s) == (8, 1, 1, 6)

    def test_center_matches_boundary_pairs_and_triangle_products(self):
        g = self.code.gauge_generators
        expected = [g[4], g[5], g[6], g[7], g[0] * g[3], g[1] * g[2]]
        assert groups_equal(center(self.code), expected)
        assert groups_equal(self.analysis.stabilizer_generators, expected)

    def test_logical_pairs(self):
        ((x_logical, z_logical),) = self.analysis.logical_pairs
        assert not x_logical.commutes_with(z_logical)
        for operator in (x_logical, z_logical):
            assert is_bare_logical(self.code, operator)
            assert is_dressed_logical(self.code, operator)
        assert partner_logical(self.code, x_logical).equals_up_to_phase(z_logical)

    def test_gauge_pair(self):
        ((a, b),) = self.analysis.gauge_pairs
        assert not a.commutes_with(b)
        assert in_gauge_group(self.code, a) and in_gauge_group(self.code, b)
        assert not is_dressed_logical(self.code, a)

    def test_stabilizers_are_hermitian_group_elements(self):
        for stabilizer in self.analysis.stabilizer_generators:
            assert stabilizer.is_hermitian
            assert in_group(stabilizer, self.code.gauge_generators, ignore_phase=True)


@pytest.mark.parametrize(
    "fixture,parameters",
    [("surface3", (9, 1, 0, 8)), ("color3", (7, 1, 0, 6)), ("bacon_shor3", (9, 1, 4, 4))],
)
def test_family_parameters(request, fixture, parameters):
    analysis = analyze(request.getfixturevalue(fixture))
    assert (analysis.n, analysis.k, analysis.g, analysis.s) == parameters


def test_analysis_is_cached(surface3):
    assert analyze(surface3) is analyze(surface3)


def test_center_with_minus_identity():
    with pytest.raises(InvalidCodeError):
        analyze(code_from_strings("XX", "YY", "ZZ"))


def test_non_hermitian_generator():
    with pytest.raises(InvalidCodeError):
        SubsystemCode([PauliOperator.from_string("+iXX")], name="bad")


def test_generator_dimension_mismatch():
    with pytest.raises(DimensionError):
        code_from_strings("XX", "ZZZ")


def test_stabilizer_code_has_no_gauge_qubits():
    analysis = analyze(code_from_strings("XXXX", "ZZZZ"))
    assert (analysis.k, analysis.g, analysis.s) == (2, 0, 2)


def test_reduce_to_support(surface3):
    x_logical, z_logical = analyze(surface3).logical_pairs[0]
    first_column = surface3.geometry.qubits_in_columns(1, 1)
    reduced = reduce_to_support(z_logical, surface3, first_column, pauli_type="Z")
    assert reduced is not None
    assert set(reduced.support()) <= set(first_column)
    assert reduced.pauli_type == "Z"
    assert reduced.weight == 3
    assert is_dressed_logical(surface3, reduced)
    # an X-type string along a column does not exist
    assert reduce_to_support(x_logical, surface3, first_column, pauli_type="X") is None


def test_find_logical_in_region(surface3):
    first_column = surface3.geometry.qubits_in_columns(1, 1)
    logical = find_logical_in_region(surface3, first_column)
    assert logical is not None
    assert is_dressed_logical(surface3, logical)
    assert find_logical_in_region(surface3, first_column[:2]) is None


def test_is_correctable(surface3):
    errors = single_qubit_errors(surface3.n)
    assert is_correctable(surface3, errors)
    two_qubit = [PauliOperator.z_type(surface3.n, support) for support in ((0, 3), (6,))]
    assert not is_correctable(surface3, two_qubit)


def test_is_correctable_on_subsystem_surface_code(ssc):
    identity = PauliOperator.identity(ssc.n)
    for error in single_qubit_errors(ssc.n):
        assert is_correctable(ssc, [identity, error])
    assert not is_correctable(ssc, [PauliOperator.single(ssc.n, 1, "Z"), PauliOperator.single(ssc.n, 5, "Z")])
    assert not is_correctable(ssc, [PauliOperator.single(ssc.n, 0, "X"), PauliOperator.single(ssc.n, 4, "X")])
    errors = single_qubit_errors(ssc.n)
    for i, a in enumerate(errors):
        for b in errors[i + 1 :]:
            assert is_correctable(ssc, [a, b]) == (not is_dressed_logical(ssc, a * b))


def test_code_file_round_trip(tmp_path, ssc):
    path = tmp_path / "ssc.json"
    ssc.to_file(path)
    loaded = SubsystemCode.from_file(path)
    assert loaded.name == ssc.name
    assert loaded.geometry == ssc.geometry
    assert analyze(loaded).parameters() == analyze(ssc).parameters()
    assert groups_equal(loaded.gauge_generators, ssc.gauge_generators)
