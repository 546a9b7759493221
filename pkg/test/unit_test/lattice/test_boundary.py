# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import pytest

from sls.code.analysis import find_logical_in_region, is_dressed_logical
from sls.constants import Side
from sls.exception import GeometryError
from sls.lattice.boundary import boundary_logical, prepare_merged_lattice
from sls.lattice.builders import build_surface_code
from sls.lattice.lattice import interaction_range


@pytest.mark.parametrize("fixture", ["ssc", "surface3", "color3", "bacon_shor3"])
@pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
def test_boundary_logical_fits_strip(request, fixture, side):
    code = request.getfixturevalue(fixture)
    logical = boundary_logical(code, side)
    strip = code.geometry.boundary_strip(side, interaction_range(code))
    assert logical.side == side
    assert set(logical.support) <= set(strip)
    assert logical.strip_width <= interaction_range(code)
    assert is_dressed_logical(code, logical.operator)
    assert logical.operator.is_hermitian
    assert logical.support == code.geometry.sort_top_to_bottom(logical.support)


def test_no_smaller_logical_inside_support(surface3):
    logical = boundary_logical(surface3, Side.RIGHT)
    for qubit in logical.support:
        assert find_logical_in_region(surface3, [q for q in logical.support if q != qubit]) is None


def test_requested_pauli_type(surface3):
    z_logical = boundary_logical(surface3, Side.LEFT, pauli_type="Z")
    assert z_logical.pauli_type == "Z"
    assert z_logical.weight == 3
    assert [z_logical.component(i) for i in range(3)] == ["Z", "Z", "Z"]


def test_prepare_merged_lattice(surface3, color3):
    logical_a = boundary_logical(surface3, Side.RIGHT, pauli_type="Z")
    logical_b = boundary_logical(color3, Side.LEFT, pauli_type="Z")
    layout = prepare_merged_lattice(surface3.geometry, logical_a, color3.geometry, logical_b, ancilla_count=2)
    lattice = layout.lattice
    assert lattice.n_qubits == 18
    assert lattice.seam_column == 4
    assert lattice.ancillas == (16, 17)
    assert layout.embedding_b == tuple(range(9, 16))
    for qubit_a, qubit_b in zip(layout.q_a, layout.q_b):
        assert lattice.row(qubit_a) == lattice.row(qubit_b)
    for i, ancilla in enumerate(layout.q_c):
        assert lattice.col(ancilla) == 4
        assert lattice.row(ancilla) == lattice.row(layout.q_a[i])
    assert sum(count[2] for count in layout.strip_counts()) == 2


def test_merge_sides_are_checked(surface3):
    logical = boundary_logical(surface3, Side.LEFT)
    with pytest.raises(GeometryError):
        prepare_merged_lattice(surface3.geometry, logical, surface3.geometry, logical, ancilla_count=0)


def test_too_many_ancillas(surface3, color3):
    logical_a = boundary_logical(surface3, Side.RIGHT, pauli_type="Z")
    logical_b = boundary_logical(color3, Side.LEFT, pauli_type="Z")
    with pytest.raises(GeometryError):
        prepare_merged_lattice(surface3.geometry, logical_a, color3.geometry, logical_b, ancilla_count=3)


def test_unequal_supports_move_the_first_unmatched_qubit_to_the_next_strip(surface3):
    surface5 = build_surface_code(5)
    logical_a = boundary_logical(surface3, Side.RIGHT, pauli_type="Z")
    logical_b = boundary_logical(surface5, Side.LEFT, pauli_type="Z")
    assert (logical_a.weight, logical_b.weight) == (3, 5)
    layout = prepare_merged_lattice(surface3.geometry, logical_a, surface5.geometry, logical_b, ancilla_count=4)
    lattice = layout.lattice
    assert [lattice.row(q) for q in layout.q_a] == [1, 2, 3]
    assert [lattice.row(q) for q in layout.q_b] == [1, 2, 3, 5, 6]
    assert [lattice.row(q) for q in layout.q_c] == [1, 2, 3, 5]
    assert lattice.height == 6
    assert layout.strip_counts() == [(2, 2, 2), (1, 1, 1), (0, 2, 1)]
