# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import pytest

from sls.code.analysis import analyze
from sls.constants import CodeFamily
from sls.exception import GeometryError, UnsupportedParameterError
from sls.lattice.builders import CodeBuilder, build_bacon_shor, build_code, build_surface_code
from sls.lattice.lattice import Lattice2D, interaction_range


@pytest.mark.parametrize(
    "family,size,n,name",
    [
        ("surface", 3, 9, "surface-3"),
        ("color", 3, 7, "color-3"),
        ("ssc", 3, 8, "ssc-3"),
        ("bacon_shor", 3, 9, "bacon_shor-3x3"),
    ],
)
def test_build_code(family, size, n, name):
    code = build_code(family, size)
    assert code.n == n
    assert code.name == name
    assert code.geometry.n_qubits == n


def test_registry_matches_families():
    assert set(CodeBuilder.registry) == {family.value for family in CodeFamily}


@pytest.mark.parametrize("family,size", [("surface", 4), ("surface", 1), ("color", 5), ("ssc", 5), ("bacon_shor", 1)])
def test_unsupported_sizes(family, size):
    with pytest.raises(UnsupportedParameterError):
        build_code(family, size)


def test_unknown_family():
    with pytest.raises(UnsupportedParameterError):
        build_code("toric", 3)


def test_height_only_for_bacon_shor():
    with pytest.raises(UnsupportedParameterError):
        build_code("surface", 3, height=5)


@pytest.mark.parametrize("fixture,expected", [("surface3", 2), ("ssc", 2), ("bacon_shor3", 2), ("color3", 3)])
def test_interaction_range(request, fixture, expected):
    assert interaction_range(request.getfixturevalue(fixture)) == expected


def test_ssc_layout(ssc):
    assert ssc.geometry.qubit_at(2, 2) is None
    weights = sorted(generator.weight for generator in ssc.gauge_generators)
    assert weights == [2, 2, 2, 2, 3, 3, 3, 3]


def test_color_code_layout(color3):
    assert color3.geometry.qubit_at(1, 3) is None
    assert color3.geometry.qubit_at(3, 3) is None
    assert all(generator.weight == 4 for generator in color3.gauge_generators)


def test_surface_code_boundaries():
    code = build_surface_code(5)
    weights = [generator.weight for generator in code.gauge_generators]
    assert weights.count(4) == 16
    assert weights.count(2) == 8
    assert analyze(code).k == 1


def test_rectangular_bacon_shor():
    code = build_bacon_shor(6, 3)
    analysis = analyze(code)
    assert (code.n, analysis.k, analysis.g) == (18, 1, 10)
    assert code.geometry.width == 6 and code.geometry.height == 3


class TestLattice2D:
    @pytest.fixture(autouse=True)
    def setup(self):
        self.lattice = Lattice2D.from_coordinates([(1, 1), (1, 2), (2, 2), (3, 1)])

    def test_lookup(self):
        assert (self.lattice.width, self.lattice.height) == (2, 3)
        assert self.lattice.qubit_at(2, 2) == 2
        assert self.lattice.qubit_at(2, 1) is None
        assert self.lattice.boundary_strip("left", 1) == (0, 3)
        assert self.lattice.boundary_strip("right", 1) == (1, 2)
        assert self.lattice.sort_top_to_bottom([3, 2, 0]) == (0, 2, 3)
        assert self.lattice.extent([0, 3]) == 3
        assert self.lattice.extent([]) == 0

    def test_duplicate_vertex(self):
        with pytest.raises(GeometryError):
            Lattice2D(width=2, height=2, coordinates=((1, 1), (1, 1)))

    def test_outside_box(self):
        with pytest.raises(GeometryError):
            Lattice2D(width=2, height=2, coordinates=((3, 1),))

    def test_missing_geometry(self, ssc):
        with pytest.raises(GeometryError):
            interaction_range(ssc.with_geometry(None))
