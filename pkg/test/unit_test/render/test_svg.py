# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import xml.etree.ElementTree as ET

import pytest

from sls.code.subsystem_code import SubsystemCode
from sls.exception import GeometryError
from sls.lattice.lattice import Lattice2D
from sls.pauli.pauli import PauliOperator
from sls.render.svg import RenderStyle, render_code, render_lattice, save_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def test_ssc_render(ssc):
    svg = render_code(ssc)
    assert svg.count('class="qubit"') == 8
    assert svg.count('class="plaquette"') == 4
    assert svg.count('class="lump"') == 4
    assert 'class="ancilla"' not in svg
    assert 'class="seam"' not in svg
    root = ET.fromstring(svg)
    groups = {group.get("id") for group in root.iter(f"{SVG_NS}g")}
    assert groups == {"gauge-X", "gauge-Z", "qubits"}
    assert root.find(f"{SVG_NS}text").text == "ssc-3"


def test_merged_render_shows_seam_and_ancillas(merged_sc_cc):
    svg = render_code(merged_sc_cc.merged)
    assert svg.count('class="ancilla"') == 2
    assert svg.count('class="qubit"') == 16
    assert svg.count('class="seam"') == 1


def test_logicals_are_drawn(surface3):
    z_logical = PauliOperator.z_type(9, [0, 3, 6])
    svg = render_code(surface3, logicals=[z_logical])
    assert svg.count('class="logical"') == 1
    assert 'stroke-dasharray="8,4"' in svg


def test_mixed_generators_use_their_own_group():
    lattice = Lattice2D(width=2, height=1, coordinates=((1, 1), (1, 2)))
    svg = render_lattice(lattice, [PauliOperator.from_string("XZ"), PauliOperator.from_string("YI")])
    style = RenderStyle()
    assert '<g id="gauge-mixed">' in svg
    assert style.mixed_color in svg
    assert svg.count('class="single"') == 1


def test_empty_lattice_renders_frame_only():
    svg = render_lattice(Lattice2D(width=0, height=0, coordinates=()))
    root = ET.fromstring(svg)
    assert [child.tag for child in root] == [f"{SVG_NS}rect", f"{SVG_NS}g"]
    assert 'class="frame"' in svg


def test_render_is_deterministic(color3):
    assert render_code(color3) == render_code(color3)


def test_custom_style(surface3):
    svg = render_code(surface3, style=RenderStyle(spacing=100, margin=10))
    assert 'width="220.0"' in svg


def test_code_without_geometry():
    code = SubsystemCode([PauliOperator.from_string("XX"), PauliOperator.from_string("ZZ")], name="bell")
    with pytest.raises(GeometryError):
        render_code(code)


def test_save_svg(tmp_path, ssc):
    path = save_svg(render_code(ssc), tmp_path / "figures" / "ssc.svg")
    assert path.exists()
    assert path.read_text(encoding="utf-8").startswith("<?xml")


def test_title_is_escaped(ssc):
    code = SubsystemCode(ssc.gauge_generators, "a&b<c", ssc.geometry)
    svg = render_code(code)
    assert "a&amp;b&lt;c" in svg
    assert ET.fromstring(svg).find(f"{SVG_NS}text").text == "a&b<c"
