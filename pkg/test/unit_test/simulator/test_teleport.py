# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import pytest

from sls.constants import LogicalBasis
from sls.exception import TeleportationError
from sls.simulator.teleport import TeleportReport, Teleporter, teleport


@pytest.fixture(scope="module")
def color_to_surface(color3, surface3):
    return Teleporter(color3, surface3)


@pytest.mark.parametrize("label", list(LogicalBasis))
def test_color_to_surface_teleportation(color_to_surface, label):
    for seed in range(100):
        report = color_to_surface.run(label, seed)
        assert report.passed, report.to_json()
        assert report.final_expectations == label.expectations()
        assert report.trace == []


@pytest.mark.parametrize("label", list(LogicalBasis))
def test_ssc_to_ssc_teleportation(ssc, label):
    teleporter = Teleporter(ssc, ssc, with_ancillas=False)
    assert all(teleporter.run(label, seed).passed for seed in range(20))


def test_outcomes_cover_both_signs(color_to_surface):
    reports = [color_to_surface.run("X+", seed) for seed in range(40)]
    assert {report.m1 for report in reports} == {-1, 1}
    assert {report.m2 for report in reports} == {-1, 1}


def test_report_json(color_to_surface):
    report = color_to_surface.run("Y-", 5)
    data = report.to_json()
    assert data["pass"] is True
    assert "passed" not in data
    assert data["input_label"] == "Y-"
    assert data["expected_expectations"] == {"X": 0, "Y": -1, "Z": 0}
    assert report == color_to_surface.run("Y-", 5)


def test_failed_report_raises():
    report = TeleportReport(
        seed=0,
        input_label="Z+",
        m1=1,
        m2=1,
        ancilla_outcomes=[],
        correction="+II",
        final_expectations={"X": 0, "Y": 0, "Z": -1},
        expected_expectations={"X": 0, "Y": 0, "Z": 1},
        passed=False,
        trace=[{"operator": "+ZZ", "outcome": -1, "deterministic": False, "step": "merge"}],
    )
    with pytest.raises(TeleportationError):
        report.raise_for_failure()


def test_teleport_function(color3, surface3):
    report = teleport(color3, surface3, LogicalBasis.Z_MINUS, seed=3)
    assert report.passed
    assert report.m1 in (-1, 1)
