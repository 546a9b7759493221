# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from sls.simulator.encoding import encode, logical_operator
from sls.simulator.schedule import run_merge_schedule, run_split_schedule
from sls.simulator.state import MeasurementRecord, StabilizerState, inject_error, measure_pauli
from sls.simulator.teleport import Teleporter, TeleportReport, teleport

__all__ = [
    "MeasurementRecord",
    "StabilizerState",
    "TeleportReport",
    "Teleporter",
    "encode",
    "inject_error",
    "logical_operator",
    "measure_pauli",
    "run_merge_schedule",
    "run_split_schedule",
    "teleport",
]
