# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from enum import Enum, IntEnum


class Side(str, Enum):
    """Boundary of a lattice that hosts a string logical."""

    LEFT = "left"
    RIGHT = "right"


class PauliType(str, Enum):
    X = "X"
    Z = "Z"


class CodeFamily(str, Enum):
    SURFACE = "surface"
    COLOR = "color"
    SSC = "ssc"
    BACON_SHOR = "bacon_shor"


class LogicalBasis(str, Enum):
    """Single-qubit Pauli eigenstates that can be encoded into a logical qubit."""

    Z_PLUS = "Z+"
    Z_MINUS = "Z-"
    X_PLUS = "X+"
    X_MINUS = "X-"
    Y_PLUS = "Y+"
    Y_MINUS = "Y-"

    @property
    def axis(self) -> str:
        return self.value[0]

    @property
    def sign(self) -> int:
        return 1 if self.value[1] == "+" else -1

    def expectations(self) -> dict:
        """Expected (X, Y, Z) expectation values of this eigenstate."""
        return {axis: (self.sign if axis == self.axis else 0) for axis in "XYZ"}


class StepLabel(str, Enum):
    """Protocol phase tags attached to measurement records and error injections."""

    ENCODE = "encode"
    MERGE = "merge"
    BEFORE_ROUNDS = "before_rounds"
    ROUNDS = "rounds"
    SPLIT = "split"
    GAUGE_FIX = "gauge_fix"
    READOUT = "readout"
    CORRECTION = "correction"


class Command(str, Enum):
    BUILD = "build"
    ANALYZE = "analyze"
    DISTANCE = "distance"
    MERGE = "merge"
    SPLIT = "split"
    TELEPORT = "teleport"
    VERIFY = "verify"
    RENDER = "render"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class ExitCode(IntEnum):
    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    USAGE_ERROR = 2
