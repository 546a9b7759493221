# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from typing import List, Optional


class SLSException(Exception):
    """
    Base class for sls exceptions.
    """

    pass


class DimensionError(SLSException, ValueError):
    """
    Raised when operators or matrices act on a different number of qubits than expected.
    """

    pass


class InvalidCodeError(SLSException):
    """
    Raised for generator sets that do not define a valid subsystem code.
    """

    pass


class UnsupportedParameterError(SLSException, ValueError):
    """
    Raised when a code builder is asked for a family size it cannot produce.
    """

    pass


class GeometryError(SLSException):
    """
    Raised for missing coordinates, incompatible boundary sides or misaligned boundary supports.
    """

    pass


class NoStripRepresentativeError(SLSException):
    """
    Raised when a logical class has no representative in any boundary strip of width at most r.
    """

    pass


class VerificationError(SLSException):
    """
    Base class for failed protocol checks. The cli reports these with exit code 1.
    """

    pass


class LedgerMismatchError(VerificationError):
    def __init__(self, quantity: str, expected, actual):
        self.quantity = quantity
        self.expected = expected
        self.actual = actual
        super().__init__(f"ledger mismatch on {quantity}: expected {expected}, got {actual}")


class Lemma2ViolationError(VerificationError):
    """
    Raised when a merging generator has no stabilizer witness in the pre-merge product code.
    """

    pass


class GroupMismatchError(VerificationError):
    pass


class TeleportationError(VerificationError):
    def __init__(self, message: str, trace: Optional[List[dict]] = None):
        self.trace = trace or []
        super().__init__(message)


class ConsistencyError(SLSException):
    """
    Raised by the simulator when a noiseless schedule produces an impossible outcome.
    """

    pass
