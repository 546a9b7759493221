# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from sls.code.distance.search import DistanceResult, DistanceSearch
from sls.common.config_utils import ConfigParam
from sls.common.utils import popcount
from sls.exception import UnsupportedParameterError
from sls.pauli.gf2 import GF2Basis
from sls.pauli.pauli import PauliOperator


class ExhaustiveDistanceSearch(DistanceSearch):
    """
    Enumerates all 4^n Pauli operators. Used as a reference for small codes.
    """

    name = "exhaustive"

    @staticmethod
    def _default_config():
        return {
            "max_qubits": ConfigParam(type_=int, default_value=10, description="Largest code size accepted."),
        }

    def search(self, max_weight: int) -> DistanceResult:
        n = self.problem.n
        if n > self.config.max_qubits:
            raise UnsupportedParameterError(f"Exhaustive search is limited to {self.config.max_qubits} qubits, got {n}")
        mask = (1 << n) - 1
        gauge = GF2Basis(self.problem.gauge)
        stabilizers = [(s & mask, s >> n) for s in self.problem.stabilizers]

        best, witness = None, None
        for x_bits in range(1 << n):
            for z_bits in range(1 << n):
                weight = popcount(x_bits | z_bits)
                if weight == 0 or weight > max_weight or (best is not None and weight >= best):
                    continue
                if any((popcount(x_bits & s_z) + popcount(z_bits & s_x)) & 1 for s_x, s_z in stabilizers):
                    continue
                if gauge.contains(x_bits | (z_bits << n)):
                    continue
                best, witness = weight, PauliOperator(n, x_bits, z_bits)
        return DistanceResult(best, max_weight, witness)
