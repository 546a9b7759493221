# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from sls.pauli.gf2 import AffineSolution, BinaryMatrix, GF2Basis, kernel_basis, rank_gf2, row_reduce, solve_affine_gf2
from sls.pauli.group import commutes, groups_equal, in_group, multiply, ordered_product, weight
from sls.pauli.pauli import PauliOperator

__all__ = [
    "AffineSolution",
    "BinaryMatrix",
    "GF2Basis",
    "PauliOperator",
    "commutes",
    "groups_equal",
    "in_group",
    "kernel_basis",
    "multiply",
    "ordered_product",
    "rank_gf2",
    "row_reduce",
    "solve_affine_gf2",
    "weight",
]
