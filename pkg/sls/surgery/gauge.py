# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence, Tuple

import numpy as np

from sls.code.analysis import analyze
from sls.code.subsystem_code import SubsystemCode
from sls.exception import GroupMismatchError, InvalidCodeError
from sls.pauli.gf2 import GF2Basis, kernel_basis
from sls.pauli.group import check_dimensions, commutation_matrix, generator_basis, groups_equal, ordered_product
from sls.pauli.pauli import PauliOperator

if TYPE_CHECKING:
    from sls.surgery.merge import MergeResult

logger = logging.getLogger(__name__)


def gauge_fix(code: SubsystemCode, fix_set: Sequence[PauliOperator]) -> SubsystemCode:
    """
    Promote the commuting gauge operators in `fix_set` to stabilizers. The new gauge group is the part of the old one
    that commutes with every fixed operator, so each fixed operator consumes one gauge qubit.
    """
    if not fix_set:
        return code
    check_dimensions(fix_set, code.n)
    stabilizers = analyze(code).stabilizer_generators
    gauge = generator_basis(code.gauge_generators)
    for i, operator in enumerate(fix_set):
        if not operator.is_hermitian:
            raise InvalidCodeError(f"Fix operator {operator} is not Hermitian")
        if not gauge.contains(operator.packed):
            raise InvalidCodeError(f"Fix operator {operator} is not in the gauge group of '{code.name}'")
        if not all(operator.commutes_with(other) for other in fix_set[i + 1 :]):
            raise InvalidCodeError(f"Fix operator {operator} anticommutes with another fix operator")
        if not all(operator.commutes_with(s) for s in stabilizers):
            raise InvalidCodeError(f"Fix operator {operator} anticommutes with a stabilizer of '{code.name}'")

    generators = code.gauge_generators
    combinations = kernel_basis(commutation_matrix(fix_set, generators))
    basis = GF2Basis()
    fixed_generators = []
    for operator in fix_set:
        if basis.add(operator.packed):
            fixed_generators.append(operator)
    for combination in combinations:
        element = ordered_product([generators[j] for j in np.flatnonzero(combination)], code.n).hermitian()
        if basis.add(element.packed):
            fixed_generators.append(element)
    logger.debug(f"Gauge fixed '{code.name}' with {len(fix_set)} operators")
    return SubsystemCode(fixed_generators, name=f"{code.name}|fixed", geometry=code.geometry, n=code.n)


@dataclass(frozen=True)
class JointRecord:
    """Joint logical left behind by a merge followed by a split, with the ancillas that were measured out."""

    operator: PauliOperator
    ancilla_ids: Tuple[int, ...]

    def to_json(self) -> dict:
        return {"operator": str(self.operator), "ancilla_ids": list(self.ancilla_ids)}


@dataclass(frozen=True)
class SplitResult:
    code_a: SubsystemCode
    code_b: SubsystemCode
    record: JointRecord
    fixed: SubsystemCode


def split(result: "MergeResult") -> SplitResult:
    """
    Undo a merge at the group level: fix the witness stabilizers and the ancilla X operators, and check that the fixed
    gauge group equals the product of both input gauge groups, the ancilla X operators and the joint logical.
    """
    fix_set = [witness for _, witness in result.lemma2_witnesses] + list(result.ancilla_x)
    fixed = gauge_fix(result.merged, fix_set)
    expected = list(result.generators_a) + list(result.generators_b) + list(result.ancilla_x) + [result.joint_logical]
    if not groups_equal(fixed.gauge_generators, expected):
        raise GroupMismatchError(
            f"Gauge-fixed code '{fixed.name}' differs from the product of the input codes and the joint logical"
        )
    logger.info(f"Split '{result.merged.name}' with joint record {result.joint_logical}")
    spec = result.spec
    return SplitResult(spec.code_a, spec.code_b, JointRecord(result.joint_logical, result.ancilla_ids), fixed)
