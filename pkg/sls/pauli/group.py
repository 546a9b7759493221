# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from typing import Iterable, List, Optional, Sequence

import numpy as np

from sls.common.utils import iter_bits
from sls.exception import DimensionError
from sls.pauli.gf2 import GF2Basis
from sls.pauli.pauli import PauliOperator


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    return a * b


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    return a.commutes_with(b)


def weight(p: PauliOperator) -> int:
    return p.weight


def check_dimensions(operators: Iterable[PauliOperator], n: Optional[int] = None) -> int:
    """Return the common qubit count of `operators`, raising DimensionError when they disagree."""
    for operator in operators:
        if n is None:
            n = operator.n
        elif operator.n != n:
            raise DimensionError(f"Operator on {operator.n} qubits in a set acting on {n} qubits")
    if n is None:
        raise DimensionError("Cannot infer the qubit count of an empty operator set")
    return n


def ordered_product(operators: Sequence[PauliOperator], n: Optional[int] = None) -> PauliOperator:
    """Left-to-right product; the identity on n qubits for an empty sequence."""
    if not operators:
        if n is None:
            raise DimensionError("Qubit count is required for an empty product")
        return PauliOperator.identity(n)
    result = operators[0]
    for operator in operators[1:]:
        result = result * operator
    return result


def select(operators: Sequence[PauliOperator], mask: int) -> List[PauliOperator]:
    """Operators whose positions are set in `mask`, in increasing position order."""
    return [operators[index] for index in iter_bits(mask)]


def commutation_matrix(rows: Sequence[PauliOperator], cols: Sequence[PauliOperator]) -> np.ndarray:
    """Entry (i, j) is the symplectic product of rows[i] and cols[j]."""
    matrix = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for i, a in enumerate(rows):
        for j, b in enumerate(cols):
            matrix[i, j] = a.symplectic_product(b)
    return matrix


def generator_basis(generators: Sequence[PauliOperator]) -> GF2Basis:
    return GF2Basis(p.packed for p in generators)


def _phase_subgroup(generators: Sequence[PauliOperator], basis: GF2Basis) -> int:
    """
    Order of the subgroup of Z4 formed by the phases of group elements with all bits zero: 1 ({0}), 2 ({0, 2}) or
    4 (all of Z4).
    """
    # an anti-Hermitian generator squares to -I
    order = 2 if any(g.phase_exp % 2 for g in generators) else 1
    for i, a in enumerate(generators):
        if order == 2:
            break
        if any(not a.commutes_with(b) for b in generators[i + 1 :]):
            order = 2
    n = generators[0].n
    for relation in basis.relations:
        phase = ordered_product(select(generators, relation), n).phase_exp
        if phase % 2:
            return 4
        if phase == 2:
            order = 2
    return order


def in_group(p: PauliOperator, generators: Sequence[PauliOperator], ignore_phase: bool = False) -> bool:
    """
    Membership of `p` in the group generated by `generators`.

    With ignore_phase the test is on the symplectic part only. Otherwise the phase must match some element of the
    group: the product of a solving combination, adjusted by the phases the group can reach on the identity.
    """
    if not generators:
        return p.is_identity and (ignore_phase or p.phase_exp == 0)
    n = check_dimensions(generators, p.n)
    basis = generator_basis(generators)
    combination = basis.express(p.packed)
    if combination is None:
        return False
    if ignore_phase:
        return True
    difference = (p.phase_exp - ordered_product(select(generators, combination), n).phase_exp) % 4
    if difference == 0:
        return True
    order = _phase_subgroup(generators, basis)
    return order == 4 or (order == 2 and difference == 2)


def rank(operators: Sequence[PauliOperator]) -> int:
    """Number of independent operators modulo phase."""
    return generator_basis(operators).rank


def independent_subset(operators: Sequence[PauliOperator], base: Sequence[PauliOperator] = ()) -> List[int]:
    """Positions of the operators kept by a left-to-right scan that are independent of `base` and earlier picks."""
    basis = generator_basis(base)
    return [index for index, operator in enumerate(operators) if basis.add(operator.packed)]


def groups_equal(generators_a: Sequence[PauliOperator], generators_b: Sequence[PauliOperator]) -> bool:
    """Two-sided membership test of the groups generated by both sets, modulo phase."""
    basis_a = generator_basis(generators_a)
    basis_b = generator_basis(generators_b)
    return all(basis_a.contains(p.packed) for p in generators_b) and all(
        basis_b.contains(p.packed) for p in generators_a
    )
