# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from typing import Optional, Sequence, Tuple, Union

from sls.code.analysis import analyze
from sls.code.subsystem_code import SubsystemCode
from sls.constants import LogicalBasis, PauliType
from sls.exception import DimensionError
from sls.pauli.pauli import PauliOperator
from sls.simulator.state import StabilizerState

logger = logging.getLogger(__name__)

PauliPair = Tuple[PauliOperator, PauliOperator]


def logical_operator(pair: PauliPair, axis: str) -> PauliOperator:
    """
    Hermitian logical operator of one logical qubit along `axis` given its (X_L, Z_L) pair. Y_L is i * X_L * Z_L.
    """
    x_logical, z_logical = pair
    if axis == "X":
        return x_logical
    if axis == "Z":
        return z_logical
    if axis == "Y":
        product = x_logical * z_logical
        return product.with_phase(product.phase_exp + 1)
    raise ValueError(f"Invalid logical axis '{axis}'")


def signed_logical(pair: PauliPair, basis: Union[LogicalBasis, str]) -> PauliOperator:
    basis = LogicalBasis(basis)
    operator = logical_operator(pair, basis.axis)
    return operator if basis.sign == 1 else -operator


def encode(
    code: SubsystemCode,
    logical_basis: Sequence[Union[LogicalBasis, str]],
    gauge_fixing: Optional[Sequence[Union[PauliType, str]]] = None,
    logical_pairs: Optional[Sequence[PauliPair]] = None,
    seed: int = 0,
) -> StabilizerState:
    """
    Prepare the code state stabilized by the code's stabilizers, one signed logical operator per logical qubit and one
    operator per gauge qubit ("X" or "Z" picks the X-like or Z-like element of each gauge pair, default "Z").

    `logical_pairs` replaces the analysed (X_L, Z_L) pairs, e.g. with boundary representatives.
    """
    analysis = analyze(code)
    logical_pairs = list(logical_pairs) if logical_pairs is not None else list(analysis.logical_pairs)
    if len(logical_basis) != analysis.k or len(logical_pairs) != analysis.k:
        raise DimensionError(
            f"Code '{code.name}' has {analysis.k} logical qubits, got {len(logical_basis)} basis choices and"
            f" {len(logical_pairs)} logical pairs"
        )
    gauge_fixing = list(gauge_fixing) if gauge_fixing is not None else [PauliType.Z] * analysis.g
    if len(gauge_fixing) != analysis.g:
        raise DimensionError(f"Code '{code.name}' has {analysis.g} gauge qubits, got {len(gauge_fixing)} choices")

    generators = list(analysis.stabilizer_generators)
    generators += [signed_logical(pair, basis) for pair, basis in zip(logical_pairs, logical_basis)]
    for pair, choice in zip(analysis.gauge_pairs, gauge_fixing):
        generators.append(pair[0] if PauliType(choice) == PauliType.X else pair[1])
    logger.debug(f"Encoding {[LogicalBasis(b).value for b in logical_basis]} into '{code.name}'")
    return StabilizerState(generators, seed=seed)
