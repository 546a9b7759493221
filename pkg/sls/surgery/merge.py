# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from sls.code.analysis import analyze
from sls.code.subsystem_code import SubsystemCode
from sls.constants import PauliType, Side
from sls.exception import GeometryError, GroupMismatchError
from sls.lattice.boundary import BoundaryLogical, MergedLattice, boundary_logical, prepare_merged_lattice
from sls.lattice.lattice import interaction_range
from sls.pauli.group import generator_basis, in_group, ordered_product
from sls.pauli.pauli import PauliOperator
from sls.surgery.verification import find_lemma2_witnesses

logger = logging.getLogger(__name__)

WitnessPair = Tuple[PauliOperator, PauliOperator]


@dataclass(frozen=True)
class MergeSpec:
    """
    Inputs of a merge: code A (joined on its right boundary), code B (joined on its left boundary), their boundary
    logicals and the joint layout. Merged qubits are A's, then B's, then the ancillas.
    """

    code_a: SubsystemCode
    code_b: SubsystemCode
    logical_a: BoundaryLogical
    logical_b: BoundaryLogical
    layout: MergedLattice
    with_ancillas: bool = True

    def __post_init__(self):
        if self.logical_a.side != Side.RIGHT or self.logical_b.side != Side.LEFT:
            raise GeometryError("Code A must be joined on its right boundary and code B on its left boundary")
        for logical, code in ((self.logical_a, self.code_a), (self.logical_b, self.code_b)):
            if logical.operator.n != code.n:
                raise GeometryError(f"Boundary logical {logical.operator} does not act on code '{code.name}'")
            if code.geometry.sort_top_to_bottom(logical.support) != tuple(logical.support):
                raise GeometryError(f"Boundary support of code '{code.name}' is not ordered top to bottom")

    @classmethod
    def create(
        cls,
        code_a: SubsystemCode,
        code_b: SubsystemCode,
        with_ancillas: bool = True,
        pauli_type: Optional[Union[PauliType, str]] = None,
        logical_a: Optional[BoundaryLogical] = None,
        logical_b: Optional[BoundaryLogical] = None,
    ) -> "MergeSpec":
        """
        Find matching boundary logicals (unless given) and lay out the merged lattice. When no Pauli type is
        requested, B's logical is searched with the type found for A.
        """
        if logical_a is None:
            logical_a = boundary_logical(code_a, Side.RIGHT, pauli_type=pauli_type)
        if logical_b is None:
            logical_b = boundary_logical(code_b, Side.LEFT, pauli_type=pauli_type or logical_a.pauli_type)
        n_pairs = max(logical_a.weight, logical_b.weight)
        strip_height = max(interaction_range(code_a), interaction_range(code_b), 1)
        layout = prepare_merged_lattice(
            code_a.geometry,
            logical_a,
            code_b.geometry,
            logical_b,
            ancilla_count=n_pairs - 1 if with_ancillas else 0,
            strip_height=strip_height,
        )
        return cls(code_a, code_b, logical_a, logical_b, layout, with_ancillas)

    @property
    def n_pairs(self) -> int:
        return max(self.logical_a.weight, self.logical_b.weight)

    @property
    def ancilla_ids(self) -> Tuple[int, ...]:
        return self.layout.q_c

    @property
    def n_total(self) -> int:
        return self.layout.lattice.n_qubits

    @property
    def embedding_a(self) -> Tuple[int, ...]:
        return self.layout.embedding_a

    @property
    def embedding_b(self) -> Tuple[int, ...]:
        return self.layout.embedding_b

    def embed_a(self, operator: PauliOperator) -> PauliOperator:
        return operator.embed(self.n_total, self.embedding_a)

    def embed_b(self, operator: PauliOperator) -> PauliOperator:
        return operator.embed(self.n_total, self.embedding_b)


@dataclass(frozen=True)
class MergeResult:
    spec: MergeSpec
    merged: SubsystemCode
    merging_operators: Tuple[PauliOperator, ...]
    merging_generators: Tuple[int, ...]
    joint_logical: PauliOperator
    lemma2_witnesses: Tuple[WitnessPair, ...]
    generators_a: Tuple[PauliOperator, ...]
    generators_b: Tuple[PauliOperator, ...]
    ancilla_x: Tuple[PauliOperator, ...]
    pre_merge_stabilizers: Tuple[PauliOperator, ...]

    @property
    def delta_g(self) -> int:
        return len(self.merging_generators)

    @property
    def embedding_a(self) -> Tuple[int, ...]:
        return self.spec.embedding_a

    @property
    def embedding_b(self) -> Tuple[int, ...]:
        return self.spec.embedding_b

    @property
    def ancilla_ids(self) -> Tuple[int, ...]:
        return self.spec.ancilla_ids

    @property
    def n(self) -> int:
        return self.merged.n

    @property
    def n_code_qubits(self) -> int:
        return self.n - len(self.ancilla_ids)

    def merging_generator_operators(self) -> List[PauliOperator]:
        return [self.merging_operators[index] for index in self.merging_generators]


def merging_operators(spec: MergeSpec) -> List[PauliOperator]:
    """
    One operator per row of the aligned boundary supports: the i-th single-qubit components of both boundary logicals,
    times Z on the ancillas directly above and below (when present). A shorter support contributes identities.
    """
    q_a, q_b, q_c = spec.layout.q_a, spec.layout.q_b, spec.layout.q_c
    operators = []
    for i in range(spec.n_pairs):
        letters = {}
        if i < len(q_a):
            letters[q_a[i]] = spec.logical_a.component(i)
        if i < len(q_b):
            letters[q_b[i]] = spec.logical_b.component(i)
        for ancilla in (i - 1, i):
            if 0 <= ancilla < len(q_c):
                letters[q_c[ancilla]] = "Z"
        operators.append(PauliOperator.from_sparse(spec.n_total, letters))
    return operators


def _ends_inward(count: int) -> List[int]:
    order = []
    low, high = 0, count - 1
    while low <= high:
        order.append(low)
        if high != low:
            order.append(high)
        low, high = low + 1, high - 1
    return order


def build_merged_code(spec: MergeSpec) -> MergeResult:
    """
    Assemble the merged gauge group: embedded generators of A and B, all merging operators and, with ancillas, one X
    operator per ancilla. The merging generators are the merging operators independent modulo A's and B's gauge
    groups and the joint logical, scanned from both ends of the seam inwards.
    """
    n = spec.n_total
    generators_a = tuple(spec.embed_a(g) for g in spec.code_a.gauge_generators)
    generators_b = tuple(spec.embed_b(g) for g in spec.code_b.gauge_generators)
    operators = tuple(merging_operators(spec))
    ancilla_x = tuple(PauliOperator.single(n, ancilla, "X") for ancilla in spec.ancilla_ids)
    joint = ordered_product([spec.embed_a(spec.logical_a.operator), spec.embed_b(spec.logical_b.operator)])

    basis = generator_basis(generators_a + generators_b + (joint,))
    selected = tuple(sorted(i for i in _ends_inward(len(operators)) if basis.add(operators[i].packed)))

    merged = SubsystemCode(
        generators_a + generators_b + operators + ancilla_x,
        name=f"{spec.code_a.name}+{spec.code_b.name}",
        geometry=spec.layout.lattice,
    )
    analysis = analyze(merged)
    if not in_group(joint, analysis.stabilizer_generators, ignore_phase=True):
        raise GroupMismatchError(f"Joint logical {joint} is not a stabilizer of the merged code '{merged.name}'")

    pre_merge = tuple(spec.embed_a(s) for s in analyze(spec.code_a).stabilizer_generators) + tuple(
        spec.embed_b(s) for s in analyze(spec.code_b).stabilizer_generators
    )
    witnesses = find_lemma2_witnesses([operators[i] for i in selected], pre_merge)
    logger.info(
        f"Merged '{spec.code_a.name}' and '{spec.code_b.name}': {analysis.parameters()} with delta_g={len(selected)}"
    )
    return MergeResult(
        spec=spec,
        merged=merged,
        merging_operators=operators,
        merging_generators=selected,
        joint_logical=joint,
        lemma2_witnesses=tuple(witnesses),
        generators_a=generators_a,
        generators_b=generators_b,
        ancilla_x=ancilla_x,
        pre_merge_stabilizers=pre_merge,
    )


def merge_codes(
    code_a: SubsystemCode,
    code_b: SubsystemCode,
    with_ancillas: bool = True,
    pauli_type: Optional[Union[PauliType, str]] = None,
) -> MergeResult:
    return build_merged_code(MergeSpec.create(code_a, code_b, with_ancillas=with_ancillas, pauli_type=pauli_type))
