# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

import numpy as np

from sls.code.analysis import analyze
from sls.code.distance import distance
from sls.code.subsystem_code import SubsystemCode
from sls.common.config_utils import ConfigBase
from sls.common.utils import popcount
from sls.exception import GeometryError, LedgerMismatchError, Lemma2ViolationError
from sls.lattice.lattice import Lattice2D, interaction_range
from sls.pauli.gf2 import solve_affine_gf2
from sls.pauli.group import commutation_matrix, groups_equal, in_group, ordered_product
from sls.pauli.pauli import PauliOperator

if TYPE_CHECKING:
    from sls.surgery.merge import MergeResult

logger = logging.getLogger(__name__)

# allowed growth of the interaction range across the seam, in grid units
LOCALITY_SLACK = 2


def find_lemma2_witnesses(
    generators: Sequence[PauliOperator], stabilizers: Sequence[PauliOperator]
) -> List[Tuple[PauliOperator, PauliOperator]]:
    """
    For each merging generator, a product of `stabilizers` that anticommutes with it and commutes with the other
    generators. The low-weight solution is picked by greedy kernel reduction.
    """
    if not generators:
        return []
    matrix = commutation_matrix(generators, stabilizers)
    packed = [s.packed for s in stabilizers]
    n = generators[0].n

    def cost(combination: np.ndarray) -> int:
        vector = 0
        for index in np.flatnonzero(combination):
            vector ^= packed[index]
        return popcount((vector & ((1 << n) - 1)) | (vector >> n))

    witnesses = []
    for i, generator in enumerate(generators):
        target = np.zeros(len(generators), dtype=np.uint8)
        target[i] = 1
        solution = solve_affine_gf2(matrix, target)
        if solution is None:
            raise Lemma2ViolationError(
                f"No pre-merge stabilizer anticommutes with merging generator {generator} alone; the boundary"
                " logicals admit a logical on a smaller support"
            )
        combination = solution.minimize(cost)
        witness = ordered_product([stabilizers[j] for j in np.flatnonzero(combination)], n).hermitian()
        witnesses.append((generator, witness))
    return witnesses


def verify_lemma2(result: "MergeResult") -> List[Tuple[PauliOperator, PauliOperator]]:
    """Re-derive the witnesses of `result` and check the anticommutation pattern of the stored ones."""
    generators = result.merging_generator_operators()
    witnesses = find_lemma2_witnesses(generators, result.pre_merge_stabilizers)
    for i, (generator, witness) in enumerate(result.lemma2_witnesses):
        if generator.packed != generators[i].packed:
            raise Lemma2ViolationError(f"Stored witness pair {i} does not belong to merging generator {generators[i]}")
        for j, other in enumerate(generators):
            if witness.commutes_with(other) == (i == j):
                raise Lemma2ViolationError(f"Witness {witness} has the wrong commutation with {other}")
        if not in_group(witness, result.pre_merge_stabilizers, ignore_phase=True):
            raise Lemma2ViolationError(f"Witness {witness} is not a pre-merge stabilizer")
    return witnesses


class Violation(ConfigBase):
    quantity: str
    expected: str
    actual: str


class LedgerEntry(ConfigBase):
    n: int
    k: int
    g: int
    s: int
    d: Optional[int] = None


class AncillaContribution(ConfigBase):
    qubits: int
    stabilizers: int
    gauge_qubits: int = 0


class LocalityReport(ConfigBase):
    r_before: int
    r_after: int


class WitnessRecord(ConfigBase):
    generator: str
    stabilizer: str


class MergeReport(ConfigBase):
    """Machine-readable outcome of the merge checks."""

    code_a: LedgerEntry
    code_b: LedgerEntry
    ledger: LedgerEntry
    expected: LedgerEntry
    ancilla: AncillaContribution
    d_min: Optional[int] = None
    delta_g: int
    lemma2: List[WitnessRecord]
    locality: LocalityReport
    joint_logical: str
    reference_match: Optional[str] = None
    notes: List[str] = []
    violations: List[Violation] = []

    @property
    def passed(self) -> bool:
        return not self.violations

    def raise_for_violations(self):
        if self.violations:
            violation = self.violations[0]
            raise LedgerMismatchError(violation.quantity, violation.expected, violation.actual)


def _entry(code: SubsystemCode, d: Optional[int]) -> LedgerEntry:
    analysis = analyze(code)
    return LedgerEntry(n=analysis.n, k=analysis.k, g=analysis.g, s=analysis.s, d=d)


def verify_merged_parameters(
    result: "MergeResult", max_weight: Optional[int] = None, check_distance: bool = True
) -> MergeReport:
    """
    Compare the merged code with the parameter ledger of the two inputs, check d_M >= min(d_A, d_B) with the distance
    search and check that the interaction range grows by at most LOCALITY_SLACK. Violations are collected in the
    report rather than raised.
    """
    spec = result.spec
    d_a = distance(spec.code_a, max_weight) if check_distance else None
    d_b = distance(spec.code_b, max_weight) if check_distance else None
    d_m = distance(result.merged, max_weight) if check_distance else None
    code_a, code_b = _entry(spec.code_a, d_a), _entry(spec.code_b, d_b)
    merged = _entry(result.merged, d_m)
    anc = len(result.ancilla_ids)
    ancilla = AncillaContribution(qubits=anc, stabilizers=anc, gauge_qubits=0)
    expected = LedgerEntry(
        n=code_a.n + code_b.n + anc,
        k=code_a.k + code_b.k - 1,
        g=code_a.g + code_b.g + result.delta_g + ancilla.gauge_qubits,
        s=code_a.s + code_b.s + ancilla.stabilizers + 1 - result.delta_g,
    )

    violations = []
    for quantity in ("n", "k", "g", "s"):
        if getattr(merged, quantity) != getattr(expected, quantity):
            expected_value, actual_value = getattr(expected, quantity), getattr(merged, quantity)
            violations.append(Violation(quantity=quantity, expected=str(expected_value), actual=str(actual_value)))
    if result.delta_g > max(spec.n_pairs - 1, 0):
        violations.append(Violation(quantity="delta_g", expected=f"<= {spec.n_pairs - 1}", actual=str(result.delta_g)))

    notes = []
    unknown = [name for name, d in (("d_A", d_a), ("d_B", d_b)) if d is None]
    if check_distance and unknown:
        notes.append(f"{' and '.join(unknown)} exceed the distance search cap; d_M was not compared with d_min")

    d_min = None
    if check_distance and d_a is not None and d_b is not None:
        d_min = min(d_a, d_b)
        expected.d = d_min
        # None means the merged distance exceeds max_weight, which is at least d_min here
        if d_m is not None and d_m < d_min:
            violations.append(Violation(quantity="d", expected=f">= {d_min}", actual=str(d_m)))

    r_before = max(interaction_range(spec.code_a), interaction_range(spec.code_b))
    r_after = interaction_range(result.merged)
    if r_after - r_before > LOCALITY_SLACK:
        violations.append(Violation(quantity="r", expected=f"<= {r_before + LOCALITY_SLACK}", actual=str(r_after)))

    report = MergeReport(
        code_a=code_a,
        code_b=code_b,
        ledger=merged,
        expected=expected,
        ancilla=ancilla,
        d_min=d_min,
        delta_g=result.delta_g,
        lemma2=[WitnessRecord(generator=str(g), stabilizer=str(s)) for g, s in result.lemma2_witnesses],
        locality=LocalityReport(r_before=r_before, r_after=r_after),
        joint_logical=str(result.joint_logical),
        violations=violations,
        notes=notes,
    )
    for violation in violations:
        logger.warning(
            f"Merge check failed on {violation.quantity}: expected {violation.expected}, got {violation.actual}"
        )
    for note in notes:
        logger.warning(note)
    return report


def seam_relabeling(lattice: Lattice2D, reference: Lattice2D) -> Dict[int, int]:
    """
    Map the qubits of a merged lattice onto `reference` after deleting its seam column (columns right of the seam
    move one to the left). Raises GeometryError when a qubit has no counterpart.
    """
    if lattice.seam_column is None:
        raise GeometryError("Lattice has no seam column")
    mapping = {}
    for qubit, (row, col) in enumerate(lattice.coordinates):
        if col == lattice.seam_column:
            raise GeometryError(f"Qubit {qubit} sits on the seam column; only ancilla-free merges can be relabeled")
        target = reference.qubit_at(row, col - 1 if col > lattice.seam_column else col)
        if target is None:
            raise GeometryError(f"Vertex {(row, col)} has no counterpart in the reference lattice")
        mapping[qubit] = target
    return mapping


def relabel(operator: PauliOperator, mapping: Dict[int, int], n: int) -> PauliOperator:
    return operator.embed(n, [mapping[qubit] for qubit in range(operator.n)])


def matches_reference_code(code: SubsystemCode, reference: SubsystemCode) -> bool:
    """Gauge-group equality of a merged code and `reference` under the seam relabeling."""
    if code.geometry is None or reference.geometry is None or code.n != reference.n:
        return False
    try:
        mapping = seam_relabeling(code.geometry, reference.geometry)
    except GeometryError as e:
        logger.debug(f"Seam relabeling failed: {e}")
        return False
    relabeled = [relabel(g, mapping, reference.n) for g in code.gauge_generators]
    return groups_equal(relabeled, reference.gauge_generators)
