# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from sls.code.analysis import analyze, find_logical_in_region, reduce_to_support
from sls.code.subsystem_code import SubsystemCode
from sls.constants import PauliType, Side
from sls.exception import GeometryError, NoStripRepresentativeError
from sls.lattice.lattice import Lattice2D, interaction_range
from sls.pauli.pauli import PauliOperator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundaryLogical:
    """
    Logical representative confined to a vertical strip touching one side of the lattice. `support` lists the qubits
    of the operator ordered top to bottom (then left to right).
    """

    operator: PauliOperator
    support: Tuple[int, ...]
    strip_width: int
    side: Side
    logical_index: int = 0

    @property
    def weight(self) -> int:
        return len(self.support)

    @property
    def pauli_type(self) -> Optional[str]:
        return self.operator.pauli_type

    def component(self, position: int) -> str:
        """Single-qubit letter of the operator on support[position]."""
        return self.operator.letter(self.support[position])

    def to_json(self) -> dict:
        return {
            "operator": str(self.operator),
            "support": list(self.support),
            "strip_width": self.strip_width,
            "side": self.side.value,
            "logical_index": self.logical_index,
        }


def _search_order(pauli_type: Optional[str]) -> List[Optional[str]]:
    if pauli_type is None:
        return [PauliType.Z.value, PauliType.X.value, None]
    return [pauli_type, None]


def boundary_logical(
    code: SubsystemCode,
    side: Union[Side, str],
    logical_index: int = 0,
    pauli_type: Optional[Union[PauliType, str]] = None,
) -> BoundaryLogical:
    """
    Find a representative of a logical class of qubit `logical_index` inside a boundary strip of width at most the
    interaction range.

    Bare representatives (modulo stabilizers) are preferred over dressed ones, the requested Pauli type (Z then X
    when none is requested) over mixed operators, and narrower strips over wider ones. The classes of the qubit are
    tried in the order X-like, Z-like, their product. The found support is re-checked so that no logical operator of
    the code fits strictly inside it.
    """
    side = Side(side)
    pauli_type = PauliType(pauli_type).value if pauli_type is not None else None
    if code.geometry is None:
        raise GeometryError(f"Code '{code.name}' has no lattice coordinates")
    analysis = analyze(code)
    if not 0 <= logical_index < analysis.k:
        raise ValueError(f"Code '{code.name}' has {analysis.k} logical qubits, got index {logical_index}")
    x_like, z_like = analysis.logical_pairs[logical_index]
    classes = [x_like, z_like, (x_like * z_like).hermitian()]
    r = max(interaction_range(code), 1)

    for use_gauge in (False, True):
        for type_choice in _search_order(pauli_type):
            for width in range(1, r + 1):
                strip = code.geometry.boundary_strip(side, width)
                for logical in classes:
                    found = reduce_to_support(logical, code, strip, use_gauge=use_gauge, pauli_type=type_choice)
                    if found is None or found.is_identity:
                        continue
                    if pauli_type is not None and found.pauli_type != pauli_type:
                        logger.warning(
                            f"Code '{code.name}' has no {pauli_type}-type logical on its {side.value} boundary;"
                            f" using {found.unsigned()}"
                        )
                    return _finish(code, found.unsigned(), width, side, logical_index)
    raise NoStripRepresentativeError(
        f"No logical of qubit {logical_index} of code '{code.name}' fits a {side.value} strip of width <= {r}"
    )


def _finish(code: SubsystemCode, operator: PauliOperator, width: int, side: Side, logical_index: int):
    support = code.geometry.sort_top_to_bottom(operator.support())
    for qubit in support:
        smaller = [q for q in support if q != qubit]
        witness = find_logical_in_region(code, smaller)
        if witness is not None:
            raise NoStripRepresentativeError(
                f"Boundary logical {operator} of code '{code.name}' contains the smaller logical {witness}"
            )
    logger.debug(f"Boundary logical of '{code.name}' on the {side.value} side: {operator} (strip width {width})")
    return BoundaryLogical(operator, support, width, side, logical_index)


@dataclass(frozen=True)
class MergedLattice:
    """
    Joint layout of two lattices placed side by side with a seam column between them. Merged qubit indices are the
    qubits of A, then those of B, then the ancillas (top to bottom).
    """

    lattice: Lattice2D
    q_a: Tuple[int, ...]
    q_b: Tuple[int, ...]
    q_c: Tuple[int, ...]
    n_a: int
    n_b: int
    seam_column: int
    strip_height: int
    rows_a: Dict[int, int]
    rows_b: Dict[int, int]

    @property
    def embedding_a(self) -> Tuple[int, ...]:
        return tuple(range(self.n_a))

    @property
    def embedding_b(self) -> Tuple[int, ...]:
        return tuple(range(self.n_a, self.n_a + self.n_b))

    def strip_counts(self) -> List[Tuple[int, int, int]]:
        """Number of Q_A, Q_B and Q_C members in each horizontal strip of height `strip_height`."""
        strips = (self.lattice.height + self.strip_height - 1) // self.strip_height
        counts = [[0, 0, 0] for _ in range(strips)]
        for slot, qubits in enumerate((self.q_a, self.q_b, self.q_c)):
            for qubit in qubits:
                counts[(self.lattice.row(qubit) - 1) // self.strip_height][slot] += 1
        return [tuple(count) for count in counts]


class _RowShift:
    """Monotone row relabeling obtained by inserting blank rows above chosen rows."""

    def __init__(self):
        self.insertions: List[Tuple[int, int]] = []

    def insert(self, before_row: int, count: int):
        if count > 0:
            self.insertions.append((before_row, count))

    def __call__(self, row: int) -> int:
        return row + sum(count for before_row, count in self.insertions if before_row <= row)


def _strictly_increasing(rows: List[int], label: str):
    if any(b <= a for a, b in zip(rows, rows[1:])):
        raise GeometryError(f"Boundary support of {label} has two qubits on one row; Q orderings cannot be aligned")


def prepare_merged_lattice(
    lattice_a: Lattice2D,
    logical_a: BoundaryLogical,
    lattice_b: Lattice2D,
    logical_b: BoundaryLogical,
    ancilla_count: int,
    strip_height: int = 2,
) -> MergedLattice:
    """
    Place lattice A left of lattice B with one seam column in between, inserting blank rows so that the i-th qubits of
    both boundary supports share a row. Ancilla i sits on the seam column in the row of the i-th support qubit. When
    the supports differ in size, the first unmatched qubit of the longer one is moved to the next strip of height
    `strip_height`.
    """
    if logical_a.side != Side.RIGHT or logical_b.side != Side.LEFT:
        raise GeometryError(
            f"Merging needs A's logical on its right side and B's on its left, got {logical_a.side.value} and"
            f" {logical_b.side.value}"
        )
    rows_a = [lattice_a.row(q) for q in logical_a.support]
    rows_b = [lattice_b.row(q) for q in logical_b.support]
    _strictly_increasing(rows_a, "A")
    _strictly_increasing(rows_b, "B")
    n_pairs = max(len(rows_a), len(rows_b))
    if not 0 <= ancilla_count <= max(n_pairs - 1, 0):
        raise GeometryError(f"Ancilla count must lie in [0, {max(n_pairs - 1, 0)}], got {ancilla_count}")

    shift_a, shift_b = _RowShift(), _RowShift()
    matched = min(len(rows_a), len(rows_b))
    for row_a, row_b in zip(rows_a[:matched], rows_b[:matched]):
        target_a, target_b = shift_a(row_a), shift_b(row_b)
        if target_a < target_b:
            shift_a.insert(row_a, target_b - target_a)
        elif target_b < target_a:
            shift_b.insert(row_b, target_a - target_b)
    if matched and len(rows_a) != len(rows_b):
        longer_rows, shift = (rows_a, shift_a) if len(rows_a) > len(rows_b) else (rows_b, shift_b)
        previous = shift(longer_rows[matched - 1])
        current = shift(longer_rows[matched])
        if (current - 1) // strip_height == (previous - 1) // strip_height:
            next_strip_row = ((previous - 1) // strip_height + 1) * strip_height + 1
            shift.insert(longer_rows[matched], next_strip_row - current)

    seam = lattice_a.width + 1
    coordinates = [(shift_a(row), col) for row, col in lattice_a.coordinates]
    coordinates += [(shift_b(row), col + seam) for row, col in lattice_b.coordinates]
    guide = [coordinates[q][0] for q in logical_a.support] if len(rows_a) >= len(rows_b) else None
    if guide is None:
        guide = [coordinates[lattice_a.n_qubits + q][0] for q in logical_b.support]
    n_code = len(coordinates)
    coordinates += [(guide[i], seam) for i in range(ancilla_count)]
    height = max(row for row, _ in coordinates) if coordinates else 0
    height = max(height, shift_a(lattice_a.height), shift_b(lattice_b.height))

    merged = Lattice2D(
        width=lattice_a.width + lattice_b.width + 1,
        height=height,
        coordinates=tuple(coordinates),
        ancillas=tuple(range(n_code, n_code + ancilla_count)),
        seam_column=seam,
    )
    inserted = len(shift_a.insertions) + len(shift_b.insertions)
    logger.debug(f"Merged lattice {merged.height}x{merged.width}, {inserted} blank row insertions")
    return MergedLattice(
        lattice=merged,
        q_a=tuple(logical_a.support),
        q_b=tuple(lattice_a.n_qubits + q for q in logical_b.support),
        q_c=tuple(range(n_code, n_code + ancilla_count)),
        n_a=lattice_a.n_qubits,
        n_b=lattice_b.n_qubits,
        seam_column=seam,
        strip_height=strip_height,
        rows_a={row: shift_a(row) for row in range(1, lattice_a.height + 1)},
        rows_b={row: shift_b(row) for row in range(1, lattice_b.height + 1)},
    )
