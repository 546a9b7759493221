# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, Optional, Tuple

from sls.exception import GeometryError

if TYPE_CHECKING:
    from sls.code.subsystem_code import SubsystemCode

Coordinate = Tuple[int, int]


@dataclass(frozen=True)
class Lattice2D:
    """
    Placement of qubits on integer (row, col) coordinates. Rows and columns are 1-based, row 1 is the top row and
    column 1 the leftmost one. Not every vertex of the width x height box needs to hold a qubit.
    """

    width: int
    height: int
    coordinates: Tuple[Coordinate, ...]
    ancillas: Tuple[int, ...] = ()
    seam_column: Optional[int] = None
    _index: Dict[Coordinate, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        coordinates = tuple((int(row), int(col)) for row, col in self.coordinates)
        object.__setattr__(self, "coordinates", coordinates)
        object.__setattr__(self, "ancillas", tuple(self.ancillas))
        index = {}
        for qubit, (row, col) in enumerate(coordinates):
            if not (1 <= row <= self.height and 1 <= col <= self.width):
                raise GeometryError(f"Qubit {qubit} at {(row, col)} lies outside the {self.height}x{self.width} box")
            if (row, col) in index:
                raise GeometryError(f"Qubits {index[(row, col)]} and {qubit} share the vertex {(row, col)}")
            index[(row, col)] = qubit
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_coordinates(cls, coordinates: Iterable[Coordinate], **kwargs) -> "Lattice2D":
        coordinates = tuple(coordinates)
        height = max((row for row, _ in coordinates), default=0)
        width = max((col for _, col in coordinates), default=0)
        width = kwargs.pop("width", width)
        height = kwargs.pop("height", height)
        return cls(width=width, height=height, coordinates=coordinates, **kwargs)

    @property
    def n_qubits(self) -> int:
        return len(self.coordinates)

    def coordinate(self, qubit: int) -> Coordinate:
        return self.coordinates[qubit]

    def qubit_at(self, row: int, col: int) -> Optional[int]:
        return self._index.get((row, col))

    def row(self, qubit: int) -> int:
        return self.coordinates[qubit][0]

    def col(self, qubit: int) -> int:
        return self.coordinates[qubit][1]

    def qubits_in_columns(self, first: int, last: int) -> Tuple[int, ...]:
        """Qubits whose column lies in [first, last]."""
        return tuple(qubit for qubit, (_, col) in enumerate(self.coordinates) if first <= col <= last)

    def boundary_strip(self, side, width: int) -> Tuple[int, ...]:
        """Qubits in the `width` outermost columns on `side` ("left" or "right")."""
        if str(getattr(side, "value", side)) == "left":
            return self.qubits_in_columns(1, width)
        return self.qubits_in_columns(self.width - width + 1, self.width)

    def sort_top_to_bottom(self, qubits: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(qubits, key=self.coordinate))

    def extent(self, qubits: Iterable[int]) -> int:
        """Side length of the smallest square box covering `qubits`, measured in vertices."""
        rows, cols = [], []
        for qubit in qubits:
            row, col = self.coordinates[qubit]
            rows.append(row)
            cols.append(col)
        if not rows:
            return 0
        return max(max(rows) - min(rows), max(cols) - min(cols)) + 1


def interaction_range(code: "SubsystemCode") -> int:
    """
    Smallest r such that every gauge generator fits in an r x r box of the code's lattice.
    """
    if code.geometry is None:
        raise GeometryError(f"Code '{code.name}' has no lattice coordinates")
    return max((code.geometry.extent(generator.support()) for generator in code.gauge_generators), default=0)
