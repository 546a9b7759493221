# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from sls.exception import DimensionError


class BinaryMatrix:
    """Dense matrix over GF(2) stored as a uint8 numpy array."""

    def __init__(self, rows: Union[np.ndarray, Sequence[Sequence[int]]], n_cols: Optional[int] = None):
        array = np.asarray(rows, dtype=np.uint8)
        if array.size == 0:
            if n_cols is None:
                n_cols = array.shape[1] if array.ndim == 2 else 0
            array = np.zeros((0 if array.ndim < 2 else array.shape[0], n_cols), dtype=np.uint8)
        if array.ndim != 2:
            raise DimensionError("BinaryMatrix expects a two-dimensional array")
        if n_cols is not None and array.shape[1] != n_cols:
            raise DimensionError(f"Expected {n_cols} columns, got {array.shape[1]}")
        self.array = array & 1

    @classmethod
    def from_paulis(cls, paulis: Sequence, n: Optional[int] = None) -> "BinaryMatrix":
        """Rows are the [x | z] symplectic vectors of the operators."""
        if not paulis:
            return cls(np.zeros((0, 2 * (n or 0)), dtype=np.uint8))
        return cls(np.vstack([p.symplectic_vector() for p in paulis]))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BinaryMatrix":
        return cls(np.zeros((n_rows, n_cols), dtype=np.uint8))

    @property
    def n_rows(self) -> int:
        return self.array.shape[0]

    @property
    def n_cols(self) -> int:
        return self.array.shape[1]

    @property
    def T(self) -> "BinaryMatrix":
        return BinaryMatrix(self.array.T.copy())

    def __matmul__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        return BinaryMatrix((self.array.astype(np.int64) @ other.array.astype(np.int64)) % 2)

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.n_rows}x{self.n_cols})"


def _as_array(m: Union[BinaryMatrix, np.ndarray]) -> np.ndarray:
    return m.array if isinstance(m, BinaryMatrix) else np.asarray(m, dtype=np.uint8) & 1


def row_reduce(matrix: Union[BinaryMatrix, np.ndarray]) -> Tuple[np.ndarray, List[int]]:
    """Return the reduced row echelon form of `matrix` over GF(2) and its pivot columns. The input is not modified."""
    mat = _as_array(matrix).copy()
    n_rows, n_cols = mat.shape
    pivots = []
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.flatnonzero(mat[rank:, col])
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
        others = np.flatnonzero(mat[:, col])
        others = others[others != rank]
        if others.size:
            mat[others] ^= mat[rank]
        pivots.append(col)
        rank += 1
    return mat, pivots


def rank_gf2(matrix: Union[BinaryMatrix, np.ndarray]) -> int:
    return len(row_reduce(matrix)[1])


def kernel_basis(matrix: Union[BinaryMatrix, np.ndarray]) -> np.ndarray:
    """Rows of the returned array span {v : matrix @ v = 0}."""
    rref, pivots = row_reduce(matrix)
    n_cols = rref.shape[1]
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = np.zeros(n_cols, dtype=np.uint8)
        vector[free] = 1
        for row, pivot in enumerate(pivots):
            vector[pivot] = rref[row, free]
        basis.append(vector)
    if not basis:
        return np.zeros((0, n_cols), dtype=np.uint8)
    return np.vstack(basis)


@dataclass
class AffineSolution:
    """Solution set of m @ x = rhs: `particular` plus any combination of the `kernel` rows."""

    particular: np.ndarray
    kernel: np.ndarray = field(default_factory=lambda: np.zeros((0, 0), dtype=np.uint8))

    @property
    def dimension(self) -> int:
        return self.kernel.shape[0]

    def minimize(self, cost: Callable[[np.ndarray], int]) -> np.ndarray:
        """
        Greedy kernel reduction: add kernel vectors to the particular solution while that lowers `cost`.
        The result is a valid solution, not necessarily a global minimum.
        """
        best = self.particular.copy()
        best_cost = cost(best)
        improved = True
        while improved:
            improved = False
            for vector in self.kernel:
                candidate = best ^ vector
                candidate_cost = cost(candidate)
                if candidate_cost < best_cost:
                    best, best_cost = candidate, candidate_cost
                    improved = True
        return best


def solve_affine_gf2(
    matrix: Union[BinaryMatrix, np.ndarray], rhs: Union[Sequence[int], np.ndarray]
) -> Optional[AffineSolution]:
    """
    Solve matrix @ x = rhs over GF(2). Each row of `matrix` is one constraint.

    Returns None when the system is inconsistent.
    """
    mat = _as_array(matrix)
    rhs = np.asarray(rhs, dtype=np.uint8).reshape(-1) & 1
    if rhs.size != mat.shape[0]:
        raise DimensionError(f"Right-hand side has {rhs.size} entries for {mat.shape[0]} constraints")
    n_cols = mat.shape[1]
    rref, pivots = row_reduce(np.hstack([mat, rhs.reshape(-1, 1)]))
    if pivots and pivots[-1] == n_cols:
        return None

    particular = np.zeros(n_cols, dtype=np.uint8)
    for row, pivot in enumerate(pivots):
        particular[pivot] = rref[row, n_cols]
    pivot_set = set(pivots)
    kernel = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = np.zeros(n_cols, dtype=np.uint8)
        vector[free] = 1
        for row, pivot in enumerate(pivots):
            vector[pivot] = rref[row, free]
        kernel.append(vector)
    kernel = np.vstack(kernel) if kernel else np.zeros((0, n_cols), dtype=np.uint8)
    return AffineSolution(particular, kernel)


class GF2Basis:
    """
    Incrementally reduced set of GF(2) vectors packed into Python ints.

    Every stored row remembers which inserted vectors it combines (as a bit mask over insertion order), so membership
    queries also return an explicit combination, and dependent insertions are kept as relations.
    """

    def __init__(self, vectors: Sequence[int] = ()):
        self._rows: Dict[int, Tuple[int, int]] = {}
        self._count = 0
        self.relations: List[int] = []
        for vector in vectors:
            self.add(vector)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def size(self) -> int:
        """Number of inserted vectors, dependent ones included."""
        return self._count

    def reduce(self, vector: int) -> Tuple[int, int]:
        combination = 0
        while vector:
            entry = self._rows.get(vector.bit_length() - 1)
            if entry is None:
                break
            vector ^= entry[0]
            combination ^= entry[1]
        return vector, combination

    def add(self, vector: int) -> bool:
        """Insert `vector`; returns True when it was independent of the earlier ones."""
        index = self._count
        self._count += 1
        residual, combination = self.reduce(vector)
        if residual == 0:
            self.relations.append(combination ^ (1 << index))
            return False
        self._rows[residual.bit_length() - 1] = (residual, combination ^ (1 << index))
        return True

    def contains(self, vector: int) -> bool:
        return self.reduce(vector)[0] == 0

    def express(self, vector: int) -> Optional[int]:
        """Mask of inserted vectors whose sum is `vector`, or None when it is outside the span."""
        residual, combination = self.reduce(vector)
        return combination if residual == 0 else None
