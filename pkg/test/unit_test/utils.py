# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import itertools
from typing import Iterator, List, Sequence, Set, Tuple

import numpy as np

from sls.code.subsystem_code import SubsystemCode
from sls.pauli.pauli import PauliOperator
from sls.simulator.encoding import encode
from sls.simulator.state import StabilizerState
from sls.surgery.merge import MergeResult


def all_paulis(n: int) -> Iterator[PauliOperator]:
    for letters in itertools.product("IXYZ", repeat=n):
        yield PauliOperator.from_string("".join(letters))


def single_qubit_errors(n: int) -> List[PauliOperator]:
    return [PauliOperator.single(n, qubit, letter) for qubit in range(n) for letter in "XYZ"]


def span_brute_force(rows: np.ndarray) -> Set[Tuple[int, ...]]:
    """Every GF(2) combination of the rows of a small matrix."""
    n_rows, n_cols = rows.shape
    vectors = set()
    for mask in range(1 << n_rows):
        vector = np.zeros(n_cols, dtype=np.uint8)
        for i in range(n_rows):
            if (mask >> i) & 1:
                vector ^= rows[i]
        vectors.add(tuple(int(v) for v in vector))
    return vectors


def random_binary_matrix(seed: int, n_rows: int, n_cols: int) -> np.ndarray:
    return np.random.default_rng(seed).integers(0, 2, size=(n_rows, n_cols), dtype=np.uint8)


def random_pauli(rng: np.random.Generator, n: int, hermitian: bool = False) -> PauliOperator:
    phase_exp = 2 * int(rng.integers(0, 2)) if hermitian else int(rng.integers(0, 4))
    return PauliOperator(n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n)), phase_exp)


def random_css_code(seed: int, n: int, n_x: int = 2, n_z: int = 2) -> SubsystemCode:
    """Random gauge group made of X-type and Z-type generators only, so its center never contains -I."""
    rng = np.random.default_rng(seed)
    generators = []
    for letter, count in (("X", n_x), ("Z", n_z)):
        for _ in range(count):
            support = np.flatnonzero(rng.integers(0, 2, size=n))
            if support.size == 0:
                support = [int(rng.integers(0, n))]
            generators.append(PauliOperator.from_sparse(n, {int(q): letter for q in support}))
    return SubsystemCode(generators, name=f"random-css-{seed}")


def merged_product_state(result: MergeResult, labels: Sequence[str] = ("Z+", "X+"), seed: int = 0) -> StabilizerState:
    """Code A and code B encoded with `labels`, followed by the ancillas in |+>."""
    spec = result.spec
    state = encode(spec.code_a, [labels[0]], seed=seed).tensor(encode(spec.code_b, [labels[1]], seed=seed))
    return state.tensor(StabilizerState.plus_state(len(result.ancilla_ids)), seed=seed)
