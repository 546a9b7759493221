# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from sls.code.distance.search import DistanceResult, DistanceSearch, SearchProblem
from sls.common.config_utils import ConfigParam
from sls.pauli.gf2 import GF2Basis
from sls.pauli.pauli import PauliOperator

logger = logging.getLogger(__name__)

# X, Y, Z as (x, z) bits
_LETTERS = ((1, 0), (1, 1), (0, 1))


class _Tables:
    """Single-qubit syndromes and a syndrome -> (qubit, letter) index used to close the last position."""

    def __init__(self, problem: SearchProblem):
        n = problem.n
        mask = (1 << n) - 1
        self.n = n
        self.gauge = GF2Basis(problem.gauge)
        self.vectors: List[Tuple[int, ...]] = []
        self.syndromes: List[Tuple[int, ...]] = []
        self.lookup: Dict[int, List[Tuple[int, int]]] = {}
        for qubit in range(n):
            vectors, syndromes = [], []
            for letter, (x, z) in enumerate(_LETTERS):
                syndrome = 0
                for index, stabilizer in enumerate(problem.stabilizers):
                    s_x, s_z = (stabilizer & mask) >> qubit & 1, (stabilizer >> n) >> qubit & 1
                    if (x & s_z) ^ (z & s_x):
                        syndrome |= 1 << index
                vectors.append((x << qubit) | (z << (n + qubit)))
                syndromes.append(syndrome)
                self.lookup.setdefault(syndrome, []).append((qubit, letter))
            self.vectors.append(tuple(vectors))
            self.syndromes.append(tuple(syndromes))

    def is_logical(self, vector: int) -> bool:
        return not self.gauge.contains(vector)


def _extend(tables: _Tables, weight: int, depth: int, last: int, syndrome: int, vector: int) -> Optional[int]:
    if depth == weight - 1:
        for qubit, letter in tables.lookup.get(syndrome, ()):
            if qubit > last:
                candidate = vector ^ tables.vectors[qubit][letter]
                if tables.is_logical(candidate):
                    return candidate
        return None
    for qubit in range(last + 1, tables.n - (weight - depth) + 1):
        for letter in range(3):
            found = _extend(
                tables,
                weight,
                depth + 1,
                qubit,
                syndrome ^ tables.syndromes[qubit][letter],
                vector ^ tables.vectors[qubit][letter],
            )
            if found is not None:
                return found
    return None


def search_weight(problem: SearchProblem, weight: int, first_qubits: Sequence[int]) -> Optional[int]:
    """Packed dressed logical of exactly `weight` whose lowest qubit is in `first_qubits`, or None."""
    tables = _Tables(problem)
    for qubit in first_qubits:
        for letter in range(3):
            syndrome = tables.syndromes[qubit][letter]
            vector = tables.vectors[qubit][letter]
            if weight == 1:
                if syndrome == 0 and tables.is_logical(vector):
                    return vector
                continue
            found = _extend(tables, weight, 1, qubit, syndrome, vector)
            if found is not None:
                return found
    return None


class PrunedDistanceSearch(DistanceSearch):
    """
    Depth-first enumeration of Pauli supports in increasing weight with a running syndrome. The last position is
    looked up by syndrome instead of enumerated, so only supports that commute with every stabilizer are built.
    """

    name = "pruned"

    @staticmethod
    def _default_config():
        return {
            "num_workers": ConfigParam(
                type_=int, default_value=1, description="Worker processes splitting the search by first qubit."
            ),
        }

    def search(self, max_weight: int) -> DistanceResult:
        n = self.problem.n
        num_workers = self.config.num_workers or 1
        for weight in range(1, min(max_weight, n) + 1):
            first_qubits = list(range(n - weight + 1))
            if num_workers > 1 and len(first_qubits) > 1:
                chunks = [first_qubits[i::num_workers] for i in range(num_workers)]
                chunks = [sorted(chunk) for chunk in chunks if chunk]
                with ProcessPoolExecutor(max_workers=num_workers) as executor:
                    results = list(
                        executor.map(search_weight, [self.problem] * len(chunks), [weight] * len(chunks), chunks)
                    )
                found = next((result for result in results if result is not None), None)
            else:
                found = search_weight(self.problem, weight, first_qubits)
            logger.debug(f"Weight {weight} search on {n} qubits: {'found' if found is not None else 'none'}")
            if found is not None:
                return DistanceResult(weight, max_weight, PauliOperator.from_packed(n, found))
        return DistanceResult(None, max_weight)
