# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from sls.code.subsystem_code import SubsystemCode
from sls.common.config_utils import ConfigBase
from sls.common.utils import bits_to_int, popcount
from sls.exception import DimensionError, InvalidCodeError
from sls.pauli.gf2 import BinaryMatrix, GF2Basis, kernel_basis, row_reduce, solve_affine_gf2
from sls.pauli.group import commutation_matrix, generator_basis, ordered_product, select
from sls.pauli.pauli import PauliOperator

logger = logging.getLogger(__name__)

PauliPair = Tuple[PauliOperator, PauliOperator]


class CodeParameters(ConfigBase):
    n: int
    k: int
    g: int
    s: int
    d: Optional[int] = None

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.g},{self.d if self.d is not None else '?'}]]"


@dataclass(frozen=True)
class CodeAnalysis:
    """
    Canonical decomposition of a subsystem code: stabilizer generators of the center, one anticommuting pair of bare
    logical operators per logical qubit and one anticommuting pair per gauge qubit. Pairs are ordered (X-like, Z-like).
    """

    n: int
    stabilizer_generators: Tuple[PauliOperator, ...]
    logical_pairs: Tuple[PauliPair, ...]
    gauge_pairs: Tuple[PauliPair, ...]

    @property
    def s(self) -> int:
        return len(self.stabilizer_generators)

    @property
    def k(self) -> int:
        return len(self.logical_pairs)

    @property
    def g(self) -> int:
        return len(self.gauge_pairs)

    def parameters(self, distance: Optional[int] = None) -> CodeParameters:
        return CodeParameters(n=self.n, k=self.k, g=self.g, s=self.s, d=distance)

    def bare_logicals(self) -> List[PauliOperator]:
        return [operator for pair in self.logical_pairs for operator in pair]

    def check(self):
        """Raise InvalidCodeError unless the decomposition satisfies the symplectic pairing relations."""
        if self.n != self.k + self.s + self.g:
            raise InvalidCodeError(f"n={self.n} differs from k+s+g={self.k + self.s + self.g}")
        pairs = list(self.logical_pairs) + list(self.gauge_pairs)
        for stabilizer in self.stabilizer_generators:
            if not stabilizer.is_hermitian:
                raise InvalidCodeError(f"Stabilizer generator {stabilizer} is not Hermitian")
            for operator in self.stabilizer_generators + tuple(op for pair in pairs for op in pair):
                if not stabilizer.commutes_with(operator):
                    raise InvalidCodeError(f"Stabilizer {stabilizer} anticommutes with {operator}")
        for i, (a, b) in enumerate(pairs):
            if a.commutes_with(b):
                raise InvalidCodeError(f"Paired operators {a} and {b} commute")
            for c, d in pairs[i + 1 :]:
                if not all(x.commutes_with(y) for x in (a, b) for y in (c, d)):
                    raise InvalidCodeError(f"Pairs ({a}, {b}) and ({c}, {d}) do not commute")


def _split(packed: int, n: int) -> Tuple[int, int]:
    return packed & ((1 << n) - 1), packed >> n


def _packed_weight(packed: int, n: int) -> int:
    x_bits, z_bits = _split(packed, n)
    return popcount(x_bits | z_bits)


def _packed_product(a: int, b: int, n: int) -> int:
    ax, az = _split(a, n)
    bx, bz = _split(b, n)
    return (popcount(ax & bz) + popcount(az & bx)) & 1


def _lowest_qubit(packed: int, n: int) -> int:
    x_bits, z_bits = _split(packed, n)
    support = x_bits | z_bits
    return (support & -support).bit_length() - 1


def _symplectic_pairs(vectors: Sequence[int], n: int) -> List[Tuple[int, int]]:
    """
    Symplectic Gram-Schmidt over vectors whose symplectic form is non-degenerate. The pool is scanned from the vector
    with the lowest qubit index, and the partner is the first later vector anticommuting with it.
    """
    pool = sorted(vectors, key=lambda v: (_lowest_qubit(v, n), v))
    pairs = []
    while pool:
        a = pool.pop(0)
        partner = next((i for i, b in enumerate(pool) if _packed_product(a, b, n)), None)
        if partner is None:
            raise InvalidCodeError("Symplectic form is degenerate on the quotient space")
        b = pool.pop(partner)
        pool = [c ^ (a if _packed_product(c, b, n) else 0) ^ (b if _packed_product(c, a, n) else 0) for c in pool]
        pairs.append(_orient(a, b, n))
    return pairs


def _orient(a: int, b: int, n: int) -> Tuple[int, int]:
    def x_bias(v):
        x_bits, z_bits = _split(v, n)
        return popcount(x_bits) - popcount(z_bits)

    return (b, a) if x_bias(a) < x_bias(b) else (a, b)


def _reduce_weight(vector: int, group: Sequence[int], n: int) -> int:
    improved = True
    while improved:
        improved = False
        for element in group:
            candidate = vector ^ element
            if _packed_weight(candidate, n) < _packed_weight(vector, n):
                vector = candidate
                improved = True
    return vector


def _check_identity_relations(generators: Sequence[PauliOperator], basis: GF2Basis):
    for relation in basis.relations:
        selected = select(generators, relation)
        if not all(a.commutes_with(b) for i, a in enumerate(selected) for b in selected[i + 1 :]):
            continue
        if ordered_product(selected).phase_exp != 0:
            raise InvalidCodeError(
                "Center of the gauge group contains -I: commuting generators "
                f"{[str(op) for op in selected]} multiply to {ordered_product(selected)}"
            )


def _as_group_element(generators: Sequence[PauliOperator], basis: GF2Basis, packed: int, n: int) -> PauliOperator:
    combination = basis.express(packed)
    return ordered_product(select(generators, combination), n).hermitian()


def center(code: SubsystemCode) -> List[PauliOperator]:
    """
    Independent generators of the center of the gauge group, each a signed product of gauge generators.

    The generators are the rows of the reduced echelon form of the center, so the result does not depend on how the
    gauge generators are ordered beyond the signs.
    """
    generators = code.gauge_generators
    if not generators:
        return []
    n = code.n
    basis = generator_basis(generators)
    _check_identity_relations(generators, basis)

    combinations = kernel_basis(commutation_matrix(generators, generators))
    rows = []
    for combination in combinations:
        packed = 0
        for index in np.flatnonzero(combination):
            packed ^= generators[index].packed
        if packed:
            rows.append(PauliOperator.from_packed(n, packed).symplectic_vector())
    if not rows:
        return []
    rref, pivots = row_reduce(np.vstack(rows))
    return [
        _as_group_element(generators, basis, PauliOperator.from_symplectic(row).packed, n)
        for row in rref[: len(pivots)]
    ]


def analyze(code: SubsystemCode) -> CodeAnalysis:
    """Decompose `code`; the result is cached on the code object."""
    if code._analysis is not None:
        return code._analysis

    n = code.n
    generators = code.gauge_generators
    stabilizers = center(code)
    stabilizer_vectors = [s.packed for s in stabilizers]
    basis = generator_basis(generators)

    quotient = GF2Basis(stabilizer_vectors)
    gauge_vectors = [g.packed for g in generators if quotient.add(g.packed)]
    gauge_pairs = tuple(
        (_as_group_element(generators, basis, a, n), _as_group_element(generators, basis, b, n))
        for a, b in _symplectic_pairs(gauge_vectors, n)
    )

    # bare logicals: vectors u with <u, g> = 0 for every gauge generator, taken modulo the stabilizers
    matrix = BinaryMatrix.from_paulis(generators, n).array
    swapped = np.hstack([matrix[:, n:], matrix[:, :n]])
    quotient = GF2Basis(stabilizer_vectors)
    logical_vectors = []
    for vector in kernel_basis(swapped):
        packed = PauliOperator.from_symplectic(vector).packed
        if quotient.add(packed):
            logical_vectors.append(packed)
    logical_pairs = tuple(
        (
            PauliOperator.from_packed(n, _reduce_weight(a, stabilizer_vectors, n)),
            PauliOperator.from_packed(n, _reduce_weight(b, stabilizer_vectors, n)),
        )
        for a, b in _symplectic_pairs(logical_vectors, n)
    )

    result = CodeAnalysis(n, tuple(stabilizers), logical_pairs, gauge_pairs)
    result.check()
    logger.debug(f"Analyzed code '{code.name}': {result.parameters()}")
    code._analysis = result
    return result


def bare_logicals(code: SubsystemCode) -> List[PauliPair]:
    return list(analyze(code).logical_pairs)


def stabilizer_generators(code: SubsystemCode) -> List[PauliOperator]:
    return list(analyze(code).stabilizer_generators)


def in_gauge_group(code: SubsystemCode, p: PauliOperator) -> bool:
    return generator_basis(code.gauge_generators).contains(p.packed)


def is_bare_logical(code: SubsystemCode, p: PauliOperator) -> bool:
    """Commutes with every gauge generator and is not a stabilizer, modulo phase."""
    if not all(p.commutes_with(g) for g in code.gauge_generators):
        return False
    return not GF2Basis(s.packed for s in analyze(code).stabilizer_generators).contains(p.packed)


def is_dressed_logical(code: SubsystemCode, p: PauliOperator) -> bool:
    """Commutes with every stabilizer and is not in the gauge group, modulo phase."""
    if not all(p.commutes_with(s) for s in analyze(code).stabilizer_generators):
        return False
    return not in_gauge_group(code, p)


def partner_logical(code: SubsystemCode, p: PauliOperator, logical_index: int = 0) -> PauliOperator:
    """Bare logical of qubit `logical_index` anticommuting with `p`, preferring the pure pair elements."""
    x_like, z_like = analyze(code).logical_pairs[logical_index]
    for candidate in (x_like, z_like, (x_like * z_like).hermitian()):
        if not candidate.commutes_with(p):
            return candidate
    raise InvalidCodeError(f"{p} commutes with every logical operator of qubit {logical_index}")


def reduce_to_support(
    p: PauliOperator,
    code: SubsystemCode,
    allowed: Iterable[int],
    use_gauge: bool = False,
    pauli_type: Optional[str] = None,
) -> Optional[PauliOperator]:
    """
    Multiply `p` by stabilizers (or by gauge operators when use_gauge) so that it acts only on `allowed`.

    With pauli_type "X" (or "Z") the result is additionally required to be X-type (or Z-type). Among the solutions a
    greedy pass lowers the weight. Returns None when no such representative exists, and `p` itself when it already
    satisfies the constraints.
    """
    if p.n != code.n:
        raise DimensionError(f"Operator acts on {p.n} qubits, code '{code.name}' on {code.n}")
    allowed_mask = bits_to_int(allowed)
    forbidden_bits = {"X": "z_bits", "Z": "x_bits"}.get(pauli_type)

    def fits(operator: PauliOperator) -> bool:
        if operator.support_bits & ~allowed_mask:
            return False
        return forbidden_bits is None or getattr(operator, forbidden_bits) == 0

    if fits(p):
        return p
    group = list(code.gauge_generators) if use_gauge else list(analyze(code).stabilizer_generators)
    if not group:
        return None

    # one constraint row per bit that must vanish
    constraints = []
    for qubit in range(code.n):
        if not (allowed_mask >> qubit) & 1:
            constraints.append(("x_bits", qubit))
            constraints.append(("z_bits", qubit))
        elif forbidden_bits is not None:
            constraints.append((forbidden_bits, qubit))
    matrix = np.array(
        [[(getattr(op, bits) >> qubit) & 1 for op in group] for bits, qubit in constraints], dtype=np.uint8
    ).reshape(len(constraints), len(group))
    rhs = np.array([(getattr(p, bits) >> qubit) & 1 for bits, qubit in constraints], dtype=np.uint8)
    solution = solve_affine_gf2(matrix, rhs)
    if solution is None:
        return None

    packed = [op.packed for op in group]

    def cost(combination: np.ndarray) -> int:
        vector = p.packed
        for index in np.flatnonzero(combination):
            vector ^= packed[index]
        return _packed_weight(vector, code.n)

    combination = solution.minimize(cost)
    return ordered_product([p] + [group[index] for index in np.flatnonzero(combination)])


def find_logical_in_region(code: SubsystemCode, region: Iterable[int]) -> Optional[PauliOperator]:
    """
    Return a dressed logical operator supported on `region`, or None when every operator on `region` that commutes
    with the stabilizers belongs to the gauge group.
    """
    region = sorted(set(region))
    region_set = set(region)
    n = code.n
    size = len(region)
    stabilizers = analyze(code).stabilizer_generators

    rows = [
        [(s.z_bits >> q) & 1 for q in region] + [(s.x_bits >> q) & 1 for q in region] for s in stabilizers
    ]
    commuting = kernel_basis(np.array(rows, dtype=np.uint8).reshape(len(rows), 2 * size))

    generators = code.gauge_generators
    outside = [q for q in range(n) if q not in region_set]
    rows = [[(getattr(g, bits) >> q) & 1 for g in generators] for q in outside for bits in ("x_bits", "z_bits")]
    local_combinations = kernel_basis(np.array(rows, dtype=np.uint8).reshape(len(rows), len(generators)))
    local_gauge = GF2Basis()
    for combination in local_combinations:
        packed = 0
        for index in np.flatnonzero(combination):
            packed ^= generators[index].packed
        local_gauge.add(packed)

    for vector in commuting:
        x_bits = bits_to_int(region[i] for i in np.flatnonzero(vector[:size]))
        z_bits = bits_to_int(region[i] for i in np.flatnonzero(vector[size:]))
        candidate = PauliOperator(n, x_bits, z_bits)
        if not local_gauge.contains(candidate.packed):
            return candidate
    return None


def is_correctable(code: SubsystemCode, errors: Sequence[PauliOperator]) -> bool:
    """Every product of two errors either anticommutes with a stabilizer or lies in the gauge group."""
    stabilizers = analyze(code).stabilizer_generators
    gauge = generator_basis(code.gauge_generators)
    for i, a in enumerate(errors):
        for b in errors[i:]:
            product = a * b
            if all(product.commutes_with(s) for s in stabilizers) and not gauge.contains(product.packed):
                return False
    return True
