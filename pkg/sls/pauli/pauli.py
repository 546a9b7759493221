# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from sls.common.utils import bits_to_int, iter_bits, popcount
from sls.exception import DimensionError

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}
_PREFIX_PHASE = {"+": 0, "+i": 1, "-": 2, "-i": 3}
_PHASE_PREFIX = {phase: prefix for prefix, phase in _PREFIX_PHASE.items()}


@dataclass(frozen=True)
class PauliOperator:
    """
    Pauli operator on n qubits in binary symplectic form.

    The operator is i^phase_exp times the tensor product of the single-qubit letters I, X, Y, Z. The letter on qubit j
    is read from bit j of x_bits and z_bits (X: x=1, Z: z=1, Y: both) and Y = iXZ. Under this convention the product
    X*Z has both bits set and phase_exp = 3, and an operator is Hermitian iff phase_exp is even.

    Values are immutable; arithmetic returns new operators.
    """

    n: int
    x_bits: int = 0
    z_bits: int = 0
    phase_exp: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise DimensionError(f"Invalid qubit count {self.n}")
        if self.x_bits < 0 or self.z_bits < 0 or (self.x_bits | self.z_bits) >> self.n:
            raise DimensionError(f"Bits of the operator do not fit on {self.n} qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # ----------------------------------------------------------------------------------------------------------
    # constructors
    # ----------------------------------------------------------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n)

    @classmethod
    def from_string(cls, text: str) -> "PauliOperator":
        """
        Parse the canonical text form: optional sign prefix ("+", "-", "+i", "-i") followed by letters over {I,X,Y,Z}.
        Qubit 0 is the first letter.
        """
        text = text.strip()
        phase_exp = 0
        for prefix in ("+i", "-i", "+", "-"):
            if text.startswith(prefix):
                phase_exp = _PREFIX_PHASE[prefix]
                text = text[len(prefix) :]
                break
        x_bits = z_bits = 0
        for qubit, letter in enumerate(text):
            try:
                x, z = _LETTER_BITS[letter]
            except KeyError:
                raise ValueError(f"Invalid Pauli letter '{letter}' in '{text}'") from None
            x_bits |= x << qubit
            z_bits |= z << qubit
        return cls(len(text), x_bits, z_bits, phase_exp)

    @classmethod
    def from_sparse(cls, n: int, letters: Mapping[int, str], phase_exp: int = 0) -> "PauliOperator":
        """Build an operator from a {qubit: letter} mapping."""
        x_bits = z_bits = 0
        for qubit, letter in letters.items():
            if not 0 <= qubit < n:
                raise DimensionError(f"Qubit {qubit} out of range for {n} qubits")
            x, z = _LETTER_BITS[letter]
            x_bits |= x << qubit
            z_bits |= z << qubit
        return cls(n, x_bits, z_bits, phase_exp)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliOperator":
        return cls.from_sparse(n, {qubit: letter})

    @classmethod
    def x_type(cls, n: int, qubits: Iterable[int]) -> "PauliOperator":
        return cls(n, x_bits=bits_to_int(qubits))

    @classmethod
    def z_type(cls, n: int, qubits: Iterable[int]) -> "PauliOperator":
        return cls(n, z_bits=bits_to_int(qubits))

    @classmethod
    def from_symplectic(cls, vector: Sequence[int], phase_exp: int = 0) -> "PauliOperator":
        """Build an operator from a [x | z] GF(2) vector of length 2n."""
        vector = np.asarray(vector, dtype=np.uint8) & 1
        if vector.ndim != 1 or vector.size % 2:
            raise DimensionError("Symplectic vectors must be one-dimensional with even length")
        n = vector.size // 2
        return cls(n, bits_to_int(np.flatnonzero(vector[:n])), bits_to_int(np.flatnonzero(vector[n:])), phase_exp)

    @classmethod
    def from_packed(cls, n: int, packed: int, phase_exp: int = 0) -> "PauliOperator":
        """Inverse of `packed`: x bits in the low n bits, z bits above them."""
        mask = (1 << n) - 1
        return cls(n, packed & mask, packed >> n, phase_exp)

    # ----------------------------------------------------------------------------------------------------------
    # views
    # ----------------------------------------------------------------------------------------------------------
    @property
    def packed(self) -> int:
        return self.x_bits | (self.z_bits << self.n)

    @property
    def support_bits(self) -> int:
        return self.x_bits | self.z_bits

    @property
    def weight(self) -> int:
        return popcount(self.support_bits)

    def support(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.support_bits))

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    @property
    def is_identity(self) -> bool:
        """True when all bits are zero, whatever the phase."""
        return self.support_bits == 0

    @property
    def pauli_type(self) -> Optional[str]:
        """"X" or "Z" for pure X-type or Z-type operators, None otherwise."""
        if self.x_bits and not self.z_bits:
            return "X"
        if self.z_bits and not self.x_bits:
            return "Z"
        return None

    def letter(self, qubit: int) -> str:
        return _BITS_LETTER[((self.x_bits >> qubit) & 1, (self.z_bits >> qubit) & 1)]

    def letters(self) -> str:
        return "".join(self.letter(qubit) for qubit in range(self.n))

    def symplectic_vector(self) -> np.ndarray:
        vector = np.zeros(2 * self.n, dtype=np.uint8)
        for qubit in iter_bits(self.x_bits):
            vector[qubit] = 1
        for qubit in iter_bits(self.z_bits):
            vector[self.n + qubit] = 1
        return vector

    def __str__(self) -> str:
        return _PHASE_PREFIX[self.phase_exp] + self.letters()

    def to_json(self) -> str:
        return str(self)

    # ----------------------------------------------------------------------------------------------------------
    # arithmetic
    # ----------------------------------------------------------------------------------------------------------
    def _check_dimension(self, other: "PauliOperator"):
        if self.n != other.n:
            raise DimensionError(f"Operators act on {self.n} and {other.n} qubits")

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        self._check_dimension(other)
        # i-exponents relative to the X^x Z^z ordering, then moving Z^z1 past X^x2
        exponent = self.phase_exp + popcount(self.x_bits & self.z_bits)
        exponent += other.phase_exp + popcount(other.x_bits & other.z_bits)
        exponent += 2 * popcount(self.z_bits & other.x_bits)
        x_bits = self.x_bits ^ other.x_bits
        z_bits = self.z_bits ^ other.z_bits
        return PauliOperator(self.n, x_bits, z_bits, exponent - popcount(x_bits & z_bits))

    def symplectic_product(self, other: "PauliOperator") -> int:
        self._check_dimension(other)
        return (popcount(self.x_bits & other.z_bits) + popcount(self.z_bits & other.x_bits)) % 2

    def commutes_with(self, other: "PauliOperator") -> bool:
        return self.symplectic_product(other) == 0

    def with_phase(self, phase_exp: int) -> "PauliOperator":
        return PauliOperator(self.n, self.x_bits, self.z_bits, phase_exp)

    def __neg__(self) -> "PauliOperator":
        return self.with_phase(self.phase_exp + 2)

    def unsigned(self) -> "PauliOperator":
        return self.with_phase(0)

    def hermitian(self) -> "PauliOperator":
        """Multiply an anti-Hermitian operator by -i; Hermitian operators are returned unchanged."""
        if self.is_hermitian:
            return self
        return self.with_phase(self.phase_exp - 1)

    def equals_up_to_phase(self, other: "PauliOperator") -> bool:
        return self.n == other.n and self.x_bits == other.x_bits and self.z_bits == other.z_bits

    def embed(self, n: int, index_map: Sequence[int]) -> "PauliOperator":
        """Place qubit j of this operator on qubit index_map[j] of an n-qubit register."""
        if len(index_map) != self.n:
            raise DimensionError(f"Index map has {len(index_map)} entries for {self.n} qubits")
        x_bits = bits_to_int(index_map[qubit] for qubit in iter_bits(self.x_bits))
        z_bits = bits_to_int(index_map[qubit] for qubit in iter_bits(self.z_bits))
        return PauliOperator(n, x_bits, z_bits, self.phase_exp)

    def restrict(self, qubits: Sequence[int]) -> "PauliOperator":
        """Keep the letters on `qubits` (in the given order) and drop the rest; the phase is kept."""
        letters = {index: self.letter(qubit) for index, qubit in enumerate(qubits) if self.letter(qubit) != "I"}
        return PauliOperator.from_sparse(len(qubits), letters, self.phase_exp)
