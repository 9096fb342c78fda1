"""Pauli-product algebra with exact fourth-root-of-unity phases.

Products of Pauli letters only ever pick up phases in {1, i, -1, -i}, so the
phase is stored as an exponent of i and never touches floating point.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

from .circuits import ProductState
from .errors import LengthMismatch


class PauliLetter(IntEnum):
    I = 0
    X = 1
    Y = 2
    Z = 3


_LETTER_CHARS = "IXYZ"
_CHAR_TO_CODE = {c: i for i, c in enumerate(_LETTER_CHARS)}
_PHASES = (1 + 0j, 1j, -1 + 0j, -1j)
_PHASE_TO_EXP = {(1.0, 0.0): 0, (0.0, 1.0): 1, (-1.0, 0.0): 2, (0.0, -1.0): 3}
_PHASE_STR = ("+", "+i", "-", "-i")

# Slot-wise letter products: result letter and phase exponent (power of i),
# e.g. X*Y = iZ, Z*Y = -iX.
_MUL_LETTER = np.array(
    [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], dtype=np.uint8
)
_MUL_PHASE_EXP = np.array(
    [[0, 0, 0, 0], [0, 0, 1, 3], [0, 3, 0, 1], [0, 1, 3, 0]], dtype=np.int64
)


class PauliProduct:
    """phase * P_1 x ... x P_n with phase one of {1, i, -1, -i}."""

    __slots__ = ("phase_exp", "codes")

    def __init__(self, phase, letters):
        key = (float(complex(phase).real), float(complex(phase).imag))
        if key not in _PHASE_TO_EXP:
            raise ValueError(f"phase must be one of 1, i, -1, -i, got {phase!r}")
        self.phase_exp = _PHASE_TO_EXP[key]
        if isinstance(letters, str):
            try:
                codes = bytes(_CHAR_TO_CODE[c] for c in letters)
            except KeyError as exc:
                raise ValueError(f"unknown Pauli letter {exc.args[0]!r}") from None
        else:
            codes = bytes(int(l) for l in letters)
            if any(c > 3 for c in codes):
                raise ValueError("letter codes must be in 0..3")
        if not codes:
            raise ValueError("a Pauli product needs at least one letter")
        self.codes = codes

    @classmethod
    def from_exp(cls, phase_exp: int, codes: bytes) -> "PauliProduct":
        """Internal fast path: trusted letter codes and phase exponent."""
        p = cls.__new__(cls)
        p.phase_exp = phase_exp & 3
        p.codes = bytes(codes)
        return p

    @classmethod
    def identity(cls, n: int) -> "PauliProduct":
        return cls.from_exp(0, bytes(n))

    @classmethod
    def single_z(cls, n: int, line: int) -> "PauliProduct":
        """Z on `line` (1-based), identity elsewhere."""
        codes = bytearray(n)
        codes[line - 1] = PauliLetter.Z
        return cls.from_exp(0, bytes(codes))

    @property
    def phase(self) -> complex:
        return _PHASES[self.phase_exp]

    @property
    def letters(self) -> tuple:
        return tuple(PauliLetter(c) for c in self.codes)

    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    def __len__(self) -> int:
        return len(self.codes)

    def __eq__(self, other):
        if not isinstance(other, PauliProduct):
            return NotImplemented
        return self.phase_exp == other.phase_exp and self.codes == other.codes

    def __hash__(self):
        return hash((self.phase_exp, self.codes))

    def __mul__(self, other):
        return multiply_pauli_products(self, other)

    def __str__(self):
        return _PHASE_STR[self.phase_exp] + "".join(_LETTER_CHARS[c] for c in self.codes)

    def __repr__(self):
        return f"PauliProduct({self})"


def multiply_pauli_products(p: PauliProduct, q: PauliProduct) -> PauliProduct:
    """Slot-wise product p*q, phase accumulated exactly."""
    if len(p) != len(q):
        raise LengthMismatch(f"lengths differ: {len(p)} vs {len(q)}")
    a = np.frombuffer(p.codes, dtype=np.uint8)
    b = np.frombuffer(q.codes, dtype=np.uint8)
    exp = p.phase_exp + q.phase_exp + int(_MUL_PHASE_EXP[a, b].sum())
    return PauliProduct.from_exp(exp, _MUL_LETTER[a, b].tobytes())


def expectation_pauli_product(p: PauliProduct, state: ProductState) -> complex:
    """phase * prod_k <a_k|P_k|a_k> in O(n) scalar operations.

    Real whenever the phase is +-1 (each single-qubit factor is real).
    """
    if len(p) != len(state):
        raise LengthMismatch(f"operator length {len(p)} != state length {len(state)}")
    acc = 1.0
    for code, f in zip(p.codes, state.factors):
        if code == 0:
            continue
        if code == 1:  # X
            c = f.amp0.conjugate() * f.amp1
            acc *= 2.0 * c.real
        elif code == 2:  # Y
            c = f.amp0.conjugate() * f.amp1
            acc *= 2.0 * c.imag
        else:  # Z
            acc *= abs(f.amp0) ** 2 - abs(f.amp1) ** 2
    return _PHASES[p.phase_exp] * acc
