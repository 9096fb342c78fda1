"""Circuits, gates, and product-state inputs shared by every simulator.

Conventions fixed here and relied on everywhere else: lines are 1-based,
line 1 is the leftmost (most significant) tensor factor, and two-qubit gate
matrices put the first listed line on the more significant axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DeterminantMismatch, LineOutOfRange, NotUnitary

UNITARY_TOL = 1e-9
STATE_NORM_TOL = 1e-12
OUTCOME_SUM_TOL = 1e-10
OUTCOME_NEG_TOL = 1e-9

_SQRT2_INV = 1.0 / math.sqrt(2.0)
_H_MATRIX = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
_P_MATRIX = np.array([[1, 0], [0, 1j]], dtype=complex)
_CZ_MATRIX = np.diag([1, 1, 1, -1]).astype(complex)


def _finite_complex(value, what: str) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{what} must be finite, got {z!r}")
    return z


def _as_unitary(matrix, dim: int, what: str) -> np.ndarray:
    m = np.array(matrix, dtype=complex)
    if m.shape != (dim, dim):
        raise ValueError(f"{what} must be {dim}x{dim}, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{what} must have finite entries")
    if np.max(np.abs(m.conj().T @ m - np.eye(dim))) > UNITARY_TOL:
        raise NotUnitary(f"{what} is not unitary within {UNITARY_TOL:g}")
    m.flags.writeable = False
    return m


@dataclass(frozen=True)
class SingleQubitState:
    """A normalized single-qubit pure state amp0|0> + amp1|1>."""

    amp0: complex
    amp1: complex

    def __post_init__(self):
        object.__setattr__(self, "amp0", _finite_complex(self.amp0, "amp0"))
        object.__setattr__(self, "amp1", _finite_complex(self.amp1, "amp1"))
        norm2 = abs(self.amp0) ** 2 + abs(self.amp1) ** 2
        if abs(norm2 - 1.0) > STATE_NORM_TOL:
            raise ValueError(f"state not normalized: |amp0|^2 + |amp1|^2 = {norm2!r}")

    @classmethod
    def zero(cls) -> "SingleQubitState":
        return cls(1.0, 0.0)

    @classmethod
    def one(cls) -> "SingleQubitState":
        return cls(0.0, 1.0)

    @classmethod
    def plus(cls) -> "SingleQubitState":
        return cls(_SQRT2_INV, _SQRT2_INV)

    def vector(self) -> np.ndarray:
        return np.array([self.amp0, self.amp1], dtype=complex)


@dataclass(frozen=True)
class ProductState:
    """One single-qubit factor per line; the allowed simulator input."""

    factors: tuple

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise ValueError("a product state needs at least one factor")
        for f in factors:
            if not isinstance(f, SingleQubitState):
                raise TypeError(f"expected SingleQubitState, got {type(f).__name__}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def all_zero(cls, n: int) -> "ProductState":
        return cls(tuple(SingleQubitState.zero() for _ in range(n)))

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]


class GateKind(Enum):
    """Gate flavours; values double as the text-format directive names."""

    H = "H"
    P = "P"
    CZ = "CZ"
    MATCHGATE = "G"
    GENERIC = "U"


def _check_lines(lines, two_qubit: bool):
    for ln in lines:
        if not isinstance(ln, int) or ln < 1:
            raise LineOutOfRange(f"line index must be a positive integer, got {ln!r}")
    if two_qubit and lines[0] == lines[1]:
        raise LineOutOfRange(f"two-qubit gate needs distinct lines, got {lines}")


class Gate:
    """One circuit operation; construct through the factory helpers below.

    Matchgates store the two 2x2 blocks ``a`` (even-parity span {|00>, |11>})
    and ``b`` (odd-parity span {|01>, |10>}); generic two-qubit gates store
    the full 4x4 matrix ``u``.
    """

    __slots__ = ("kind", "lines", "a", "b", "u")

    def __init__(self, kind: GateKind, lines: tuple, a=None, b=None, u=None):
        self.kind = kind
        self.lines = lines
        self.a = a
        self.b = b
        self.u = u

    @classmethod
    def h(cls, line: int) -> "Gate":
        _check_lines((line,), two_qubit=False)
        return cls(GateKind.H, (line,))

    @classmethod
    def p(cls, line: int) -> "Gate":
        _check_lines((line,), two_qubit=False)
        return cls(GateKind.P, (line,))

    @classmethod
    def cz(cls, line_a: int, line_b: int) -> "Gate":
        _check_lines((line_a, line_b), two_qubit=True)
        return cls(GateKind.CZ, (line_a, line_b))

    @classmethod
    def matchgate(cls, a, b, line_a: int, line_b: int) -> "Gate":
        return make_matchgate(a, b, line_a, line_b)

    @classmethod
    def generic(cls, u, line_a: int, line_b: int) -> "Gate":
        _check_lines((line_a, line_b), two_qubit=True)
        u = _as_unitary(u, 4, "generic two-qubit gate")
        return cls(GateKind.GENERIC, (line_a, line_b), u=u)

    def __eq__(self, other):
        if not isinstance(other, Gate):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.lines == other.lines
            and _array_eq(self.a, other.a)
            and _array_eq(self.b, other.b)
            and _array_eq(self.u, other.u)
        )

    def __hash__(self):
        return hash((self.kind, self.lines))

    def __repr__(self):
        return f"Gate({self.kind.value} {' '.join(map(str, self.lines))})"


def _array_eq(x, y) -> bool:
    if x is None or y is None:
        return x is y
    return np.array_equal(x, y)


def make_matchgate(a, b, line_a: int, line_b: int) -> Gate:
    """Build the two-qubit gate acting as ``a`` on the even-parity subspace
    and ``b`` on the odd-parity subspace; the blocks must be unitary with
    equal determinants.
    """
    _check_lines((line_a, line_b), two_qubit=True)
    a = _as_unitary(a, 2, "matchgate block A")
    b = _as_unitary(b, 2, "matchgate block B")
    det_a = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    det_b = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    if abs(det_a - det_b) > UNITARY_TOL:
        raise DeterminantMismatch(
            f"matchgate blocks need equal determinants: det A = {det_a:.6g}, det B = {det_b:.6g}"
        )
    return Gate(GateKind.MATCHGATE, (line_a, line_b), a=a, b=b)


def matchgate_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Assemble the 4x4 matrix with ``a`` on the outer block and ``b`` inside."""
    u = np.zeros((4, 4), dtype=complex)
    u[0, 0], u[0, 3], u[3, 0], u[3, 3] = a[0, 0], a[0, 1], a[1, 0], a[1, 1]
    u[1, 1], u[1, 2], u[2, 1], u[2, 2] = b[0, 0], b[0, 1], b[1, 0], b[1, 1]
    return u


def gate_unitary(gate: Gate) -> np.ndarray:
    """The gate's matrix in the computational basis (2x2 for H and P,
    4x4 otherwise, first listed line on the more significant axis)."""
    if gate.kind is GateKind.H:
        return _H_MATRIX.copy()
    if gate.kind is GateKind.P:
        return _P_MATRIX.copy()
    if gate.kind is GateKind.CZ:
        return _CZ_MATRIX.copy()
    if gate.kind is GateKind.MATCHGATE:
        return matchgate_matrix(gate.a, gate.b)
    return np.array(gate.u, dtype=complex)


class Circuit:
    """An ``n``-line circuit: an ordered gate list on 1-based lines."""

    __slots__ = ("n", "gates")

    def __init__(self, n: int, gates=()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"qubit count must be a positive integer, got {n!r}")
        gates = tuple(gates)
        for idx, g in enumerate(gates, start=1):
            if not isinstance(g, Gate):
                raise TypeError(f"gate {idx}: expected Gate, got {type(g).__name__}")
            for ln in g.lines:
                if ln > n:
                    raise LineOutOfRange(f"gate {idx}: line {ln} outside [1, {n}]")
        self.n = n
        self.gates = gates

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.n == other.n and self.gates == other.gates

    def __hash__(self):
        return hash((self.n, len(self.gates)))

    def __repr__(self):
        return f"Circuit(n={self.n}, gates={len(self.gates)})"


@dataclass(frozen=True)
class MeasurementOutcome:
    """Outcome probabilities (p0, p1) of a single-line Z measurement.

    Raw inputs may undershoot 0 / overshoot the unit sum by numerical noise
    within the tolerances below; stored values are clamped to [0, 1].
    """

    p0: float
    p1: float

    def __post_init__(self):
        p0, p1 = float(self.p0), float(self.p1)
        if p0 < -OUTCOME_NEG_TOL or p1 < -OUTCOME_NEG_TOL:
            raise ValueError(f"negative probability beyond tolerance: ({p0!r}, {p1!r})")
        if abs(p0 + p1 - 1.0) > OUTCOME_SUM_TOL:
            raise ValueError(f"probabilities must sum to 1: ({p0!r}, {p1!r})")
        object.__setattr__(self, "p0", min(max(p0, 0.0), 1.0))
        object.__setattr__(self, "p1", min(max(p1, 0.0), 1.0))

    @classmethod
    def from_difference(cls, d: float) -> "MeasurementOutcome":
        """Build from d = p0 - p1."""
        return cls((1.0 + d) / 2.0, (1.0 - d) / 2.0)
