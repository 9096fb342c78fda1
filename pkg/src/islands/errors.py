"""Exception types shared across the package."""


class IslandsError(Exception):
    """Base class for every error raised by this package."""


class LengthMismatch(IslandsError):
    """Operands act on different numbers of lines."""


class NotUnitary(IslandsError):
    """A gate matrix failed the unitarity check."""


class DeterminantMismatch(IslandsError):
    """The two blocks of a matchgate have different determinants."""


class LineOutOfRange(IslandsError):
    """A 1-based line index lies outside the circuit."""


class IndexOutOfRange(IslandsError):
    """A Jordan-Wigner operator index lies outside [1, 2n]."""


class TooManyQubits(IslandsError):
    """The dense simulator cap was exceeded."""


class DimensionMismatch(IslandsError):
    """Matrix and operator-basis dimensions disagree."""


class NotCliffordGate(IslandsError):
    """A single gate outside {H, P, CZ} was handed to the table-based update."""


class SpanClosureViolation(IslandsError):
    """A conjugated operator left the tracked linear span (internal check)."""


class InternalCheckError(IslandsError):
    """A numerical self-consistency assertion failed."""


class GateRejected(IslandsError):
    """A simulator refused a circuit; carries the first offending gate.

    ``gate_index`` is 1-based, ``reason`` matches the classifier diagnostic
    for the same gate.
    """

    def __init__(self, gate_index: int, reason: str):
        super().__init__(f"gate {gate_index}: {reason}")
        self.gate_index = gate_index
        self.reason = reason


class NotCliffordCircuit(GateRejected):
    """The circuit contains a gate outside the Clifford island."""


class NotNNMatchgateCircuit(GateRejected):
    """The circuit contains a gate outside the nearest-neighbour matchgate island."""


class CircuitSyntaxError(IslandsError):
    """Malformed circuit text; reports 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class CircuitSemanticError(IslandsError):
    """Well-formed circuit text with invalid content (range, matrix, norm)."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
