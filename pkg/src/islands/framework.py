"""The shared contract both simulators instantiate.

A simulatable family is a set of tracked operators whose product-state
expectations cost polynomial time, together with a gate class that maps the
tracked set into itself under conjugation.  Simulation is then always the
same two steps: pull the measured Z observable back through the circuit
inside the tracked representation, then evaluate one expectation against the
input state.  A new family plugs in by subclassing `Island`; the dense
statevector oracle deliberately sits outside this contract.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from .circuits import Circuit, MeasurementOutcome, ProductState
from .errors import LengthMismatch, LineOutOfRange


class Island(ABC):
    """One classically simulatable circuit family."""

    name: str = "?"

    @abstractmethod
    def backpropagate(self, circuit: Circuit, line: int):
        """Conjugate the Z observable on `line` back through every gate,
        staying inside the family's tracked operator representation.
        Raises the family's circuit-rejection error on the first gate that
        leaves the family.
        """

    @abstractmethod
    def evaluate(self, observable, state: ProductState) -> float:
        """Expectation value of a tracked observable in a product state."""

    def simulate(self, circuit: Circuit, state: ProductState, line: int) -> MeasurementOutcome:
        """Measurement marginal of a single-line Z measurement."""
        if len(state) != circuit.n:
            raise LengthMismatch(
                f"state has {len(state)} factors for a {circuit.n}-line circuit"
            )
        if not 1 <= line <= circuit.n:
            raise LineOutOfRange(f"measured line {line} outside [1, {circuit.n}]")
        observable = self.backpropagate(circuit, line)
        return MeasurementOutcome.from_difference(self.evaluate(observable, state))
