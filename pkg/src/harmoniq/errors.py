"""Exception types shared across the package."""


class HarmoniqError(Exception):
    """Base class for all package-specific errors."""


class SizeError(HarmoniqError, ValueError):
    """Qubit count or frequency list outside the supported range."""


class GridMismatchError(HarmoniqError, ValueError):
    """Two waveforms do not share the same sample grid."""


class NonOrthogonalBasisError(HarmoniqError, ValueError):
    """Operation requires a unique (non-redundant) frequency spectrum."""


class GateError(HarmoniqError, ValueError):
    """Invalid gate: non-unitary matrix, bad qubit indices, or nesting too deep."""


class CircuitError(HarmoniqError, ValueError):
    """Circuit references a removed qubit or is otherwise inconsistent."""


class NullStateError(HarmoniqError, ValueError):
    """Measurement attempted on a zero-norm state."""


class ProtocolError(HarmoniqError, ValueError):
    """Operation applied out of order, e.g. removing an uncollapsed qubit."""


class CircuitSyntaxError(HarmoniqError, ValueError):
    """Parse failure in the circuit text format, with 1-based position."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")
