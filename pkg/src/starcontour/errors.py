"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside an operation's domain (e.g. seed off-window)."""


class GridParseError(ValueError):
    """A grid text file is malformed. Carries 1-based line/column."""

    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}" if column else f"line {line}: {message}")
        self.line = line
        self.column = column


class CycleValidationError(ValueError):
    """A corner sequence violates a cycle/circuit clause; message names the first violation."""


class OracleSizeError(RuntimeError):
    """Exhaustive oracle refused: instance exceeds the size guard or the output cap."""


class UnionContourRefusal(RuntimeError):
    """The rasterized-union contour oracle is not applicable to this cycle pair."""


class InvariantViolation(AssertionError):
    """An internal structural invariant failed; indicates a bug, never bad input."""
