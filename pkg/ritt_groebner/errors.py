"""
Exception hierarchy for the ritt-groebner engine.

The library raises these; the tools layer turns them into status dictionaries
and the command line turns those into exit codes.
"""

from typing import Optional


class AlgebraError(Exception):
    """Base class for every error raised by the engine."""


class OrderMismatchError(AlgebraError):
    """Operands live under different variable orders or fields."""


class PolynomialDivisionByZeroError(AlgebraError, ZeroDivisionError):
    """A zero divisor or a zero saturating polynomial was supplied."""


class DegenerateResultantError(AlgebraError):
    """Both resultant arguments have degree 0 in the eliminated variable."""


class EmptyInputError(AlgebraError, ValueError):
    pass


class ZeroRankError(AlgebraError, ValueError):
    pass


class NotTriangularError(AlgebraError, ValueError):
    pass


class PreconditionViolationError(AlgebraError):
    """An operation was called outside the situation it is valid for."""


class ZeroIdealError(AlgebraError, ValueError):
    pass


class StructuralViolationError(AlgebraError):
    """A characteristic property failed; this points at an engine bug."""

    def __init__(self, message: str, witness: Optional[str] = None):
        super().__init__(message if witness is None else f"{message} (witness: {witness})")
        self.witness = witness


class OrderAssumptionError(AlgebraError):
    """Some parameter outranks a leading variable of the W-characteristic set."""


class OrderUnstableError(AlgebraError):
    """Reordering did not reach an order satisfying the assumption within the fuel."""


class InternalConsistencyError(AlgebraError):
    pass


class NodeBudgetExceededError(AlgebraError):
    pass


class SystemParseError(AlgebraError, ValueError):
    """Syntax or semantic error in a system file, with its position."""

    def __init__(self, message: str, line: int = 0, column: int = 0, token: Optional[str] = None):
        location = f"line {line}, column {column}" if line else "input"
        detail = f" at token {token!r}" if token is not None else ""
        super().__init__(f"{location}: {message}{detail}")
        self.line = line
        self.column = column
        self.token = token


class NotAscendingError(AlgebraError, ValueError):
    pass
