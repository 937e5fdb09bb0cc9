"""
Shared exceptions for sp6flags.

Every error carries an HTTP ``status_code`` for the API and an ``exit_code``
for the command line.
"""
from typing import Optional, Tuple


class Sp6FlagsError(Exception):
    """Base exception for all sp6flags errors."""
    def __init__(
        self,
        message: str = "An error occurred",
        status_code: int = 500,
        exit_code: int = 4,
    ):
        self.message = message
        self.status_code = status_code
        self.exit_code = exit_code
        super().__init__(self.message)


class InputParseError(Sp6FlagsError):
    """Exception raised when textual or JSON input cannot be parsed."""
    def __init__(self, message: str = "Malformed input"):
        super().__init__(message, status_code=400, exit_code=2)


class PreconditionError(Sp6FlagsError):
    """Base exception for documented precondition violations."""
    def __init__(self, message: str = "Precondition violated"):
        super().__init__(message, status_code=422, exit_code=3)


class FieldError(PreconditionError):
    """Exception raised for an invalid field context."""
    pass


class ContextMismatchError(PreconditionError):
    """Exception raised when values from different contexts are combined."""
    pass


class FactorizationBoundError(PreconditionError):
    """Exception raised when an input exceeds the factorization bit bound."""
    pass


class ZeroInputError(PreconditionError):
    """Exception raised when zero is given where a unit is required."""
    pass


class DegenerateFormError(PreconditionError):
    """Exception raised for a degenerate symmetric bilinear form."""
    def __init__(self, message: str = "Degenerate form", radical_dim: int = 0):
        self.radical_dim = radical_dim
        super().__init__(f"{message} (radical dimension {radical_dim})")


class NotASimilitudeError(PreconditionError):
    """Exception raised when a matrix is not a symplectic similitude."""
    pass


class NotSemistableError(PreconditionError):
    """Exception raised when a point fails the semistability requirement."""
    pass


class HermitianViolationError(PreconditionError):
    """Exception raised when a matrix is not Gamma-hermitian."""
    def __init__(self, message: str = "Not hermitian", entry: Optional[Tuple[int, int]] = None):
        self.entry = entry
        if entry is not None:
            message = f"{message} at entry {entry}"
        super().__init__(message)


class MissingSquareRootError(PreconditionError):
    """Exception raised when a required square root is not in the field."""
    pass


class ClassificationError(PreconditionError):
    """Exception raised when a form is not of the expected composition shape."""
    pass


class BudgetExceededError(PreconditionError):
    """Exception raised when a census would exceed its point budget."""
    pass


class InternalCheckError(Sp6FlagsError):
    """Exception raised when an identity that must hold fails."""
    def __init__(self, message: str = "Internal check failed"):
        super().__init__(message, status_code=500, exit_code=4)
