"""Exception hierarchy shared by every module."""


class PolytauError(Exception):
    """Base class for all library errors."""


class StructuralError(PolytauError, ValueError):
    """Malformed algebraic input: odd or non-antisymmetric Pfaffian input,
    division by the zero polynomial, inexact division, bad shapes."""


class ParameterError(PolytauError, ValueError):
    """Invalid user parameters (partition data, constant shapes, families)."""


class ConstraintViolation(ParameterError):
    """Constants violate constraints that cannot be solved automatically.

    ``residuals`` maps the offending (i, j) pair to the nonzero residual.
    """

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = dict(residuals or {})


class ConsistencyError(PolytauError, RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
