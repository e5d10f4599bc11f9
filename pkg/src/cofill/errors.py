"""Exception types shared across the package."""


class CofillError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(CofillError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidParametersError(CofillError):
    """Generator parameters that cannot produce a graph."""


class RetryBudgetError(CofillError):
    """Rejection sampling exceeded its retry budget."""


class CotreeParseError(CofillError):
    """Malformed or non-canonical cotree text."""


class UnknownVertexError(CofillError, KeyError):
    """A vertex id that is not present in the structure."""


class ContractViolation(CofillError):
    """A call that breaks a documented precondition."""


class FillGuardExceeded(CofillError):
    """Fill set too large for the exhaustive minimality check."""
