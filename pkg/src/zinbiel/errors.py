"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: usage and input problems
(FormatError, OracleScopeError, PreconditionError, ResourceLimitError and
plain mismatches) exit with code 2, while a TheoremViolationError is the
headline event -- a computation that contradicts a property every Zinbiel
algebra must satisfy -- and exits with code 1.
"""


class ZinbielError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(ZinbielError):
    """Operands carry different base fields."""


class AmbientMismatchError(ZinbielError):
    """Operands live in spaces of different ambient dimension."""


class FormatError(ZinbielError):
    """Malformed algebra/certificate file or scalar literal."""


class PreconditionError(ZinbielError):
    """An operation was called on input that violates its stated precondition."""


class NotApplicableError(ZinbielError):
    """A construction that presumes the Zinbiel identity was fed a non-Zinbiel algebra."""


class OracleScopeError(ZinbielError):
    """A brute-force oracle was asked to run outside its field/dimension limits."""


class ResourceLimitError(ZinbielError):
    """The requested computation exceeds a pinned size cap."""


class TheoremViolationError(ZinbielError):
    """A verified mathematical property failed; carries the offending payload."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload
