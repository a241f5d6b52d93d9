"""Exception types shared across the package."""


class CoqlinError(Exception):
    """Base class for all errors raised by this package."""


class BackendMismatchError(CoqlinError):
    """Operands carry different scalar backends."""


class ZeroDivisorOrZeroError(CoqlinError):
    """Inversion of a value with vanishing norm form.

    ``reason`` distinguishes the genuine zero value from a nonzero
    zero divisor.
    """

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason  # "zero" | "zero-divisor"


class DimensionError(CoqlinError):
    """Matrix shapes incompatible with the requested operation."""


class IndexRangeError(CoqlinError):
    """A 1-based row/column index falls outside the matrix."""


class SizeCapError(CoqlinError):
    """Matrix order exceeds the configured enumeration cap."""


class NotHermitianError(CoqlinError):
    """The operation requires a Hermitian matrix.

    ``operand`` names which argument failed (e.g. "A" or "B").
    """

    def __init__(self, message, operand="A"):
        super().__init__(message)
        self.operand = operand


class SingularError(CoqlinError):
    """The Hermitian determinant vanishes, so no inverse exists.

    ``operand`` names which argument is singular.
    """

    def __init__(self, message, operand="A"):
        super().__init__(message)
        self.operand = operand


class ParseError(CoqlinError):
    """Malformed coquaternion or matrix text.

    ``position`` is the offset into the parsed string and ``token`` the
    offending fragment.
    """

    def __init__(self, message, position=None, token=None):
        super().__init__(message)
        self.position = position
        self.token = token
