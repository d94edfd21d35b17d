"""Domain exceptions."""


class GolayBeamError(Exception):
    """Base class for all errors raised by the package."""


class InvalidInputError(GolayBeamError, ValueError):
    """Arguments, shapes or files violate a precondition."""


class UnsupportedLengthError(InvalidInputError):
    """No cataloged Golay pair exists for the requested length and alphabet."""


class ResourceLimitError(GolayBeamError, RuntimeError):
    """A computation would exceed its configured budget."""


class VerificationError(GolayBeamError):
    """A requested verification did not pass."""
