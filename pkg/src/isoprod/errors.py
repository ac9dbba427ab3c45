"""Exception hierarchy shared by all modules."""


class IsoprodError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(IsoprodError):
    """Input data is structurally valid but mathematically inadmissible
    (e.g. a signature whose covering curve would have genus < 2)."""


class InconsistentDataError(ValidationError):
    """Numerical data that cannot belong to any covering at all
    (e.g. a non-integral right-hand side in the genus formula)."""


class ResourceLimitError(IsoprodError):
    """A configured size cap (element count, orbit size, matrix size)
    was exceeded."""


class ConsistencyError(IsoprodError):
    """An internal invariant failed; indicates a bug upstream, not bad
    user input."""
