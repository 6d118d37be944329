"""Exception types raised across the package.

Every error derives from :class:`MimError`, itself a ``ValueError``, so callers
can catch bad input broadly or a single condition precisely.  Errors split into
input validation (bad arguments) and degenerate-math conditions (valid input
for which the requested quantity does not exist); the CLI maps the two groups
to different exit codes.
"""


class MimError(ValueError):
    """Base class for all package errors."""


class ValidationError(MimError):
    """Input violates a precondition."""


class DegenerateMathError(MimError):
    """Inputs are valid but the requested quantity is undefined or infinite."""


class NonPositiveEntry(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class TooFewEvents(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class ModelMismatch(ValidationError):
    pass


class DegenerateInterval(ValidationError):
    pass


class DegenerateDistribution(DegenerateMathError):
    pass


class NoCrossing(DegenerateMathError):
    pass
