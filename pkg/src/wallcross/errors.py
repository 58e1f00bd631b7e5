class ValidationError(ValueError):
    """Input data violates a structural or cohomological invariant."""


class ParityError(ValidationError):
    """A dimension formula produced a non-integer (non-characteristic class)."""


class CrossCheckError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
