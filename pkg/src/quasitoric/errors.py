"""Exception hierarchy shared by every module."""


class QuasitoricError(Exception):
    """Base class for all library errors."""


class InvalidParameter(QuasitoricError, ValueError):
    pass


class PreconditionError(QuasitoricError, ValueError):
    pass


class NotNormalizable(PreconditionError):
    """The leading square block of a characteristic matrix is not unimodular."""

    def __init__(self, det):
        super().__init__(f"leading block has determinant {det}; reorder facets so the first n share a vertex")
        self.det = det


class ResourceLimit(QuasitoricError, RuntimeError):
    pass


class InvalidRing(QuasitoricError, ValueError):
    pass


class InvariantViolation(QuasitoricError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
