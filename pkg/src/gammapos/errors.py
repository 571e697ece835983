"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed or out-of-contract input."""


class DegreeBoundError(ValidationError):
    """A stated degree bound is smaller than the actual degree."""


class PalindromicityError(ValidationError):
    """Gamma expansion was requested for a non-palindromic polynomial."""


class NotSymmetricError(ValidationError):
    """Schur expansion left a nonzero residual, so the input was not symmetric."""


class ResourceLimitError(RuntimeError):
    """An enumeration was requested beyond the configured size bound."""


class InternalConsistencyError(RuntimeError):
    """Two routes that must agree produced different results."""


class UsageError(ValueError):
    """Unknown CLI verb or target, or missing required parameters."""
