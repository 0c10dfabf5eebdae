class RepdigitError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgumentError(RepdigitError, ValueError):
    """An argument violates the operation's precondition."""


class CapacityError(RepdigitError):
    """Input exceeds a computational budget (trial division, census loop)."""


class VerificationError(RepdigitError):
    """A candidate triple failed independent re-verification."""
