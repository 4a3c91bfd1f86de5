"""Exception types shared across the package."""


class UsageError(ValueError):
    """Input outside an operation's documented domain."""


class InvariantViolation(RuntimeError):
    """A mathematical invariant failed; this indicates a bug, not bad input."""
