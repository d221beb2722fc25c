"""Exception types shared across the package."""


class NotPrimitiveError(ValueError):
    """Raised when an operation that requires a primitive word gets a power.

    Carries the word's root so callers can decide to canonicalize explicitly.
    """

    def __init__(self, message, root):
        super().__init__(message)
        self.root = root


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed its configured resource guard."""
