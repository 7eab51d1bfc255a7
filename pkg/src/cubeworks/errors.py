"""Shared exception types."""


class CubeworksError(Exception):
    """Base class for all workbench errors."""


class GuardError(CubeworksError):
    """A resource guard (dimension, enumeration size, word bound, rewrite
    steps) was exceeded.  Guards are hard errors, never silent truncation."""


class ValidationError(CubeworksError):
    """A structural invariant failed (face identities, map compatibility,
    malformed presentation data)."""
