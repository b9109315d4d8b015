"""Shared exception types."""


class SizeLimitError(ValueError):
    """An input exceeds the desk-scale size caps this package enforces."""
