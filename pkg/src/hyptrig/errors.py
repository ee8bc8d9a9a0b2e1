"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside the documented validity domain."""


class UnknownEntryError(KeyError):
    """An entry id that is not present in the catalog."""
