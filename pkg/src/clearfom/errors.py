"""Exception types shared across the toolkit."""

from __future__ import annotations


class ClearError(Exception):
    """Base class for all toolkit errors."""


class DomainError(ClearError, ValueError):
    """An input value lies outside the domain of an operation."""


class InsufficientDataError(DomainError):
    """A fit was requested on fewer distinct samples than it needs."""


class ConfigurationError(ClearError):
    """A configuration is internally inconsistent (bad floors, missing table entries)."""


class InfeasibleLinkError(ClearError):
    """A link cannot close its power budget; carries the failing span diagnosis."""

    def __init__(self, message: str, failing_span=None):
        super().__init__(message)
        self.failing_span = failing_span
