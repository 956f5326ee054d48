"""Exception types shared by every module."""

from __future__ import annotations


class KanrwError(Exception):
    """Base class for all library errors."""


class ParseError(KanrwError):
    """Input text or JSON could not be read."""


class ValidationError(KanrwError):
    """Input parsed but violates a structural invariant."""


class BudgetExhausted(KanrwError):
    """A completion procedure ran out of rules or passes.

    ``partial`` carries whatever system had been built when the budget ran out.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
