"""Rewriting procedures for Kan extensions, groups and noncommutative algebras."""

from __future__ import annotations

from .errors import BudgetExhausted, KanrwError, ParseError, ValidationError
from .presentations import CompletionBudget

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "CompletionBudget",
    "KanrwError",
    "ParseError",
    "ValidationError",
    "__version__",
]
