"""Shared exception types and the budget counter."""

from __future__ import annotations

from dataclasses import dataclass, field


class OrderSizeError(Exception):
    """Base class for package errors."""


class ShapeError(OrderSizeError, ValueError):
    """Density arguments do not match a supported set shape."""


class BudgetExhausted(OrderSizeError):
    """A bounded search ran out of its evaluation budget before completing."""

    def __init__(self, message: str, used: int):
        super().__init__(message)
        self.used = used


class FactorizationError(OrderSizeError):
    """A coloring fails to factor through the claimed lower-arity coloring."""

    def __init__(self, message: str, offending: tuple[int, ...]):
        super().__init__(message)
        self.offending = offending


class SearchFailed(OrderSizeError):
    """A constructive search failed; carries a machine-readable reason."""

    def __init__(self, message: str, reason: str = "", detail: dict | None = None):
        super().__init__(message)
        self.reason = reason or message
        self.detail = detail or {}


@dataclass
class Budget:
    """Evaluation budget shared across the stages of a search.

    ``limit=None`` means unlimited. ``spend`` raises once the limit is passed,
    so callers can distinguish "proven absent" from "gave up".
    """

    limit: int | None = None
    used: int = field(default=0)

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(f"budget of {self.limit} evaluations exhausted", self.used)

    def can_afford(self, amount: int) -> bool:
        return self.limit is None or self.used + amount <= self.limit
