"""Shared exceptions and the search-budget counter."""

from __future__ import annotations

DEFAULT_BUDGET = 10**8

# Decisions warn (or refuse, for the box-theorem driver) above this many
# raw tables, counted before any pruning.
SIZE_GUARD = 10**10


class BudgetExceededError(RuntimeError):
    """A backtracking search ran out of its node budget before finishing.

    Distinct from normal completion: callers that return tri-state verdicts
    convert this into an UNKNOWN outcome instead of letting it escape.
    """

    def __init__(self, limit: int, context: str = "") -> None:
        self.limit = limit
        self.context = context
        suffix = f" while {context}" if context else ""
        super().__init__(f"search budget of {limit} extensions exhausted{suffix}")


class SizeGuardError(RuntimeError):
    """The requested decision would enumerate a hopelessly large space."""


class FormatError(ValueError):
    """Malformed image or map text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Budget:
    """Counts partial-assignment extensions across one decision.

    A single Budget may span several searches (e.g. a subdivision sweep);
    the count accumulates and the limit applies to the total.
    """

    __slots__ = ("limit", "used", "context")

    def __init__(self, limit: int | None = None, context: str = "") -> None:
        self.limit = DEFAULT_BUDGET if limit is None else int(limit)
        if self.limit <= 0:
            raise ValueError("budget must be positive")
        self.used = 0
        self.context = context

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceededError(self.limit, self.context)


def as_budget(budget: int | Budget | None, context: str = "") -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget, context)
