"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An exhaustive operation was asked to go beyond its search budget.

    Raised instead of returning a possibly wrong negative answer; callers
    can retry with a larger explicit budget.
    """
