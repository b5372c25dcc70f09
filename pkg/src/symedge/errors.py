"""Shared exception types."""


class ParseError(ValueError):
    """Malformed graph input (bad line, loop, duplicate edge, disconnected)."""


class CrossCheckError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class BudgetExceededError(RuntimeError):
    """An enumeration whose work estimate exceeds the configured budget."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(f"work estimate {estimate} exceeds budget {budget}")
        self.estimate = estimate
        self.budget = budget
