"""Work-budget guards for the exhaustive operations."""

from __future__ import annotations

DEFAULT_WORK_BUDGET = 50_000_000


class BudgetExceededError(RuntimeError):
    """Raised when an operation refuses to start (or stop partway) on cost grounds."""

    def __init__(self, estimate: float, budget: float, what: str = "work"):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"{what} estimate {estimate:.3g} exceeds budget {budget:.3g}")


def require_budget(estimate: float, budget: float | None, what: str = "work") -> None:
    limit = DEFAULT_WORK_BUDGET if budget is None else budget
    if estimate > limit:
        raise BudgetExceededError(estimate, limit, what)
