"""Node-expansion budget for bounded searches."""

import logging
from typing import Optional

from src.utils.config import DEFAULT_BUDGET
from src.utils.errors import BudgetExceeded

logger = logging.getLogger(__name__)


class Budget:
    """Counts search nodes and raises once the limit is passed.

    A budget object may be shared by nested searches so the whole
    operation is bounded by a single limit.
    """

    def __init__(self, limit: Optional[int] = None, where: str = "") -> None:
        limit = DEFAULT_BUDGET if limit is None else limit
        if limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.spent = 0
        self.where = where

    def tick(self, n: int = 1) -> None:
        self.spent += n
        if self.spent > self.limit:
            logger.debug(f"Budget exhausted in {self.where or 'search'} after {self.spent} nodes")
            raise BudgetExceeded(self.limit, self.spent, self.where)

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.spent)

    def to_dict(self) -> dict:
        return {"limit": self.limit, "spent": self.spent, "where": self.where}


def as_budget(budget, where: str = "") -> Budget:
    """Accept an int, a Budget or None and return a Budget."""
    if isinstance(budget, Budget):
        return budget
    return Budget(budget, where=where)
