#!/usr/bin/env python3
"""Base class for all counting-route plugins."""

from typing import Optional


class CountRouteBase:
    """All counting routes should inherit from this class."""

    def __init__(self, verbose: bool = True):
        """Initializes the route.

        Args:
            verbose: Flag for enabling detailed output.
        """
        self.name = "base"
        self.verbose = verbose

    def unsupported_reason(self, m: int, n: int, k: int) -> Optional[str]:
        """Why this route cannot count (m, n, k), or None if it can.

        Budget limits are not reasons; they surface as BudgetExceededError
        from count().
        """
        return None

    def supports(self, m: int, n: int, k: int) -> bool:
        return self.unsupported_reason(m, n, k) is None

    def count(self, m: int, n: int, k: int, config: dict) -> int:
        """Counts m x n weakly increasing matrices bounded by k.

        Must be implemented by subclasses.

        Args:
            m: Row count.
            n: Column count.
            k: Entry bound.
            config: The `budgets` section of the configuration.
        """
        raise NotImplementedError(
            "The 'count' method must be implemented by the route plugin."
        )
