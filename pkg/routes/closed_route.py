#!/usr/bin/env python3
"""Closed-formula route for two-row matrices."""

from exactcount import count_wim_closed

from .base import CountRouteBase


class ClosedRoute(CountRouteBase):
    """C(n+k-1, k-1) C(n+k, k-1) / k."""

    def __init__(self, verbose: bool = True):
        super().__init__(verbose)
        self.name = "closed"

    def unsupported_reason(self, m, n, k):
        if m != 2:
            return "the closed formula covers two-row matrices only (use macmahon)"
        return None

    def count(self, m, n, k, config):
        return count_wim_closed(n, k)
