#!/usr/bin/env python3
"""Brute-force route: enumerate non-intersecting path tuples."""

import utils
from lattice import enumerate_nonintersecting_tuples

from .base import CountRouteBase


class PathsRoute(CountRouteBase):
    """Counts vertex-disjoint tuples; guarded by the candidate-tuple budget."""

    def __init__(self, verbose: bool = True):
        super().__init__(verbose)
        self.name = "paths"

    def count(self, m, n, k, config):
        budget = utils.tuple_budget(config.get("tuples"))
        return sum(1 for _ in enumerate_nonintersecting_tuples(m, n, k, budget=budget))
