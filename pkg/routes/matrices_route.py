#!/usr/bin/env python3
"""Brute-force route: enumerate the matrices themselves."""

from wim import MAX_ENUMERATION_CELLS, enumerate_wim

from .base import CountRouteBase


class MatricesRoute(CountRouteBase):
    """Counts by walking enumerate_wim; guarded by budgets.matrix_cells."""

    def __init__(self, verbose: bool = True):
        super().__init__(verbose)
        self.name = "enumerate"

    def count(self, m, n, k, config):
        max_cells = config.get("matrix_cells", MAX_ENUMERATION_CELLS)
        return sum(1 for _ in enumerate_wim(m, n, k, max_cells=max_cells))
