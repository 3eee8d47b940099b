#!/usr/bin/env python3
"""Determinant route: Lindstrom-Gessel-Viennot over the shifted endpoints."""

from exactcount import count_wim_lgv

from .base import CountRouteBase


class LGVRoute(CountRouteBase):
    """Counts m-tuples of non-intersecting paths as one exact determinant."""

    def __init__(self, verbose: bool = True):
        super().__init__(verbose)
        self.name = "lgv"

    def count(self, m, n, k, config):
        return count_wim_lgv(m, n, k)
