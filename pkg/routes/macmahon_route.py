#!/usr/bin/env python3
"""Box-formula route for any number of rows."""

from exactcount import count_wim_macmahon

from .base import CountRouteBase


class MacMahonRoute(CountRouteBase):
    """Plane partitions in an m x n x (k-1) box."""

    def __init__(self, verbose: bool = True):
        super().__init__(verbose)
        self.name = "macmahon"

    def count(self, m, n, k, config):
        return count_wim_macmahon(m, n, k)
