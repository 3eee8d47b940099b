#!/usr/bin/env python3
"""Brute-force route: enumerate Kekule structures of O{n, 2, k-1}."""

from benzenoid import DEFAULT_MAX_EDGES, build_benzenoid, enumerate_kekule
from exactcount import kekule_parameters

from .base import CountRouteBase


class KekuleRoute(CountRouteBase):
    """Counts perfect matchings; guarded by budgets.kekule_edges."""

    def __init__(self, verbose: bool = True):
        super().__init__(verbose)
        self.name = "kekule"

    def unsupported_reason(self, m, n, k):
        if m != 2:
            return "the kekule route needs m = 2"
        if k < 2:
            return "the kekule route needs k >= 2 (O{n,2,0} is degenerate)"
        return None

    def count(self, m, n, k, config):
        graph = build_benzenoid(*kekule_parameters(n, k))
        max_edges = config.get("kekule_edges", DEFAULT_MAX_EDGES)
        return sum(1 for _ in enumerate_kekule(graph, max_edges=max_edges))
