#!/usr/bin/env python3
"""
Tests for routes/ - Counting-route base class and plugins.
"""

import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from errors import BudgetExceededError
from exactcount import count_wim_closed
from harness import DEFAULT_CONFIG
from routes.base import CountRouteBase
from routes.closed_route import ClosedRoute
from routes.kekule_route import KekuleRoute
from routes.lgv_route import LGVRoute
from routes.macmahon_route import MacMahonRoute
from routes.matrices_route import MatricesRoute
from routes.paths_route import PathsRoute

BUDGETS = DEFAULT_CONFIG["budgets"]

ALL_ROUTES = [ClosedRoute, LGVRoute, MatricesRoute, PathsRoute, KekuleRoute, MacMahonRoute]


@pytest.mark.unit
class TestCountRouteBase:
    """Tests for the CountRouteBase class."""

    def test_initialization_default_verbose(self):
        """Test that CountRouteBase initializes with default verbose=True."""
        route = CountRouteBase()

        assert route.verbose is True
        assert route.name == "base"

    def test_initialization_with_verbose_false(self):
        """Test that CountRouteBase can be initialized with verbose=False."""
        assert CountRouteBase(verbose=False).verbose is False

    def test_supports_everything_by_default(self):
        """Test that the base class names no restriction."""
        route = CountRouteBase()

        assert route.unsupported_reason(3, 2, 1) is None
        assert route.supports(3, 2, 1)

    def test_count_not_implemented(self):
        """Test that calling count() raises NotImplementedError."""
        with pytest.raises(NotImplementedError) as exc_info:
            CountRouteBase().count(2, 2, 2, BUDGETS)

        assert "must be implemented" in str(exc_info.value)

    def test_subclass_can_override_count(self):
        """Test that a subclass provides its own count."""

        class ConstantRoute(CountRouteBase):
            def __init__(self, verbose=True):
                super().__init__(verbose)
                self.name = "constant"

            def count(self, m, n, k, config):
                return 42

        route = ConstantRoute(verbose=False)
        assert route.name == "constant"
        assert route.count(2, 2, 2, BUDGETS) == 42


@pytest.mark.unit
class TestRoutes:
    """Tests for the counting-route plugins."""

    @pytest.mark.parametrize("route_class", ALL_ROUTES)
    def test_two_by_two(self, route_class):
        """Test that every route counts six 2 x 2 matrices bounded by 2."""
        assert route_class(verbose=False).count(2, 2, 2, BUDGETS) == 6

    @pytest.mark.parametrize("route_class", ALL_ROUTES)
    def test_names_are_unique_and_lowercase(self, route_class):
        """Test that each route has a lowercase CLI name."""
        route = route_class(verbose=False)

        assert route.name == route.name.lower()
        assert route.name != "base"

    @pytest.mark.parametrize("route_class", ALL_ROUTES)
    def test_routes_are_documented(self, route_class):
        """Test that every route class carries a docstring."""
        assert route_class.__doc__ and route_class.__doc__.strip()

    def test_names(self):
        """Test the full set of route names."""
        names = {route_class(verbose=False).name for route_class in ALL_ROUTES}

        assert names == {"closed", "lgv", "enumerate", "paths", "kekule", "macmahon"}

    def test_closed_needs_two_rows(self):
        """Test that the closed formula declines m != 2."""
        route = ClosedRoute(verbose=False)

        assert not route.supports(3, 2, 2)
        assert "macmahon" in route.unsupported_reason(3, 2, 2)

    def test_kekule_needs_k_two(self):
        """Test that the kekule route declines k = 1 and m != 2."""
        route = KekuleRoute(verbose=False)

        assert not route.supports(2, 3, 1)
        assert not route.supports(3, 3, 2)
        assert route.supports(2, 3, 2)

    @pytest.mark.parametrize("m,n,k", [(3, 1, 2), (3, 2, 3), (4, 2, 2)])
    def test_general_routes_agree(self, m, n, k):
        """Test that lgv, macmahon, matrices and paths agree for m > 2."""
        counts = {
            route_class(verbose=False).count(m, n, k, BUDGETS)
            for route_class in (LGVRoute, MacMahonRoute, MatricesRoute, PathsRoute)
        }

        assert len(counts) == 1

    def test_paths_budget(self):
        """Test that the paths route honours budgets.tuples."""
        with pytest.raises(BudgetExceededError):
            PathsRoute(verbose=False).count(2, 6, 7, {"tuples": 100})

    def test_paths_budget_from_environment(self, monkeypatch):
        """Test that WIMLAB_BUDGET overrides budgets.tuples."""
        monkeypatch.setenv("WIMLAB_BUDGET", "10")

        with pytest.raises(BudgetExceededError):
            PathsRoute(verbose=False).count(2, 3, 3, BUDGETS)

    def test_matrices_guard(self):
        """Test that the matrices route honours budgets.matrix_cells."""
        with pytest.raises(BudgetExceededError):
            MatricesRoute(verbose=False).count(2, 4, 2, {"matrix_cells": 4})

    def test_kekule_budget(self):
        """Test that the kekule route honours budgets.kekule_edges."""
        with pytest.raises(BudgetExceededError):
            KekuleRoute(verbose=False).count(2, 3, 3, {"kekule_edges": 5})

    @pytest.mark.parametrize("n,k", [(1, 2), (3, 3), (4, 4)])
    def test_kekule_matches_closed(self, n, k):
        """Test Kekule structure counts against the closed formula."""
        assert KekuleRoute(verbose=False).count(2, n, k, BUDGETS) == count_wim_closed(n, k)
