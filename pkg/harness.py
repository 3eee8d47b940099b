#!/usr/bin/env python3
"""Verify harness - cross-checks every counting route and bijection.

Discovers the counting routes, evaluates them over a parameter grid, runs the
bijection round trips and writes a summary report.
"""

import copy
import functools
import importlib
import inspect
import json
import pkgutil
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Callable, Dict, List, Optional

import yaml

# Local imports
import routes
import utils
from benzenoid import (
    audit_vbar_rows,
    build_benzenoid,
    enumerate_kekule,
    kekule_to_matrix,
    matrix_to_kekule,
)
from errors import BudgetExceededError, WimlabError
from exactcount import count_kekule_closed
from lattice import matrix_to_path_tuple, path_tuple_to_matrix
from routes.base import CountRouteBase
from wim import enumerate_chains, enumerate_wim, pulse_compose, pulse_decompose

DEFAULT_CONFIG_FILE = "wimlab_config.yaml"

DEFAULT_CONFIG = {
    "budgets": {"tuples": 10**8, "kekule_edges": 200, "matrix_cells": 16},
    "verify": {
        "max_n": 4,
        "max_k": 4,
        "max_m": 2,
        "include_matchings": False,
        "max_pqr": 3,
        "workers": 1,
    },
    "routes": {},
    "render": {"unit": 30, "stroke_width": 1.5, "bond_gap": 3, "path_width": 4},
    "output": {"report_dir": "wimlab_reports"},
}


def merge_config(base: dict, override: dict) -> dict:
    """Recursively overlays override on a copy of base."""
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_config(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_file: Optional[str], required: bool = True) -> dict:
    """Loads the YAML config file on top of the built-in defaults.

    Args:
        config_file: Path to the YAML file, or None for defaults only.
        required: If False, a missing file silently falls back to defaults.

    Returns:
        The merged configuration dictionary.
    """
    if config_file is None or (not required and not Path(config_file).exists()):
        return copy.deepcopy(DEFAULT_CONFIG)
    try:
        with open(config_file, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            raise ValueError("top level must be a mapping")
    except Exception as e:
        print(f"Error loading config file '{config_file}': {e}", file=sys.stderr)
        sys.exit(1)
    return merge_config(DEFAULT_CONFIG, loaded)


def discover_routes(verbose: bool = True) -> Dict[str, CountRouteBase]:
    """Dynamically discovers and loads the counting routes from the 'routes' package."""
    loaded = {}
    if verbose:
        print("🔎 Discovering counting routes...", file=sys.stderr)

    for _, name, _ in pkgutil.iter_modules(routes.__path__):
        if name == "base":
            continue

        try:
            module = importlib.import_module(f"routes.{name}")
            for _, obj in inspect.getmembers(module, inspect.isclass):
                if issubclass(obj, CountRouteBase) and obj is not CountRouteBase:
                    route = obj(verbose=verbose)
                    loaded[route.name] = route
                    if verbose:
                        print(f"  - Found route: {obj.__name__}", file=sys.stderr)
        except Exception as e:
            print(f"  ✗ Error loading route '{name}': {e}", file=sys.stderr)

    return dict(sorted(loaded.items()))


@dataclass
class CellResult:
    """One verification cell: named counts that must all coincide."""

    kind: str
    params: Dict[str, int]
    counts: Dict[str, int] = field(default_factory=dict)
    skipped: Dict[str, str] = field(default_factory=dict)
    elapsed: Dict[str, float] = field(default_factory=dict)
    errors: Dict[str, str] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return not self.errors and len(set(self.counts.values())) <= 1

    @property
    def label(self) -> str:
        inner = ", ".join(f"{key}={value}" for key, value in self.params.items())
        return f"{self.kind}({inner})"

    def to_document(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            # Decimal strings keep big counts exact in any JSON reader
            "counts": {name: str(value) for name, value in self.counts.items()},
            "skipped": self.skipped,
            "errors": self.errors,
            "elapsed": {name: round(t, 6) for name, t in self.elapsed.items()},
            "agree": self.agree,
        }


@dataclass
class VerifyReport:
    settings: dict
    cells: List[CellResult]
    started: datetime = field(default_factory=datetime.now)

    @property
    def failures(self) -> List[CellResult]:
        return [cell for cell in self.cells if not cell.agree]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_document(self) -> dict:
        return {
            "started": self.started.isoformat(timespec="seconds"),
            "settings": self.settings,
            "ok": self.ok,
            "cells": [cell.to_document() for cell in self.cells],
        }

    def to_markdown(self) -> str:
        kinds: Dict[str, List[CellResult]] = {}
        for cell in self.cells:
            kinds.setdefault(cell.kind, []).append(cell)

        summary_lines = [
            f"- **{kind}:** {sum(c.agree for c in cells)}/{len(cells)} cells agree"
            for kind, cells in kinds.items()
        ]
        failure_lines = [
            f"- `{cell.label}`: counts {cell.counts}"
            + (f", errors {cell.errors}" if cell.errors else "")
            for cell in self.failures
        ] or ["None."]
        skipped = sorted(
            set(
                f"- {name}: {reason}"
                for c in self.cells
                for name, reason in c.skipped.items()
            )
        )
        settings = ", ".join(f"{key}={value}" for key, value in self.settings.items())

        return f"""# WIM Lab Verification Report
**Date:** {self.started.strftime('%Y-%m-%d %H:%M')}
**Settings:** {settings}
**Result:** {"all cells agree" if self.ok else f"{len(self.failures)} disagreement(s)"}

## Summary
{chr(10).join(summary_lines)}

## Disagreements
{chr(10).join(failure_lines)}

## Skipped Routes
{chr(10).join(skipped) if skipped else "None."}
---
Generated by wimlab verify
"""


class VerifyHarness:
    """Runs every enabled counting route and bijection over a grid."""

    def __init__(self, config: Optional[dict] = None, verbose: bool = True):
        self.verbose = verbose
        self.config = merge_config(DEFAULT_CONFIG, config or {})
        self.budgets = self.config["budgets"]
        self.max_edges = self.budgets["kekule_edges"]
        self.routes = discover_routes(verbose)

    def _log(self, message: str):
        if self.verbose:
            print(message, file=sys.stderr)

    def enabled_routes(self, include_matchings: bool) -> List[CountRouteBase]:
        """Routes enabled in the config; kekule also needs include_matchings."""
        route_configs = self.config.get("routes", {}) or {}
        enabled = []
        for name, route in self.routes.items():
            if not route_configs.get(name, {}).get("enabled", True):
                self._log(f"  - Skipping disabled route: {name}")
                continue
            if name == "kekule" and not include_matchings:
                continue
            enabled.append(route)
        return enabled

    def count_cell(
        self, m: int, n: int, k: int, active: List[CountRouteBase]
    ) -> CellResult:
        cell = CellResult(kind="count", params={"m": m, "n": n, "k": k})
        for route in active:
            reason = route.unsupported_reason(m, n, k)
            if reason is not None:
                cell.skipped[route.name] = reason
                continue
            begin = time.perf_counter()
            try:
                cell.counts[route.name] = route.count(m, n, k, self.budgets)
            except BudgetExceededError as e:
                cell.skipped[route.name] = f"budget: {e}"
            except WimlabError as e:
                cell.errors[route.name] = str(e)
            cell.elapsed[route.name] = time.perf_counter() - begin
        return cell

    def kekule_cell(self, p: int, q: int, r: int) -> CellResult:
        """Closed product formula against brute-force matchings of O{p, q, r}."""
        cell = CellResult(kind="kekule", params={"p": p, "q": q, "r": r})
        cell.counts["closed"] = count_kekule_closed(p, q, r)
        begin = time.perf_counter()
        try:
            graph = build_benzenoid(p, q, r)
            cell.counts["enumerate"] = sum(
                1 for _ in enumerate_kekule(graph, max_edges=self.max_edges)
            )
        except BudgetExceededError as e:
            cell.skipped["enumerate"] = f"budget: {e}"
        cell.elapsed["enumerate"] = time.perf_counter() - begin
        return cell

    def _matrices(self, n: int, k: int):
        return list(enumerate_wim(2, n, k, max_cells=self.budgets["matrix_cells"]))

    def pulse_cell(self, n: int, k: int) -> CellResult:
        cell = CellResult(kind="pulse", params={"n": n, "k": k})
        try:
            matrices = self._matrices(n, k)
        except BudgetExceededError as e:
            cell.skipped["pulse"] = f"budget: {e}"
            return cell
        chains = set()
        round_trips = 0
        for matrix in matrices:
            chain = pulse_decompose(matrix)
            chains.add(chain)
            round_trips += pulse_compose(chain) == matrix
        cell.counts = {
            "matrices": len(matrices),
            "round_trips": round_trips,
            "distinct_chains": len(chains),
            "all_chains": sum(1 for _ in enumerate_chains(n, k)),
        }
        return cell

    def paths_cell(self, n: int, k: int) -> CellResult:
        cell = CellResult(kind="paths", params={"n": n, "k": k})
        try:
            matrices = self._matrices(n, k)
        except BudgetExceededError as e:
            cell.skipped["paths"] = f"budget: {e}"
            return cell
        images = set()
        round_trips = 0
        try:
            for matrix in matrices:
                paths = matrix_to_path_tuple(matrix)
                images.add(paths)
                round_trips += path_tuple_to_matrix(paths) == matrix
        except WimlabError as e:
            cell.errors["paths"] = str(e)
        cell.counts = {
            "matrices": len(matrices),
            "round_trips": round_trips,
            "distinct_tuples": len(images),
        }
        return cell

    def kekule_map_cell(self, n: int, k: int) -> CellResult:
        """matrix -> Kekule -> matrix is the identity and hits every structure."""
        cell = CellResult(kind="kekule_map", params={"n": n, "k": k})
        try:
            matrices = self._matrices(n, k)
            graph = build_benzenoid(n, 2, k - 1)
            structures = set(enumerate_kekule(graph, max_edges=self.max_edges))
        except BudgetExceededError as e:
            cell.skipped["kekule_map"] = f"budget: {e}"
            return cell
        images = set()
        round_trips = 0
        try:
            for matrix in matrices:
                structure = matrix_to_kekule(matrix)
                images.add(structure)
                round_trips += kekule_to_matrix(structure) == matrix
        except WimlabError as e:
            cell.errors["kekule_map"] = str(e)
        cell.counts = {
            "matrices": len(matrices),
            "round_trips": round_trips,
            "structures": len(structures),
            "structures_hit": len(images & structures),
        }
        return cell

    def rules_cell(self, n: int, r: int) -> CellResult:
        """Every structure of O{n, 2, r} satisfies every v-bar placement rule."""
        cell = CellResult(kind="vbar_rules", params={"n": n, "r": r})
        graph = build_benzenoid(n, 2, r)
        total = 0
        passing = 0
        for structure in enumerate_kekule(graph, max_edges=self.max_edges):
            total += 1
            failed = [rule for rule, ok in audit_vbar_rows(structure).items() if not ok]
            if failed:
                message = f"{sorted(structure.vbars())} breaks {failed}"
                cell.errors.setdefault("rules", message)
            else:
                passing += 1
        cell.counts = {"structures": total, "passing": passing}
        return cell

    def plan(
        self,
        max_n: int,
        max_k: int,
        max_m: int = 2,
        include_matchings: bool = False,
        max_pqr: Optional[int] = None,
        include_rules: bool = False,
    ) -> List[Callable[[], CellResult]]:
        """Lists the independent cells of a run as zero-argument callables."""
        active = self.enabled_routes(include_matchings)
        tasks: List[Callable[[], CellResult]] = []

        # m = 1 is a single path; the grid starts at two rows
        for m in range(2, max(2, max_m) + 1):
            for n in range(1, max_n + 1):
                for k in range(1, max_k + 1):
                    tasks.append(functools.partial(self.count_cell, m, n, k, active))

        for n in range(1, max_n + 1):
            for k in range(1, max_k + 1):
                tasks.append(functools.partial(self.pulse_cell, n, k))
                tasks.append(functools.partial(self.paths_cell, n, k))
                if include_matchings and k >= 2:
                    tasks.append(functools.partial(self.kekule_map_cell, n, k))

        if include_matchings and max_pqr:
            for p in range(1, max_pqr + 1):
                for q in range(1, max_pqr + 1):
                    for r in range(1, max_pqr + 1):
                        tasks.append(functools.partial(self.kekule_cell, p, q, r))

        if include_rules:
            limit = min(max_n, 3)
            for n in range(1, limit + 1):
                for r in range(1, limit + 1):
                    tasks.append(functools.partial(self.rules_cell, n, r))

        return tasks

    def run(
        self,
        max_n: int,
        max_k: int,
        max_m: int = 2,
        include_matchings: bool = False,
        max_pqr: Optional[int] = None,
        include_rules: bool = False,
        workers: int = 1,
    ) -> VerifyReport:
        """Evaluates every planned cell and assembles the report.

        Args:
            max_n: Largest column count in the grid.
            max_k: Largest entry bound in the grid.
            max_m: Largest row count for the count grid.
            include_matchings: Adds the kekule route, the Kekule round trips
                and, with max_pqr, the closed-formula grid.
            max_pqr: Bound on p, q, r for the closed-formula grid.
            include_rules: Audits v-bar placement on every small structure.
            workers: Cells evaluated concurrently; 1 runs them in order.

        Returns:
            The VerifyReport; cells keep their planned order.
        """
        settings = {
            "max_n": max_n,
            "max_k": max_k,
            "max_m": max_m,
            "include_matchings": include_matchings,
            "max_pqr": max_pqr,
            "include_rules": include_rules,
            "workers": workers,
        }
        self._log("🧮 WIM Lab verify")
        self._log("=" * 60)

        tasks = self.plan(
            max_n, max_k, max_m, include_matchings, max_pqr, include_rules
        )
        self._log(f"Evaluating {len(tasks)} cells with {workers} worker(s)...")

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                cells = list(executor.map(lambda task: task(), tasks))
        else:
            cells = [task() for task in tasks]

        for cell in cells:
            if cell.agree:
                continue
            self._log(f"  ✗ {cell.label}: {cell.counts} {cell.errors or ''}")

        report = VerifyReport(settings=settings, cells=cells)
        if report.ok:
            self._log(f"✅ All {len(cells)} cells agree")
        else:
            self._log(f"❌ {len(report.failures)} of {len(cells)} cells disagree")
        return report

    def save_report(
        self, report: VerifyReport, report_dir: Optional[Path] = None
    ) -> Path:
        """Writes REPORT.md and report.json; returns the directory used."""
        target = Path(report_dir or self.config["output"]["report_dir"])
        utils.save_document(target / "REPORT.md", report.to_markdown(), self.verbose)
        utils.save_document(
            target / "report.json",
            json.dumps(report.to_document(), indent=2) + "\n",
            self.verbose,
        )
        return target
