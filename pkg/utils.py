#!/usr/bin/env python3
"""Utility functions shared across the toolkit.

JSON documents for every domain object, canonical serialization, budget
lookup and file saving.
"""

import json
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from benzenoid import (
    KekuleStructure,
    VBarTuple,
    build_benzenoid,
    extract_vbars,
    kekule_from_edges,
    reconstruct_from_vbars,
)
from errors import ValidationError
from exactcount import GridPoint
from lattice import DEFAULT_TUPLE_BUDGET, LatticePath, PathTuple
from wim import PulseChain, WIMatrix

BUDGET_ENV_VAR = "WIMLAB_BUDGET"


def canonical_json(document: Any) -> str:
    """Serializes a document with fixed field order and no whitespace."""
    return json.dumps(document, separators=(",", ":"), ensure_ascii=True)


def pretty_json(document: Any) -> str:
    return json.dumps(document, indent=2)


def tuple_budget(configured: Optional[int] = None) -> int:
    """Candidate-tuple budget: $WIMLAB_BUDGET, else configured, else the default."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is not None and raw.strip():
        try:
            value = int(raw)
        except ValueError:
            raise ValidationError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
        if value < 1:
            raise ValidationError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
        return value
    return configured if configured is not None else DEFAULT_TUPLE_BUDGET


def _require(document: Any, key: str, kind: type):
    if not isinstance(document, dict) or key not in document:
        raise ValidationError(f"document is missing field {key!r}")
    value = document[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ValidationError(f"field {key!r} must be {kind.__name__}, got {value!r}")
    return value


def _int_list(values: Any, field: str) -> List[int]:
    if not isinstance(values, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in values
    ):
        raise ValidationError(f"field {field!r} must be a list of integers")
    return list(values)


# --- Matrices ---


def matrix_to_document(matrix: WIMatrix) -> Dict[str, Any]:
    return {"k": matrix.k, "rows": matrix.to_lists()}


def matrix_from_document(document: Any) -> WIMatrix:
    k = _require(document, "k", int)
    rows = _require(document, "rows", list)
    if not rows:
        raise ValidationError("field 'rows' must not be empty")
    return WIMatrix.from_lists([_int_list(row, "rows") for row in rows], k)


# --- Pulse chains and v-bars ---


def chain_to_document(chain: PulseChain) -> List[List[int]]:
    return [[pair.x, pair.y] for pair in chain.pulses]


def vbars_to_document(vbars: VBarTuple) -> Dict[str, Any]:
    return {"n": vbars.n, "r": vbars.r, "xs": list(vbars.xs), "ys": list(vbars.ys)}


def vbars_from_document(document: Any) -> VBarTuple:
    return VBarTuple(
        n=_require(document, "n", int),
        r=_require(document, "r", int),
        xs=tuple(_int_list(_require(document, "xs", list), "xs")),
        ys=tuple(_int_list(_require(document, "ys", list), "ys")),
    )


# --- Kekule structures ---


def kekule_to_document(structure: KekuleStructure) -> Dict[str, Any]:
    """Benzenoid dimensions, v-bars (q = 2 only) and the selected edge list."""
    graph = structure.graph
    vbars = vbars_to_document(extract_vbars(structure)) if graph.q == 2 else None
    return {
        "p": graph.p,
        "q": graph.q,
        "r": graph.r,
        "vbars": vbars,
        "selected": [list(edge) for edge in structure.sorted_edges()],
    }


def kekule_from_document(document: Any) -> KekuleStructure:
    """Parses a structure from its selected edges, or from v-bars alone.

    A q = 2 document without "selected" is rebuilt from its "vbars" entry.
    """
    graph = build_benzenoid(
        _require(document, "p", int),
        _require(document, "q", int),
        _require(document, "r", int),
    )
    if "selected" not in document and document.get("vbars") is not None:
        return reconstruct_from_vbars(graph, vbars_from_document(document["vbars"]))
    edges = _require(document, "selected", list)
    pairs = []
    for edge in edges:
        pair = _int_list(edge, "selected")
        if len(pair) != 2:
            raise ValidationError(f"selected edge must be a pair, got {edge!r}")
        pairs.append(pair)
    return kekule_from_edges(graph, pairs)


# --- Lattice paths ---


def path_to_document(path: LatticePath) -> Dict[str, Any]:
    return {"start": [path.start.x, path.start.y], "moves": path.moves}


def path_from_document(document: Any) -> LatticePath:
    start = _int_list(_require(document, "start", list), "start")
    if len(start) != 2:
        raise ValidationError(f"field 'start' must be [x, y], got {start!r}")
    return LatticePath(start=GridPoint(*start), moves=_require(document, "moves", str))


def tuple_to_document(paths: PathTuple) -> Dict[str, Any]:
    return {
        "n": paths.n,
        "k": paths.k,
        "paths": [path_to_document(path) for path in paths.paths],
    }


def tuple_from_document(document: Any) -> PathTuple:
    return PathTuple(
        n=_require(document, "n", int),
        k=_require(document, "k", int),
        paths=tuple(
            path_from_document(item) for item in _require(document, "paths", list)
        ),
    )


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"input is not valid JSON: {e}")


def save_document(filepath: Path, content: str, verbose: bool = True):
    """Saves content to a file after ensuring the directory exists.

    Args:
        filepath: The full Path object for the output file.
        content: The text content to save.
        verbose: Whether to print status messages.

    Raises:
        OSError: If the file cannot be written.
    """
    filepath.parent.mkdir(parents=True, exist_ok=True)
    with open(filepath, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)

    if verbose:
        print(f"    ✓ Saved: {filepath}", file=sys.stderr)
