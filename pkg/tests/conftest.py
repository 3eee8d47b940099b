#!/usr/bin/env python3
"""
Shared pytest configuration and fixtures.
"""

import sys
from pathlib import Path

import pytest

# Add parent directory to Python path for all tests
sys.path.insert(0, str(Path(__file__).parent.parent))

from wim import PulsePair, WIMatrix  # noqa: E402

W_ROWS = [[1, 1, 2, 3, 6, 6], [1, 1, 2, 4, 6, 7]]
W_PULSES = [(2, 2), (3, 3), (4, 3), (4, 4), (4, 4), (6, 5)]
W_UPPER_MOVES = "UURURURRRUUR"
W_LOWER_MOVES = "UURURRURRURU"


@pytest.fixture(scope="session")
def project_root():
    """Returns the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def w_matrix():
    """The 2 x 6 example matrix with bound k = 7."""
    return WIMatrix.from_lists(W_ROWS, k=7)


@pytest.fixture
def w_pulses():
    """Pulse chain of the example matrix, largest pulse first."""
    return [PulsePair(x, y) for x, y in W_PULSES]


@pytest.fixture
def w_vbars():
    """v-bar tuple of the example structure on O{6, 2, 6}."""
    from benzenoid import VBarTuple

    return VBarTuple(n=6, r=6, xs=(2, 3, 4, 4, 4, 6), ys=(2, 3, 3, 4, 4, 5))


@pytest.fixture
def w_path_pair():
    """The non-intersecting path pair of the example matrix."""
    from exactcount import GridPoint
    from lattice import LatticePath, PathTuple

    return PathTuple(
        n=6,
        k=7,
        paths=(
            LatticePath(start=GridPoint(0, 0), moves=W_UPPER_MOVES),
            LatticePath(start=GridPoint(1, -1), moves=W_LOWER_MOVES),
        ),
    )


@pytest.fixture
def write_json(tmp_path):
    """Writes a document to a temp JSON file and returns its path."""
    import json

    def _write(document, name="input.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return _write
