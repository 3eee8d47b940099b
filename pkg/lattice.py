#!/usr/bin/env python3
"""Up/right lattice paths and their bijection with weakly increasing rows.

A path in an (n, k) system makes n UP moves and k-1 RIGHT moves. Its row
vector records, for every UP move, one plus the number of RIGHT moves taken
before it. Stacking the vectors of m paths whose endpoints are shifted by
(1, -1) gives an m-row matrix, and the matrix is weakly increasing exactly
when the paths share no vertex.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from errors import BudgetExceededError, StructureViolation, ValidationError
from exactcount import GridPoint, binomial, lgv_system
from wim import WIMatrix

RIGHT = "R"
UP = "U"

DEFAULT_TUPLE_BUDGET = 10**8


@dataclass(frozen=True)
class LatticePath:
    """A start point and a string of 'R'/'U' moves."""

    start: GridPoint
    moves: str

    def __post_init__(self):
        if set(self.moves) - {RIGHT, UP}:
            raise ValidationError(f"moves may only contain R and U: {self.moves!r}")

    @cached_property
    def vertices(self) -> Tuple[GridPoint, ...]:
        x, y = self.start
        points = [GridPoint(x, y)]
        for move in self.moves:
            if move == RIGHT:
                x += 1
            else:
                y += 1
            points.append(GridPoint(x, y))
        return tuple(points)

    @cached_property
    def vertex_set(self) -> FrozenSet[GridPoint]:
        return frozenset(self.vertices)

    @property
    def end(self) -> GridPoint:
        return self.vertices[-1]


@dataclass(frozen=True)
class PathTuple:
    """m paths for an (n, k) system; path i runs from (i, -i) to (k-1+i, n-i)."""

    n: int
    k: int
    paths: Tuple[LatticePath, ...]

    @property
    def m(self) -> int:
        return len(self.paths)


def _check_moves(path: LatticePath, n: int, k: int):
    ups = path.moves.count(UP)
    rights = path.moves.count(RIGHT)
    if ups != n or rights != k - 1:
        raise ValidationError(
            f"path {path.moves!r} needs {n} UP and {k - 1} RIGHT moves, "
            f"has {ups} and {rights}"
        )


def path_to_row_vector(path: LatticePath, n: int, k: int) -> Tuple[int, ...]:
    """Row vector of a path: 1 + RIGHT moves preceding each UP move."""
    _check_moves(path, n, k)
    vector = []
    rights = 0
    for move in path.moves:
        if move == RIGHT:
            rights += 1
        else:
            vector.append(1 + rights)
    return tuple(vector)


def row_vector_to_path(
    vector: Sequence[int], start: GridPoint, k: int
) -> LatticePath:
    """Inverse of path_to_row_vector.

    Runs of v_i - v_{i-1} RIGHT moves (v_0 = 1) precede each UP move and a
    trailing run of k - v_n RIGHT moves reaches the fixed destination.
    """
    if not vector:
        raise ValidationError("row vector must be nonempty")
    previous = 1
    parts = []
    for value in vector:
        if not isinstance(value, int) or value < previous or value > k:
            raise ValidationError(
                f"row vector must be weakly increasing in [1,{k}]: {list(vector)}"
            )
        parts.append(RIGHT * (value - previous) + UP)
        previous = value
    parts.append(RIGHT * (k - previous))
    return LatticePath(start=GridPoint(*start), moves="".join(parts))


def paths_intersect(first: LatticePath, second: LatticePath) -> bool:
    """True iff the two paths visit a common vertex."""
    return not first.vertex_set.isdisjoint(second.vertex_set)


def first_intersection(
    first: LatticePath, second: LatticePath
) -> Optional[GridPoint]:
    """First vertex of `first`, in walking order, that `second` also visits."""
    for point in first.vertices:
        if point in second.vertex_set:
            return point
    return None


def crossing_witness(
    upper: LatticePath, lower: LatticePath, n: int, k: int
) -> Optional[Tuple[int, int, int]]:
    """Column where an intersecting pair breaks column monotonicity.

    If the paths first meet at (x, y), column y+1 has v1 >= 1+x > x = v2.

    Returns:
        (column, v1, v2) with 1-based column, or None if the paths are disjoint.
    """
    meet = first_intersection(upper, lower)
    if meet is None:
        return None
    column = meet.y + 1
    v1 = path_to_row_vector(upper, n, k)
    v2 = path_to_row_vector(lower, n, k)
    return (column, v1[column - 1], v2[column - 1])


def _check_layout(paths: Sequence[LatticePath], n: int, k: int):
    system = lgv_system(len(paths), n, k)
    for path, source, dest in zip(paths, system.sources, system.dests):
        if path.start != source or path.end != dest:
            raise ValidationError(
                f"path {path.moves!r} runs {tuple(path.start)} -> {tuple(path.end)}, "
                f"expected {tuple(source)} -> {tuple(dest)}"
            )


def matrix_to_path_tuple(matrix: WIMatrix) -> PathTuple:
    """Maps each row of a matrix to a path with the shifted endpoint layout.

    For two rows the result never intersects; for more rows the
    non-intersection is checked and a violation raises StructureViolation.
    """
    system = lgv_system(matrix.m, matrix.n, matrix.k)
    paths = tuple(
        row_vector_to_path(row, source, matrix.k)
        for row, source in zip(matrix.rows, system.sources)
    )
    for first, second in itertools.combinations(paths, 2):
        if paths_intersect(first, second):
            raise StructureViolation(
                f"rows of {matrix.to_lists()} map to intersecting paths "
                f"{first.moves!r} and {second.moves!r}"
            )
    return PathTuple(n=matrix.n, k=matrix.k, paths=paths)


def path_tuple_to_matrix(paths: PathTuple) -> WIMatrix:
    """Stacks the row vectors of a non-intersecting tuple into a matrix."""
    if not paths.paths:
        raise ValidationError("path tuple must contain at least one path")
    for path in paths.paths:
        _check_moves(path, paths.n, paths.k)
    _check_layout(paths.paths, paths.n, paths.k)

    for first, second in itertools.combinations(paths.paths, 2):
        if paths_intersect(first, second):
            raise ValidationError(
                f"paths {first.moves!r} and {second.moves!r} intersect at "
                f"{tuple(first_intersection(first, second))}"
            )

    rows = tuple(path_to_row_vector(p, paths.n, paths.k) for p in paths.paths)
    return WIMatrix(k=paths.k, rows=rows)


def _move_strings(ups: int, rights: int) -> Iterator[str]:
    # R sorts before U
    if ups == 0 or rights == 0:
        yield RIGHT * rights + UP * ups
        return
    for rest in _move_strings(ups, rights - 1):
        yield RIGHT + rest
    for rest in _move_strings(ups - 1, rights):
        yield UP + rest


def enumerate_paths(start: GridPoint, n: int, k: int) -> Iterator[LatticePath]:
    """All paths with n UP and k-1 RIGHT moves from start, lexicographic by moves."""
    for moves in _move_strings(n, k - 1):
        yield LatticePath(start=GridPoint(*start), moves=moves)


def enumerate_nonintersecting_tuples(
    m: int, n: int, k: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> Iterator[PathTuple]:
    """Yields every pairwise vertex-disjoint m-tuple of paths.

    Tuples come out lexicographically by their move strings. A partial tuple
    is abandoned as soon as its newest path meets an earlier one.
    """
    system = lgv_system(m, n, k)
    candidates = binomial(n + k - 1, k - 1) ** m
    if candidates > budget:
        raise BudgetExceededError(
            f"{candidates} candidate tuples for m={m}, n={n}, k={k} "
            f"exceed the budget of {budget}"
        )

    per_source = [list(enumerate_paths(source, n, k)) for source in system.sources]

    def extend(prefix: List[LatticePath]) -> Iterator[PathTuple]:
        if len(prefix) == m:
            yield PathTuple(n=n, k=k, paths=tuple(prefix))
            return
        for path in per_source[len(prefix)]:
            if all(path.vertex_set.isdisjoint(p.vertex_set) for p in prefix):
                prefix.append(path)
                yield from extend(prefix)
                prefix.pop()

    yield from extend([])
