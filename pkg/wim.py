#!/usr/bin/env python3
"""Weakly increasing matrices: validation, enumeration and pulse decomposition.

A matrix carries its entry bound k, since the same entries belong to every
set with a larger bound and the bijections depend on k.
"""

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from errors import BudgetExceededError, ValidationError

MAX_ENUMERATION_CELLS = 16

Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class WIMatrix:
    """An m x n weakly increasing matrix with entries in [1, k]."""

    k: int
    rows: Rows

    def __post_init__(self):
        if not validate_wim(self.rows, self.k):
            raise ValidationError(
                f"not a weakly increasing matrix with bound k={self.k}: "
                f"{[list(r) for r in self.rows]}"
            )

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], k: int) -> "WIMatrix":
        return cls(k=k, rows=tuple(tuple(row) for row in rows))

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


class PulsePair(NamedTuple):
    """Leading-zero counts (x top, y bottom) of a 2 x n pulse matrix."""

    x: int
    y: int


@dataclass(frozen=True)
class PulseChain:
    """Ordered pulses L_1..L_{k-1}; x and y are each nondecreasing, y_i <= x_i."""

    n: int
    pulses: Tuple[PulsePair, ...]

    @property
    def k(self) -> int:
        return len(self.pulses) + 1


def validate_wim(rows: Sequence[Sequence[int]], k: int) -> bool:
    """Checks entry bounds and weak increase along rows and down columns.

    Args:
        rows: Rectangular integer array.
        k: Entry bound.

    Returns:
        True iff every entry lies in [1, k] and the matrix is weakly increasing.
    """
    if not rows or not rows[0]:
        return False
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        return False

    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if not isinstance(value, int) or not 1 <= value <= k:
                return False
            # Adjacent comparisons are enough by transitivity
            if j > 0 and row[j - 1] > value:
                return False
            if i > 0 and rows[i - 1][j] > value:
                return False
    return True


def enumerate_wim(
    m: int, n: int, k: int, max_cells: int = MAX_ENUMERATION_CELLS
) -> Iterator[WIMatrix]:
    """Yields every m x n weakly increasing matrix bounded by k.

    Matrices come out in lexicographic order of their row-major entries.
    Each cell is filled from max(left, above) upward, so only valid matrices
    are ever built.
    """
    for name, value in (("m", m), ("n", n), ("k", k)):
        if value < 1:
            raise ValidationError(f"{name} must be positive, got {value}")
    if m * n > max_cells:
        raise BudgetExceededError(
            f"enumerating {m}x{n} matrices exceeds the {max_cells}-cell guard"
        )

    cells = [[0] * n for _ in range(m)]

    def fill(index: int) -> Iterator[WIMatrix]:
        if index == m * n:
            yield WIMatrix(k=k, rows=tuple(tuple(row) for row in cells))
            return
        i, j = divmod(index, n)
        low = max(
            cells[i][j - 1] if j > 0 else 1,
            cells[i - 1][j] if i > 0 else 1,
        )
        for value in range(low, k + 1):
            cells[i][j] = value
            yield from fill(index + 1)

    yield from fill(0)


def pulse_matrix(x: int, y: int, n: int) -> Rows:
    """Binary 2 x n matrix with x leading zeros on top and y on the bottom."""
    if not 0 <= y <= x <= n:
        raise ValidationError(f"pulse requires 0 <= y <= x <= n, got ({x},{y}), n={n}")
    return (
        tuple(0 if j < x else 1 for j in range(n)),
        tuple(0 if j < y else 1 for j in range(n)),
    )


def pulse_norm(pair: PulsePair, n: int) -> int:
    """Number of ones in the pulse matrix identified by pair."""
    return 2 * n - pair.x - pair.y


def validate_chain(chain: PulseChain) -> bool:
    """True iff both sequences are nondecreasing and y_i <= x_i <= n."""
    previous = PulsePair(0, 0)
    for pair in chain.pulses:
        if not 0 <= pair.y <= pair.x <= chain.n:
            return False
        if pair.x < previous.x or pair.y < previous.y:
            return False
        previous = pair
    return True


def pulse_decompose(matrix: WIMatrix) -> PulseChain:
    """Writes a two-row matrix as the all-ones matrix plus k-1 pulses.

    Subtract the all-ones matrix, then repeatedly binarize the nonzero
    entries of the residue into a pulse and subtract it.
    """
    if matrix.m != 2:
        raise ValidationError(
            f"pulse decomposition needs exactly 2 rows, got {matrix.m}"
        )

    residue = [[value - 1 for value in row] for row in matrix.rows]
    pulses = []
    for _ in range(matrix.k - 1):
        top, bottom = (
            tuple(1 if value else 0 for value in row) for row in residue
        )
        pulses.append(PulsePair(x=top.count(0), y=bottom.count(0)))
        residue = [
            [value - bit for value, bit in zip(row, bits)]
            for row, bits in zip(residue, (top, bottom))
        ]

    return PulseChain(n=matrix.n, pulses=tuple(pulses))


def pulse_compose(chain: PulseChain) -> WIMatrix:
    """Sums the all-ones matrix and the chain's pulses.

    Entry (1, j) is 1 + #{i : x_i < j} and entry (2, j) is 1 + #{i : y_i < j}
    for 1-based column j.
    """
    if not validate_chain(chain):
        raise ValidationError(f"invalid pulse chain: {list(chain.pulses)}")

    top = tuple(
        1 + sum(1 for pair in chain.pulses if pair.x < j) for j in range(1, chain.n + 1)
    )
    bottom = tuple(
        1 + sum(1 for pair in chain.pulses if pair.y < j) for j in range(1, chain.n + 1)
    )
    return WIMatrix(k=chain.k, rows=(top, bottom))


def enumerate_chains(n: int, k: int) -> Iterator[PulseChain]:
    """Yields every valid pulse chain of length k-1 over n columns."""

    def extend(prefix: List[PulsePair]) -> Iterator[PulseChain]:
        if len(prefix) == k - 1:
            yield PulseChain(n=n, pulses=tuple(prefix))
            return
        low = prefix[-1] if prefix else PulsePair(0, 0)
        for x in range(low.x, n + 1):
            for y in range(low.y, x + 1):
                prefix.append(PulsePair(x, y))
                yield from extend(prefix)
                prefix.pop()

    yield from extend([])
