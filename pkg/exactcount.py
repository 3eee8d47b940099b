#!/usr/bin/env python3
"""Exact combinatorial arithmetic for weakly increasing matrices.

Binomials, the closed counting formulas, Lindstrom-Gessel-Viennot path-count
matrices and fraction-free determinants. Every count is a Python int, so
nothing overflows and nothing is rounded.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Tuple

from errors import StructureViolation, ValidationError

BigCount = int
CountMatrix = Tuple[Tuple[int, ...], ...]


class GridPoint(NamedTuple):
    """A lattice point with integer coordinates."""

    x: int
    y: int


@dataclass(frozen=True)
class LGVSystem:
    """Sources and destinations for m non-intersecting paths in an (n, k) system.

    Consecutive endpoints differ by (1, -1), so path i runs from (i, -i) to
    (k - 1 + i, n - i) for i = 0..m-1.
    """

    m: int
    n: int
    k: int
    sources: Tuple[GridPoint, ...]
    dests: Tuple[GridPoint, ...]


def _require_positive(**params: int):
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise ValidationError(f"{name} must be a positive integer, got {value!r}")


def binomial(n: int, k: int) -> BigCount:
    """Returns C(n, k), or 0 when k < 0 or k > n.

    Args:
        n: Nonnegative integer.
        k: Any integer.

    Returns:
        The binomial coefficient as an exact integer.
    """
    if n < 0:
        raise ValidationError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def count_wim_closed(n: int, k: int) -> BigCount:
    """Counts 2 x n weakly increasing matrices with entries in [1, k].

    Uses C(n+k-1, k-1) * C(n+k, k-1) / k; the division is exact.
    """
    _require_positive(n=n, k=k)
    numerator = binomial(n + k - 1, k - 1) * binomial(n + k, k - 1)
    quotient, remainder = divmod(numerator, k)
    if remainder:
        raise StructureViolation(f"closed formula not integral for n={n}, k={k}")
    return quotient


def count_kekule_closed(p: int, q: int, r: int) -> BigCount:
    """Counts Kekule structures of the hexagon-shaped benzenoid O{p, q, r}.

    The product of C(p+r+i, r) / C(r+i, r) over i < q is accumulated as an
    exact rational and checked for integrality once at the end, since the
    individual factors need not be integers.
    """
    _require_positive(p=p, q=q)
    if not isinstance(r, int) or r < 0:
        raise ValidationError(f"r must be a nonnegative integer, got {r!r}")

    product = Fraction(1)
    for i in range(q):
        product *= Fraction(binomial(p + r + i, r), binomial(r + i, r))

    if product.denominator != 1:
        raise StructureViolation(f"Kekule product not integral for ({p},{q},{r})")
    return product.numerator


def count_wim_macmahon(m: int, n: int, k: int) -> BigCount:
    """Counts m x n weakly increasing matrices with entries in [1, k].

    Such matrices are plane partitions in an m x n x (k-1) box, counted by
    the product of (i+j+l-1)/(i+j+l-2) over the box cells.
    """
    _require_positive(m=m, n=n, k=k)
    product = Fraction(1)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            for l in range(1, k):
                product *= Fraction(i + j + l - 1, i + j + l - 2)

    if product.denominator != 1:
        raise StructureViolation(f"box formula not integral for ({m},{n},{k})")
    return product.numerator


def path_count(a: GridPoint, b: GridPoint) -> BigCount:
    """Number of up/right lattice paths from a to b."""
    dx = b.x - a.x
    dy = b.y - a.y
    if dx < 0 or dy < 0:
        return 0
    return binomial(dx + dy, dx)


def lgv_system(m: int, n: int, k: int) -> LGVSystem:
    """Builds the endpoint layout for m paths, each shifted by (1, -1)."""
    _require_positive(m=m, n=n, k=k)
    sources = tuple(GridPoint(i, -i) for i in range(m))
    dests = tuple(GridPoint(k - 1 + i, n - i) for i in range(m))
    return LGVSystem(m=m, n=n, k=k, sources=sources, dests=dests)


def lgv_matrix(system: LGVSystem) -> CountMatrix:
    """Path-count matrix with entry (i, j) = paths from sources[i] to dests[j]."""
    return tuple(
        tuple(path_count(source, dest) for dest in system.dests)
        for source in system.sources
    )


def lgv_matrix_closed_2row(n: int, k: int) -> CountMatrix:
    """The two-path matrix written directly in binomials."""
    _require_positive(n=n, k=k)
    top = n + k - 1
    return (
        (binomial(top, k - 1), binomial(top, k)),
        (binomial(top, k - 2), binomial(top, k - 1)),
    )


def determinant_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix.

    Every intermediate division is exact, so the result is exact for any
    integer input.
    """
    rows = [list(row) for row in matrix]
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValidationError("determinant requires a square matrix")
    if size == 0:
        return 1

    sign = 1
    previous_pivot = 1
    for col in range(size - 1):
        if rows[col][col] == 0:
            swap = next(
                (r for r in range(col + 1, size) if rows[r][col] != 0), None
            )
            if swap is None:
                return 0
            rows[col], rows[swap] = rows[swap], rows[col]
            sign = -sign

        pivot = rows[col][col]
        for r in range(col + 1, size):
            for c in range(col + 1, size):
                rows[r][c] = (
                    rows[r][c] * pivot - rows[r][col] * rows[col][c]
                ) // previous_pivot
            rows[r][col] = 0
        previous_pivot = pivot

    return sign * rows[size - 1][size - 1]


def determinant_cofactor(matrix: Sequence[Sequence[int]]) -> int:
    """Cofactor expansion along the first row; exponential, used as an oracle."""
    size = len(matrix)
    if size == 0:
        return 1
    if size == 1:
        return matrix[0][0]

    total = 0
    for col, value in enumerate(matrix[0]):
        if value == 0:
            continue
        minor = [row[:col] + row[col + 1 :] for row in (list(r) for r in matrix[1:])]
        total += (-1) ** col * value * determinant_cofactor(minor)
    return total


def count_wim_lgv(m: int, n: int, k: int) -> BigCount:
    """Counts m-row weakly increasing matrices as a determinant of path counts."""
    value = determinant_exact(lgv_matrix(lgv_system(m, n, k)))
    if value < 0:
        raise StructureViolation(
            f"negative LGV determinant {value} for m={m}, n={n}, k={k}"
        )
    return value


def hexagon_count(p: int, q: int, r: int) -> int:
    """Hexagons in the standard hexagon-shaped benzenoid with sides p, q, r."""
    return p * q + q * r + r * p - p - q - r + 1


def stacked_hexagon_count(p: int, q: int, r: int) -> int:
    """The (p+1)(q+r-1)-2 count; agrees with hexagon_count only when q == 2."""
    return (p + 1) * (q + r - 1) - 2


def kekule_parameters(n: int, k: int) -> Tuple[int, int, int]:
    """Benzenoid dimensions (n, 2, k-1) matched with 2 x n matrices bounded by k."""
    _require_positive(n=n, k=k)
    if k < 2:
        raise ValidationError("k = 1 has no benzenoid counterpart (r would be 0)")
    return (n, 2, k - 1)
