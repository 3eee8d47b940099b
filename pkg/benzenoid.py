#!/usr/bin/env python3
"""Hexagon-shaped benzenoids O{p, q, r} and their Kekule structures.

Hexagons are pointy-topped and laid out in horizontal rows, so every hexagon
has a vertical edge on its left and right side. Coordinates are integers:
x counts half hexagon widths, a hexagon centred at (cx, cy) has corners
(cx, cy-2), (cx+1, cy-1), (cx+1, cy+1), (cx, cy+2), (cx-1, cy+1),
(cx-1, cy-1), and row t is centred at cy = 3t.

With the vertical edges of a matching fixed, the remaining slant edges form
zigzag seams (one above the top row, one between each pair of adjacent rows,
one below the bottom row). Every vertex sits on exactly one seam, which is
why the selected vertical edges (v-bars) determine the whole structure.
"""

import functools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from errors import BudgetExceededError, StructureViolation, ValidationError
from exactcount import kekule_parameters
from wim import PulseChain, PulsePair, WIMatrix, pulse_compose, pulse_decompose

VERTICAL = "vertical"
SLANT = "slant"

DEFAULT_MAX_EDGES = 200

Edge = Tuple[int, int]
Position = Tuple[int, int]


@dataclass(frozen=True)
class VBarTuple:
    """v-bar positions of a structure on O{n, 2, r}, as xs and ys."""

    n: int
    r: int
    xs: Tuple[int, ...]
    ys: Tuple[int, ...]


class BenzenoidGraph:
    """The benzenoid O{p, q, r} as a frozen networkx graph.

    Vertex ids are 0..V-1 in (y, x) order of their coordinates; edges are
    (u, v) pairs with u < v, sorted. Vertical edges are labelled
    (row, index) where index counts vertical edges strictly to the left in
    the same row.
    """

    def __init__(self, p: int, q: int, r: int):
        for name, value in (("p", p), ("q", q), ("r", r)):
            if not isinstance(value, int) or value < 1:
                raise ValidationError(
                    f"{name} must be a positive integer, got {value!r}"
                )

        self.p, self.q, self.r = p, q, r
        row_count = q + r - 1
        self.hex_rows = tuple(
            p + min(t, q - 1, r - 1, q + r - 2 - t) for t in range(row_count)
        )
        self.row_lefts = tuple(
            -min(t, q - 1) + max(0, t - (q - 1)) for t in range(row_count)
        )
        self.hexagons = tuple(
            (left + 1 + 2 * j, 3 * t)
            for t, (left, width) in enumerate(zip(self.row_lefts, self.hex_rows))
            for j in range(width)
        )

        points = set()
        raw_edges = {}
        for cx, cy in self.hexagons:
            corners = _hexagon_corners(cx, cy)
            points.update(corners)
            for a, b in zip(corners, corners[1:] + corners[:1]):
                kind = VERTICAL if a[0] == b[0] else SLANT
                raw_edges[frozenset((a, b))] = kind

        self.positions: Tuple[Position, ...] = tuple(
            sorted(points, key=lambda point: (point[1], point[0]))
        )
        self._ids = {point: i for i, point in enumerate(self.positions)}

        graph = nx.Graph()
        for vertex, (x, y) in enumerate(self.positions):
            graph.add_node(vertex, pos=(x, y))

        self.vbar_index: Dict[Tuple[int, int], Edge] = {}
        for pair, kind in raw_edges.items():
            u, v = sorted(self._ids[point] for point in pair)
            label = None
            if kind == VERTICAL:
                x, top = self.positions[u]
                row = (top + 1) // 3
                label = (row, (x - self.row_lefts[row]) // 2)
                self.vbar_index[label] = (u, v)
            graph.add_edge(u, v, kind=kind, label=label)

        self.edges: Tuple[Edge, ...] = tuple(
            sorted(_normalize(edge) for edge in graph.edges())
        )
        self.vbar_label: Dict[Edge, Tuple[int, int]] = {
            edge: label for label, edge in self.vbar_index.items()
        }
        self.graph = nx.freeze(graph)

    @property
    def params(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def vertex_count(self) -> int:
        return len(self.positions)

    def edge_kind(self, edge: Edge) -> str:
        return self.graph.edges[edge]["kind"]

    def row_vbars(self, row: int) -> List[Edge]:
        """Vertical edges of a hexagon row, left to right."""
        return [
            self.vbar_index[(row, j)] for j in range(self.hex_rows[row] + 1)
        ]

    def vertex_id(self, position: Position) -> int:
        return self._ids[position]

    def __eq__(self, other):
        return isinstance(other, BenzenoidGraph) and self.params == other.params

    def __hash__(self):
        return hash(("BenzenoidGraph",) + self.params)

    def __repr__(self):
        return f"BenzenoidGraph(p={self.p}, q={self.q}, r={self.r})"


@dataclass(frozen=True)
class KekuleStructure:
    """A perfect matching of a benzenoid graph."""

    graph: BenzenoidGraph
    selected: FrozenSet[Edge]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.selected)

    def vbars(self) -> List[Tuple[int, int]]:
        """(row, index) labels of the selected vertical edges, sorted."""
        return sorted(
            self.graph.vbar_label[edge]
            for edge in self.selected
            if edge in self.graph.vbar_label
        )


def _hexagon_corners(cx: int, cy: int) -> List[Position]:
    return [
        (cx, cy - 2),
        (cx + 1, cy - 1),
        (cx + 1, cy + 1),
        (cx, cy + 2),
        (cx - 1, cy + 1),
        (cx - 1, cy - 1),
    ]


def _normalize(edge: Iterable[int]) -> Edge:
    u, v = edge
    return (min(u, v), max(u, v))


@functools.lru_cache(maxsize=64)
def build_benzenoid(p: int, q: int, r: int) -> BenzenoidGraph:
    """Builds O{p, q, r}; row t holds p + min(t, q-1, r-1, q+r-2-t) hexagons.

    Graphs are frozen, so repeated builds share one instance.
    """
    return BenzenoidGraph(p, q, r)


def hexagon_corners(graph: BenzenoidGraph) -> List[List[Position]]:
    """Corner coordinates of every hexagon, in row order."""
    return [_hexagon_corners(cx, cy) for cx, cy in graph.hexagons]


def is_kekule(graph: BenzenoidGraph, edges: Iterable[Iterable[int]]) -> bool:
    """True iff edges is a perfect matching of graph."""
    chosen = {_normalize(edge) for edge in edges}
    if not all(graph.graph.has_edge(u, v) for u, v in chosen):
        return False
    return nx.is_perfect_matching(graph.graph, chosen)


def kekule_from_edges(
    graph: BenzenoidGraph, edges: Iterable[Iterable[int]]
) -> KekuleStructure:
    """Wraps an edge list as a KekuleStructure after checking it."""
    chosen = frozenset(_normalize(edge) for edge in edges)
    if not is_kekule(graph, chosen):
        raise ValidationError(f"edge set is not a perfect matching of {graph!r}")
    return KekuleStructure(graph=graph, selected=chosen)


def _higher_neighbours(graph: BenzenoidGraph) -> List[List[Tuple[int, Edge]]]:
    # Neighbours with a larger id, in edge-id order
    table = [[] for _ in range(graph.vertex_count)]
    for u, v in graph.edges:
        table[u].append((v, (u, v)))
    return table


def _matchings(
    graph: BenzenoidGraph,
    preselected: FrozenSet[Edge],
    banned: FrozenSet[Edge],
    max_edges: int,
) -> Iterator[FrozenSet[Edge]]:
    if len(graph.edges) > max_edges:
        raise BudgetExceededError(
            f"{graph!r} has {len(graph.edges)} edges, over the budget of {max_edges}"
        )

    matched = [False] * graph.vertex_count
    for u, v in preselected:
        if matched[u] or matched[v]:
            return
        matched[u] = matched[v] = True

    table = _higher_neighbours(graph)
    chosen = list(preselected)

    def backtrack(start: int) -> Iterator[FrozenSet[Edge]]:
        vertex = start
        while vertex < len(matched) and matched[vertex]:
            vertex += 1
        if vertex == len(matched):
            yield frozenset(chosen)
            return

        matched[vertex] = True
        for neighbour, edge in table[vertex]:
            if matched[neighbour] or edge in banned:
                continue
            matched[neighbour] = True
            chosen.append(edge)
            yield from backtrack(vertex + 1)
            chosen.pop()
            matched[neighbour] = False
        matched[vertex] = False

    yield from backtrack(0)


def enumerate_kekule(
    graph: BenzenoidGraph, max_edges: int = DEFAULT_MAX_EDGES
) -> Iterator[KekuleStructure]:
    """Yields every perfect matching of graph exactly once.

    Backtracks on the lowest-id unmatched vertex, trying its incident edges
    in edge-id order, so the stream is deterministic.
    """
    for selected in _matchings(graph, frozenset(), frozenset(), max_edges):
        yield KekuleStructure(graph=graph, selected=selected)


def constrained_completion(
    graph: BenzenoidGraph,
    forced_selected: Iterable[Edge],
    forced_unselected: Iterable[Edge],
    max_edges: int = DEFAULT_MAX_EDGES,
) -> List[KekuleStructure]:
    """Perfect matchings containing forced_selected and avoiding forced_unselected."""
    selected = frozenset(_normalize(edge) for edge in forced_selected)
    unselected = frozenset(_normalize(edge) for edge in forced_unselected)
    if selected & unselected:
        raise ValidationError("forced selected and unselected edges overlap")
    for u, v in selected | unselected:
        if not graph.graph.has_edge(u, v):
            raise ValidationError(f"edge {(u, v)} is not in {graph!r}")

    return [
        KekuleStructure(graph=graph, selected=matching)
        for matching in _matchings(graph, selected, unselected, max_edges)
    ]


def validate_vbar_tuple(vbars: VBarTuple) -> bool:
    """Checks the v-bar inequalities.

    0 <= x_1 <= ... <= x_r <= n, 0 <= y_1 <= ... <= y_r <= n, y_i <= x_i and
    y_i <= x_{i+1}.
    """
    xs, ys, n, r = vbars.xs, vbars.ys, vbars.n, vbars.r
    if r < 1 or n < 0 or len(xs) != r or len(ys) != r:
        return False
    for seq in (xs, ys):
        if seq[0] < 0 or seq[-1] > n:
            return False
        if any(a > b for a, b in zip(seq, seq[1:])):
            return False
    if any(y > x for x, y in zip(xs, ys)):
        return False
    return all(ys[i] <= xs[i + 1] for i in range(r - 1))


def vbar_positions(vbars: VBarTuple) -> List[Tuple[int, int]]:
    """(0,x_1), (1,y_1), (1,x_2+1), ..., (r-1,y_{r-1}), (r-1,x_r+1), (r,y_r)."""
    positions = [(0, vbars.xs[0])]
    for i in range(1, vbars.r):
        positions.append((i, vbars.ys[i - 1]))
        positions.append((i, vbars.xs[i] + 1))
    positions.append((vbars.r, vbars.ys[-1]))
    return positions


def _require_two_row_shape(graph: BenzenoidGraph):
    if graph.q != 2:
        raise ValidationError(f"v-bar analysis needs q = 2, got {graph!r}")


def _rows_of_vbars(structure: KekuleStructure) -> List[List[int]]:
    graph = structure.graph
    rows = [[] for _ in graph.hex_rows]
    for row, j in structure.vbars():
        rows[row].append(j)
    return rows


def extract_vbars(structure: KekuleStructure) -> VBarTuple:
    """Reads (xs, ys) off the selected vertical edges of a structure on O{n, 2, r}.

    Row 0 gives x_1, each middle row i gives y_i (left) and x_{i+1}+1
    (right), and row r gives y_r.
    """
    graph = structure.graph
    _require_two_row_shape(graph)
    rows = _rows_of_vbars(structure)
    r = graph.r

    expected = [1] + [2] * (r - 1) + [1]
    if [len(row) for row in rows] != expected:
        raise StructureViolation(
            f"v-bar rows {rows} do not follow the 1, 2, ..., 2, 1 pattern"
        )

    xs = [rows[0][0]]
    ys = []
    for i in range(1, r):
        left, right = rows[i]
        ys.append(left)
        xs.append(right - 1)
    ys.append(rows[r][0])

    vbars = VBarTuple(n=graph.p, r=r, xs=tuple(xs), ys=tuple(ys))
    if not validate_vbar_tuple(vbars):
        raise StructureViolation(f"v-bars {vbars} break the stacking inequalities")
    return vbars


@functools.lru_cache(maxsize=64)
def _seams(graph: BenzenoidGraph) -> Tuple[Tuple[int, ...], ...]:
    slant = nx.Graph()
    slant.add_nodes_from(graph.graph.nodes)
    slant.add_edges_from(e for e in graph.edges if graph.edge_kind(e) == SLANT)

    seams = []
    for component in nx.connected_components(slant):
        ends = [v for v in component if slant.degree(v) <= 1]
        start = min(ends, key=lambda v: graph.positions[v][0])
        walk = [start]
        previous = None
        while True:
            following = [w for w in slant.neighbors(walk[-1]) if w != previous]
            if not following:
                break
            previous = walk[-1]
            walk.append(following[0])
        seams.append(tuple(walk))

    seams.sort(key=lambda walk: graph.positions[walk[0]][::-1])
    return tuple(seams)


def seam_paths(graph: BenzenoidGraph) -> List[List[int]]:
    """Slant-edge zigzags, top to bottom, each ordered left to right."""
    return [list(seam) for seam in _seams(graph)]


def reconstruct_from_vbars(graph: BenzenoidGraph, vbars: VBarTuple) -> KekuleStructure:
    """Fills in the unique Kekule structure whose v-bars are given by vbars.

    Every other vertical edge is unselected. Along each seam, the vertices
    not covered by a v-bar split into gaps, and each gap must be matched
    alternately: the top willow, the middle-row willows and caterpillars,
    the bottom upside-down willow and the leftover zigzag are exactly these
    gaps. A gap with an odd number of vertices would leave a vertex
    unmatched and raises StructureViolation.
    """
    _require_two_row_shape(graph)
    if (vbars.n, vbars.r) != (graph.p, graph.r):
        raise ValidationError(
            f"v-bars for O{{{vbars.n},2,{vbars.r}}} do not fit {graph!r}"
        )
    if not validate_vbar_tuple(vbars):
        raise ValidationError(f"invalid v-bar tuple: {vbars}")

    selected = {graph.vbar_index[position] for position in vbar_positions(vbars)}
    covered = {vertex for edge in selected for vertex in edge}

    for seam in _seams(graph):
        gap: List[int] = []
        for vertex in seam + (None,):
            if vertex is not None and vertex not in covered:
                gap.append(vertex)
                continue
            if len(gap) % 2:
                raise StructureViolation(
                    f"seam gap {gap} has odd length; v-bars {vbars} admit no fill"
                )
            selected.update(_normalize(pair) for pair in zip(gap[::2], gap[1::2]))
            gap = []

    if not is_kekule(graph, selected):
        raise StructureViolation(f"fill for {vbars} is not a perfect matching")
    return KekuleStructure(graph=graph, selected=frozenset(selected))


def audit_vbar_rows(structure: KekuleStructure) -> Dict[str, bool]:
    """Checks the row-by-row v-bar placement rules on one structure of O{n, 2, r}."""
    _require_two_row_shape(structure.graph)
    rows = _rows_of_vbars(structure)
    r = structure.graph.r

    def row_one() -> bool:
        if r == 1:
            return True
        return (
            len(rows[0]) == 1
            and len(rows[1]) == 2
            and rows[1][0] <= rows[0][0] < rows[1][1]
        )

    def one_to_right() -> bool:
        for i in range(2, r):
            if not rows[i - 1]:
                return False
            rightmost = rows[i - 1][-1]
            if sum(1 for j in rows[i] if j >= rightmost) != 1:
                return False
        return True

    def none_to_left() -> bool:
        for i in range(2, r + 1):
            if not rows[i - 1]:
                return False
            if any(j < rows[i - 1][0] for j in rows[i]):
                return False
        return True

    def middle_rows() -> bool:
        for i in range(2, r):
            if len(rows[i - 1]) != 2 or len(rows[i]) != 2:
                return False
            (a1, a2), (b1, b2) = rows[i - 1], rows[i]
            if not a1 <= b1 < a2 <= b2:
                return False
        return True

    def bottom_row() -> bool:
        if r == 1:
            return True
        if len(rows[r]) != 1 or len(rows[r - 1]) != 2:
            return False
        return rows[r - 1][0] <= rows[r][0] < rows[r - 1][1]

    return {
        "top_row": len(rows[0]) == 1,
        "row_one": row_one(),
        "one_to_right": one_to_right(),
        "none_to_left": none_to_left(),
        "middle_rows": middle_rows(),
        "bottom_row": bottom_row(),
        "vbar_count": sum(len(row) for row in rows) == 2 * r,
    }


def matrix_to_kekule(matrix: WIMatrix) -> KekuleStructure:
    """Maps a 2 x n matrix bounded by k >= 2 to a structure on O{n, 2, k-1}.

    The pulse (x_i, y_i) of the decomposition becomes the v-bar pair
    (x_i, y_i).
    """
    if matrix.m != 2:
        raise ValidationError(f"benzenoid mapping needs 2 rows, got {matrix.m}")
    p, q, r = kekule_parameters(matrix.n, matrix.k)
    vbars = vbar_tuple_from_chain(pulse_decompose(matrix))
    return reconstruct_from_vbars(build_benzenoid(p, q, r), vbars)


def kekule_to_matrix(structure: KekuleStructure) -> WIMatrix:
    """Inverse of matrix_to_kekule: v-bars -> pulse chain -> matrix with k = r+1."""
    vbars = extract_vbars(structure)
    chain = PulseChain(
        n=vbars.n,
        pulses=tuple(PulsePair(x, y) for x, y in zip(vbars.xs, vbars.ys)),
    )
    return pulse_compose(chain)


def vbar_tuple_from_chain(chain: PulseChain) -> Optional[VBarTuple]:
    """The v-bar tuple matching a pulse chain, or None for an empty chain."""
    if not chain.pulses:
        return None
    return VBarTuple(
        n=chain.n,
        r=len(chain.pulses),
        xs=tuple(pair.x for pair in chain.pulses),
        ys=tuple(pair.y for pair in chain.pulses),
    )
