#!/usr/bin/env python3
"""SVG drawings of Kekule structures and lattice path tuples.

Output is deterministic: fixed unit length, fixed stroke widths and
coordinates printed with two decimals.
"""

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Tuple

from benzenoid import KekuleStructure, hexagon_corners
from exactcount import lgv_system
from lattice import PathTuple

SVG_NS = "http://www.w3.org/2000/svg"
MARGIN = 40.0


@dataclass(frozen=True)
class RenderStyle:
    unit: float = 30.0  # hexagon side / lattice spacing
    stroke_width: float = 1.5
    bond_gap: float = 3.0
    path_width: float = 4.0


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _svg_root(width: float, height: float) -> ET.Element:
    return ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": _fmt(width),
            "height": _fmt(height),
            "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
        },
    )


def _to_text(root: ET.Element) -> str:
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(
        root, encoding="unicode"
    ) + "\n"


def _line(parent: ET.Element, a: Tuple[float, float], b: Tuple[float, float], **attrs):
    ET.SubElement(
        parent,
        "line",
        {
            "x1": _fmt(a[0]),
            "y1": _fmt(a[1]),
            "x2": _fmt(b[0]),
            "y2": _fmt(b[1]),
            **attrs,
        },
    )


def render_kekule(
    structure: KekuleStructure, style: RenderStyle = RenderStyle()
) -> str:
    """Draws the benzenoid with selected edges as triple lines.

    Every hexagon is a polygon, unselected edges are single lines, selected
    edges are three parallel lines and every v-bar carries its (row, index)
    label.
    """
    graph = structure.graph
    sx = style.unit * math.sqrt(3) / 2
    sy = style.unit / 2
    xs = [x for x, _ in graph.positions]
    ys = [y for _, y in graph.positions]
    min_x, min_y = min(xs), min(ys)

    def place(point: Tuple[int, int]) -> Tuple[float, float]:
        return (MARGIN + (point[0] - min_x) * sx, MARGIN + (point[1] - min_y) * sy)

    width = 2 * MARGIN + (max(xs) - min_x) * sx
    height = 2 * MARGIN + (max(ys) - min_y) * sy
    root = _svg_root(width, height)

    hexagons = ET.SubElement(root, "g", {"id": "hexagons"})
    for corners in hexagon_corners(graph):
        points = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in map(place, corners))
        ET.SubElement(
            hexagons,
            "polygon",
            {"class": "hexagon", "points": points, "fill": "#f4f4f4", "stroke": "none"},
        )

    edges = ET.SubElement(root, "g", {"id": "edges", "stroke": "#000"})
    for edge in graph.edges:
        a = place(graph.positions[edge[0]])
        b = place(graph.positions[edge[1]])
        if edge not in structure.selected:
            width = _fmt(style.stroke_width)
            _line(edges, a, b, **{"class": "edge", "stroke-width": width})
            continue
        length = math.hypot(b[0] - a[0], b[1] - a[1])
        nx_, ny_ = (a[1] - b[1]) / length, (b[0] - a[0]) / length
        for offset in (-style.bond_gap, 0.0, style.bond_gap):
            dx, dy = nx_ * offset, ny_ * offset
            _line(
                edges,
                (a[0] + dx, a[1] + dy),
                (b[0] + dx, b[1] + dy),
                **{"class": "bond", "stroke-width": _fmt(style.stroke_width)},
            )

    labels = ET.SubElement(root, "g", {"id": "vbar-labels", "font-size": "10"})
    for edge in sorted(structure.selected):
        label = graph.vbar_label.get(edge)
        if label is None:
            continue
        ax, ay = place(graph.positions[edge[0]])
        by = place(graph.positions[edge[1]])[1]
        text = ET.SubElement(
            labels,
            "text",
            {
                "class": "vbar-label",
                "x": _fmt(ax + style.bond_gap + 3),
                "y": _fmt((ay + by) / 2 + 3),
            },
        )
        text.text = f"({label[0]},{label[1]})"

    return _to_text(root)


def _endpoint(
    parent: ET.Element, point: Tuple[float, float], label: str, dy: float
):
    ET.SubElement(
        parent,
        "circle",
        {"class": "endpoint", "cx": _fmt(point[0]), "cy": _fmt(point[1]), "r": "4"},
    )
    text = ET.SubElement(
        parent,
        "text",
        {"class": "endpoint-label", "x": _fmt(point[0] + 6), "y": _fmt(point[1] + dy)},
    )
    text.text = label


def render_paths(paths: PathTuple, style: RenderStyle = RenderStyle()) -> str:
    """Draws a path tuple as thick polylines over a dotted grid.

    Sources are labelled a1..am and destinations b1..bm.
    """
    system = lgv_system(paths.m, paths.n, paths.k)
    points = list(system.sources) + list(system.dests)
    min_x = min(p.x for p in points)
    max_x = max(p.x for p in points)
    min_y = min(p.y for p in points)
    max_y = max(p.y for p in points)
    unit = style.unit

    def place(x: int, y: int) -> Tuple[float, float]:
        # Lattice y grows upward
        return (MARGIN + (x - min_x) * unit, MARGIN + (max_y - y) * unit)

    width = 2 * MARGIN + (max_x - min_x) * unit
    height = 2 * MARGIN + (max_y - min_y) * unit
    root = _svg_root(width, height)

    grid = ET.SubElement(
        root, "g", {"id": "grid", "stroke": "#999", "stroke-dasharray": "1,3"}
    )
    for x in range(min_x, max_x + 1):
        _line(grid, place(x, min_y), place(x, max_y), **{"class": "grid"})
    for y in range(min_y, max_y + 1):
        _line(grid, place(min_x, y), place(max_x, y), **{"class": "grid"})

    drawn = ET.SubElement(root, "g", {"id": "paths", "fill": "none", "stroke": "#000"})
    for path in paths.paths:
        ET.SubElement(
            drawn,
            "polyline",
            {
                "class": "path",
                "points": " ".join(
                    f"{_fmt(px)},{_fmt(py)}"
                    for px, py in (place(v.x, v.y) for v in path.vertices)
                ),
                "stroke-width": _fmt(style.path_width),
            },
        )

    ends = ET.SubElement(root, "g", {"id": "endpoints", "font-size": "12"})
    for i, (source, dest) in enumerate(zip(system.sources, system.dests), start=1):
        _endpoint(ends, place(source.x, source.y), f"a{i}", 14)
        _endpoint(ends, place(dest.x, dest.y), f"b{i}", -6)

    return _to_text(root)
