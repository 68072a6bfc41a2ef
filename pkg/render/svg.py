"""
SVG output for laid-out sheet diagrams.
"""
from __future__ import annotations

import logging
from html import escape
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from diagram.model import UNLABELED, SheetDiagram
from diagram.validate import TypedDiagram
from render.layout import Layout, Point, Style, layout

logger = logging.getLogger(__name__)

_STYLE = [
    "  <style>",
    "    .sheet { fill: #9ecae1; fill-opacity: 0.45; stroke: #3182bd; stroke-width: 1; }",
    "    .seam { fill: #08519c; fill-opacity: 0.7; stroke: #08306b; stroke-width: 1; }",
    "    .wire { fill: none; stroke: #222222; stroke-width: 1.5; }",
    "    .link { fill: none; stroke: #222222; stroke-width: 1.5; stroke-dasharray: 3 2; }",
    "    .node { fill: #111111; stroke: #ffffff; stroke-width: 1; }",
    "    .label { font-family: sans-serif; font-size: 12px; fill: #111111; }",
    "  </style>",
]


def _num(v: float) -> str:
    return f"{v:.2f}"


def _points(lay: Layout, points: Iterable[Point]) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in (lay.project(p) for p in points))


def _polygon(lay: Layout, cls: str, corners: Sequence[Point]) -> str:
    return f'    <polygon class="{cls}" points="{_points(lay, corners)}"/>'


def _polyline(lay: Layout, cls: str, points: Sequence[Point]) -> str:
    return f'    <polyline class="{cls}" points="{_points(lay, points)}"/>'


def _text(lay: Layout, p: Point, label: str, dx: float = 4.0, dy: float = -4.0) -> str:
    x, y = lay.project(p)
    return f'    <text class="label" x="{_num(x + dx)}" y="{_num(y + dy)}">{escape(label)}</text>'


def render_layout(
    lay: Layout,
    bottom: Optional[Tuple[Tuple[str, ...], ...]] = None,
    top: Optional[Tuple[Tuple[str, ...], ...]] = None,
) -> str:
    """
    SVG document of a layout.  Sheets are painted back to front, then seams,
    wires and nodes; ``bottom`` and ``top`` optionally label the boundary wires.
    """
    width, height = lay.canvas
    svg: List[str] = []
    svg.append('<?xml version="1.0" encoding="UTF-8"?>')
    svg.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">'
    )
    svg.extend(_STYLE)
    svg.append('  <g class="canvas">')

    for level in lay.levels:
        for box in reversed(level):
            corners = [
                (box.x, box.y0, 0.0),
                (box.x, box.y1, 0.0),
                (box.x, box.y1, box.depth),
                (box.x, box.y0, box.depth),
            ]
            svg.append(_polygon(lay, "sheet", corners))
    for band in lay.seams:
        corners = [
            (band.x0, band.y, 0.0),
            (band.x1, band.y, 0.0),
            (band.x1, band.y, band.depth),
            (band.x0, band.y, band.depth),
        ]
        svg.append(_polygon(lay, "seam", corners))
    for level in lay.levels:
        for box in level:
            for t in box.tracks:
                svg.append(_polyline(lay, "wire", [(box.x, box.y0, t), (box.x, box.y1, t)]))
    for link in lay.links:
        svg.append(_polyline(lay, "link", link.points))
    for spot in lay.nodes:
        x, y = lay.project(spot.position)
        radius = _num(lay.style.scale * 0.15)
        svg.append(f'    <circle class="node" cx="{_num(x)}" cy="{_num(y)}" r="{radius}"/>')

    if lay.style.labels:
        for spot in lay.nodes:
            if spot.label != UNLABELED:
                svg.append(_text(lay, spot.position, spot.label))
        for words, level, at_top in ((bottom, lay.levels[0], False), (top, lay.levels[-1], True)):
            if words is None:
                continue
            for box, word in zip(level, words):
                for t, label in zip(box.tracks, word):
                    if label != UNLABELED:
                        y = box.y1 if at_top else box.y0
                        svg.append(_text(lay, (box.x, y, t), label, dy=-4.0 if at_top else 14.0))

    svg.append("  </g>")
    svg.append("</svg>")
    return "\n".join(svg) + "\n"


def render_svg(d: Union[SheetDiagram, TypedDiagram], style: Optional[Style] = None) -> str:
    """
    Deterministic SVG of a diagram.  Typed diagrams get labels on both
    boundaries; untyped ones only on their input sheets.
    """
    lay = layout(d, style)
    if isinstance(d, TypedDiagram):
        return render_layout(lay, d.dom, d.cod)
    return render_layout(lay, d.input_sheets, None)


def write_svg(d: Union[SheetDiagram, TypedDiagram], path: Union[str, Path], style: Optional[Style] = None) -> None:
    Path(path).write_text(render_svg(d, style), encoding="utf-8")
    logger.info("Wrote %s", path)
