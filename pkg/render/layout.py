"""
Geometric layout of sheet diagrams.

World coordinates have three axes: ``x`` runs left to right across the
sheets of one height, ``y`` runs bottom to top through the slices and
``depth`` runs along a sheet, where its wires sit side by side.  Each
sheet is a strip spanning depth and height; an oblique projection with a
fixed skew turns depth into a diagonal on the page.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from diagram.model import Seam, SheetDiagram, Swap, pass_through_count, sheet_sizes
from diagram.validate import TypedDiagram

Point = Tuple[float, float, float]


@dataclass(frozen=True)
class Style:
    skew: Tuple[float, float] = (0.45, 0.25)
    scale: float = 40.0
    level_height: float = 2.0
    track_spacing: float = 1.0
    padding: float = 0.5
    sheet_gap: float = 0.6
    margin: float = 1.0
    labels: bool = True


@dataclass(frozen=True)
class SheetBox:
    level: int
    index: int
    x: float
    y0: float
    y1: float
    depth: float
    tracks: Tuple[float, ...]

    def interval(self, style: Style) -> Tuple[float, float]:
        """Horizontal extent of the sheet once depth is projected."""
        return self.x, self.x + self.depth * style.skew[0]


@dataclass(frozen=True)
class SeamBand:
    slice_index: int
    x0: float
    x1: float
    y: float
    depth: float
    slots: Tuple[float, ...]


@dataclass(frozen=True)
class NodeSpot:
    slice_index: int
    node_index: int
    position: Point
    label: str


@dataclass(frozen=True)
class Link:
    points: Tuple[Point, ...]


@dataclass(frozen=True)
class Layout:
    style: Style
    levels: Tuple[Tuple[SheetBox, ...], ...]
    seams: Tuple[SeamBand, ...]
    nodes: Tuple[NodeSpot, ...]
    links: Tuple[Link, ...]
    extent: Tuple[float, float]
    max_depth: float

    def project(self, p: Point) -> Tuple[float, float]:
        """Page coordinates of a world point."""
        x, y, d = p
        dx, dy = self.style.skew
        s, m = self.style.scale, self.style.margin
        top = self.extent[1] + self.max_depth * dy
        return s * (m + x + d * dx), s * (m + top - y - d * dy)

    @property
    def canvas(self) -> Tuple[float, float]:
        s, m = self.style.scale, self.style.margin
        return s * (2 * m + self.extent[0]), s * (2 * m + self.extent[1] + self.max_depth * self.style.skew[1])


def _depth(count: int, style: Style) -> float:
    return 2 * style.padding + max(count - 1, 0) * style.track_spacing


def _tracks(count: int, style: Style) -> Tuple[float, ...]:
    return tuple(style.padding + k * style.track_spacing for k in range(count))


def _pass_slot(seam: Seam, p: int) -> int:
    return p + sum(1 for node in seam.nodes if node.offset <= p)


def _routing(seam: Seam, sizes: Sequence[int], passes: int, side: str) -> List[List[int]]:
    """
    Seam slot of every wire on each input (or output) sheet: a sheet lists
    its pass-through groups and node runs in seam order.
    """
    count = seam.n_in if side == "in" else seam.n_out
    routes: List[List[int]] = []
    for s in range(count):
        route: List[int] = []
        p = 0
        for k, node in enumerate(seam.nodes):
            while p < node.offset:
                route.append(_pass_slot(seam, p))
                p += 1
            wires = node.in_wires[s] if side == "in" else node.out_wires[s]
            route.extend([node.offset + k] * wires)
        while p < passes:
            route.append(_pass_slot(seam, p))
            p += 1
        routes.append(route)
    return routes


def _place_level(level: int, sizes: Sequence[int], style: Style) -> Tuple[SheetBox, ...]:
    y0 = level * style.level_height
    y1 = y0 + 0.6 * style.level_height
    boxes = []
    x = 0.0
    for index, count in enumerate(sizes):
        depth = _depth(count, style)
        boxes.append(SheetBox(level, index, x, y0, y1, depth, _tracks(count, style)))
        x += depth * style.skew[0] + style.sheet_gap
    return tuple(boxes)


def _top(box: SheetBox, k: int) -> Point:
    return box.x, box.y1, box.tracks[k]


def _bottom(box: SheetBox, k: int) -> Point:
    return box.x, box.y0, box.tracks[k]


def _band(
    index: int, seam: Seam, lower: Sequence[SheetBox], upper: Sequence[SheetBox], slots: int, style: Style
) -> SeamBand:
    involved = list(lower[seam.offset : seam.offset + seam.n_in]) + list(upper[seam.offset : seam.offset + seam.n_out])
    if involved:
        x0 = min(b.x for b in involved)
        x1 = max(b.interval(style)[1] for b in involved)
    elif seam.offset < len(lower):
        x0 = x1 = lower[seam.offset].x
    else:
        x0 = x1 = lower[-1].interval(style)[1] + style.sheet_gap if lower else 0.0
    y = index * style.level_height + 0.8 * style.level_height
    return SeamBand(index, x0, x1, y, _depth(slots, style), _tracks(slots, style))


def layout(d: Union[SheetDiagram, TypedDiagram], style: Optional[Style] = None) -> Layout:
    """
    Place every sheet, seam, node and wire of a diagram.

    Sheets of one height are allocated greedily left to right, each as wide
    as its wire count needs.  Wires sit on evenly spaced depth tracks; the
    slots of a seam hold its nodes and pass-through wires in order.
    Equal inputs give equal layouts.
    """
    style = style or Style()
    diagram = d.diagram if isinstance(d, TypedDiagram) else d
    heights = sheet_sizes(diagram)
    levels = tuple(_place_level(k, sizes, style) for k, sizes in enumerate(heights))

    seams: List[SeamBand] = []
    nodes: List[NodeSpot] = []
    links: List[Link] = []
    for index, piece in enumerate(diagram.slices):
        lower, upper = levels[index], levels[index + 1]
        if isinstance(piece, Swap):
            o = piece.offset
            moved = {o: o + 1, o + 1: o}
            for s, box in enumerate(lower):
                target = upper[moved.get(s, s)]
                links.extend(Link((_top(box, k), _bottom(target, k))) for k in range(len(box.tracks)))
            continue

        sizes = heights[index]
        passes = pass_through_count(piece, sizes, index)
        band = _band(index, piece, lower, upper, passes + len(piece.nodes), style)
        seams.append(band)
        centre = (band.x0 + band.x1) / 2 - band.depth * style.skew[0] / 2

        def anchor(slot: int) -> Point:
            return centre, band.y, band.slots[slot]

        for k, node in enumerate(piece.nodes):
            nodes.append(NodeSpot(index, k, anchor(node.offset + k), node.label))
        for s, route in enumerate(_routing(piece, sizes, passes, "in")):
            box = lower[piece.offset + s]
            links.extend(Link((_top(box, w), anchor(slot))) for w, slot in enumerate(route))
        for t, route in enumerate(_routing(piece, sizes, passes, "out")):
            box = upper[piece.offset + t]
            links.extend(Link((anchor(slot), _bottom(box, w))) for w, slot in enumerate(route))
        for s, box in enumerate(lower):
            if piece.offset <= s < piece.offset + piece.n_in:
                continue
            shift = 0 if s < piece.offset else piece.n_out - piece.n_in
            target = upper[s + shift]
            links.extend(Link((_top(box, k), _bottom(target, k))) for k in range(len(box.tracks)))

    boxes = [b for level in levels for b in level]
    right = max([b.interval(style)[1] for b in boxes] + [b.x1 + b.depth * style.skew[0] for b in seams] + [0.0])
    top = max([b.y1 for b in boxes] + [0.0])
    max_depth = max([b.depth for b in boxes] + [b.depth for b in seams] + [0.0])
    return Layout(
        style=style,
        levels=levels,
        seams=tuple(seams),
        nodes=tuple(nodes),
        links=tuple(links),
        extent=(right, top),
        max_depth=max_depth,
    )
