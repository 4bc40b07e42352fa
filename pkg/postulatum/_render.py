import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Tuple

import yattag

from postulatum._common_utils import write_text
from postulatum._geom.exact import Point2
from postulatum._kinds import sorted_kinds
from postulatum._square.model import CORNERS, Chord
from postulatum._square.zones import ZoneMap

LOG = logging.getLogger(__name__)

# fixed so that renderings of the same map diff cleanly
KIND_COLORS = {
    "Euclidean": "#2e7d32",
    "FiniteMany": "#f9a825",
    "CountablyInfinite": "#6a1b9a",
    "Hyperbolic": "#1565c0",
    "Elliptic": "#c62828",
}
ON_LINE_COLOR = "#000000"
LINE_COLOR = "#000000"
WITNESS_COLOR = "#757575"

SIZE = 400
MARGIN = 40
LEGEND_WIDTH = 200
BOUNDARY_WIDTH = 6


class ZoneRenderer:
    """
    Renders a ZoneMap of the square model as SVG: one polygon per cell, the line l,
    the boundary intervals as thick strokes, corner dots and a legend.
    """

    def __init__(
        self,
        zone_map: ZoneMap,
        witness_chords: Sequence[Chord] = (),
        size: int = SIZE,
        margin: int = MARGIN,
    ):
        self._zone_map = zone_map
        self._witness_chords = tuple(witness_chords)
        self._size = size
        self._margin = margin

    def _pixel(self, point: Point2) -> Tuple[str, str]:
        x = self._margin + float(Fraction(point.x)) * self._size
        y = self._margin + (1 - float(Fraction(point.y))) * self._size
        return f"{x:.3f}", f"{y:.3f}"

    def _points_attr(self, polygon) -> str:
        return " ".join(",".join(self._pixel(vertex)) for vertex in polygon)

    def _segment(self, doc, start: Point2, end: Point2, *attrs, **kwattrs):
        x1, y1 = self._pixel(start)
        x2, y2 = self._pixel(end)
        doc.stag("line", *attrs, x1=x1, y1=y1, x2=x2, y2=y2, **kwattrs)

    def render(self) -> str:
        doc, tag, text = yattag.Doc().tagtext()
        width = self._size + 2 * self._margin + LEGEND_WIDTH
        height = self._size + 2 * self._margin
        with tag(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            width=str(width),
            height=str(height),
            viewBox=f"0 0 {width} {height}",
        ):
            with tag("title"):
                text(f"parallel zones for line {self._zone_map.line.to_text()}")
            with tag("g", id="cells"):
                for cell in self._zone_map.cells:
                    doc.stag(
                        "polygon",
                        ("data-kind", cell.kind.label),
                        ("stroke-width", "0.5"),
                        points=self._points_attr(cell.polygon),
                        fill=KIND_COLORS[cell.kind.name],
                        stroke="#ffffff",
                    )
            with tag("g", id="boundary"):
                for side, intervals in self._zone_map.boundary_intervals.items():
                    for interval in intervals:
                        if interval.start == interval.end:
                            continue
                        color = (
                            KIND_COLORS[interval.kind.name]
                            if interval.kind is not None
                            else ON_LINE_COLOR
                        )
                        self._segment(
                            doc,
                            interval.start,
                            interval.end,
                            ("data-side", side.value),
                            ("stroke-width", str(BOUNDARY_WIDTH)),
                            stroke=color,
                        )
            with tag("g", id="witnesses"):
                for chord in self._witness_chords:
                    self._segment(
                        doc, chord.q1, chord.q2, ("stroke-dasharray", "6 4"), stroke=WITNESS_COLOR
                    )
            line = self._zone_map.line
            self._segment(
                doc, line.q1, line.q2, ("stroke-width", "2"), id="line", stroke=LINE_COLOR
            )
            with tag("g", id="corners"):
                for name, corner in CORNERS.items():
                    kind = self._zone_map.corner_kinds.get(name)
                    cx, cy = self._pixel(corner)
                    doc.stag(
                        "circle",
                        ("data-corner", name),
                        cx=cx,
                        cy=cy,
                        r="5",
                        fill=KIND_COLORS[kind.name] if kind is not None else ON_LINE_COLOR,
                    )
                    with tag("text", x=cx, y=cy, dx="-14" if corner.x == 0 else "8", dy="-6"):
                        text(name)
            self._legend(doc)
        return yattag.indent(doc.getvalue(), indentation="  ", newline="\n") + "\n"

    def _legend(self, doc):
        tag, text = doc.tag, doc.text
        left = self._size + 2 * self._margin
        with tag("g", id="legend"):
            for row, kind in enumerate(sorted_kinds(self._zone_map.kinds_present)):
                top = self._margin + row * 24
                doc.stag(
                    "rect",
                    x=str(left),
                    y=str(top),
                    width="16",
                    height="16",
                    fill=KIND_COLORS[kind.name],
                )
                with tag("text", x=str(left + 24), y=str(top + 13)):
                    text(f"{kind.label}: {kind.description}")

    def write(self, output_file: Path) -> str:
        svg = self.render()
        write_text(output_file, svg)
        return svg


def render_zone_svg(
    zone_map: ZoneMap, output_file: Optional[Path] = None, witness_chords: Sequence[Chord] = ()
) -> str:
    renderer = ZoneRenderer(zone_map, witness_chords)
    if output_file is None:
        return renderer.render()
    return renderer.write(output_file)
