from __future__ import annotations

import os
from xml.sax.saxutils import escape

"""
SVG canvas
    A fixed 1000 x 1000 user-unit canvas with the origin in the middle and y pointing up.
    Items are kept as markup strings and written in the order they were added, so the
    same figure always gives the same file.
"""

VIEW_BOX = 1000.0

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(size)g" height="%(size)g" viewBox="0 0 %(size)g %(size)g" version="1.1" xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="%(size)g" height="%(size)g" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""


class SvgCanvas:
    def __init__(self, size: float = VIEW_BOX) -> None:
        self.size = size
        self.commands: list[str] = []

    # Canvas coordinates of a point given around the middle, y up
    def to_canvas(self, x: float, y: float) -> tuple[float, float]:
        return self.size / 2 + x, self.size / 2 - y

    def _format(self, points) -> list[str]:
        out = []
        for x, y in points:
            cx, cy = self.to_canvas(x, y)
            out.append("%.3f %.3f" % (cx, cy))
        return out

    def circle(self, x: float, y: float, radius: float, css_class: str, stroke: str = "#000000", fill: str = "none") -> None:
        cx, cy = self.to_canvas(x, y)
        self.commands.append(
            '<circle class="%s" cx="%.3f" cy="%.3f" r="%.3f" style="fill:%s;stroke:%s;stroke-width:2"/>'
            % (css_class, cx, cy, radius, fill, stroke)
        )

    # An open path through the points; two points give a single straight segment
    def path(self, points, css_class: str, stroke: str = "#000000", width: float = 2.0, closed: bool = False) -> None:
        coords = self._format(points)
        if len(coords) < 2:
            return
        d = "M " + coords[0] + "".join(" L " + c for c in coords[1:]) + (" Z" if closed else "")
        self.commands.append(
            '<path class="%s" d="%s" style="fill:none;stroke:%s;stroke-width:%g"/>' % (css_class, d, stroke, width)
        )

    def text(self, x: float, y: float, text: str, color: str = "#666666") -> None:
        cx, cy = self.to_canvas(x, y)
        self.commands.append(
            '<text x="%.3f" y="%.3f" fill="%s" font-size="16" font-family="monospace">%s</text>'
            % (cx, cy, color, escape(text))
        )

    def render(self) -> str:
        return PREAMBLE % {"size": self.size} + "".join(item + "\n" for item in self.commands) + POSTAMBLE

    def save(self, filename: str) -> None:
        folder = os.path.dirname(os.path.abspath(filename))
        os.makedirs(folder, exist_ok=True)
        with open(filename, "w", encoding="utf-8") as f:
            f.write(self.render())
