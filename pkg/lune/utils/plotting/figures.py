from __future__ import annotations

import math
import logging
import numpy as np
from dataclasses import dataclass
from utils.bodies import Body, body_kind, boundary_parameters, edges_of, interior_point
from utils.errors import BadParameters
from utils.regions import Cap, Lune, lune_bounding_centers, lune_corners
from utils.sphere import HALF_PI, SpherePoint, angles, local_frame
from .svg import VIEW_BOX, SvgCanvas

"""
Figures
    Draws a body, and optionally a lune and a cap around it, on an SvgCanvas. Points are
    projected from the sphere onto the tangent plane at the projection center, either
    orthographically or gnomonically (great circles become straight lines). The scale
    puts everything drawn inside a circle of 450 units around the middle of the canvas.
"""

logger = logging.getLogger("lune.plotting")

# ==========
# Constants
# ==========
FIGURE_RADIUS = 450.0
EDGE_SAMPLES = 64
LUNE_SAMPLES = 181
CAP_SAMPLES = 256
REACH_SAMPLES = 256
GNOMONIC_HORIZON = 1e-2 # points this close to the horizon are not drawn
GNOMONIC_REACH = HALF_PI - 0.05
CENTER_MARK = 6.0
PROJECTIONS = ("orthographic", "gnomonic")


@dataclass(frozen=True)
class Projection:
    center: SpherePoint
    kind: str
    scale: float

    # This function is used to tell which rows of xs can be drawn
    def visible(self, xs: np.ndarray) -> np.ndarray:
        height = np.atleast_2d(xs) @ self.center.vec
        return height > (GNOMONIC_HORIZON if self.kind == "gnomonic" else 0.0)

    # This function is used to map rows of xs to canvas units around the middle
    def project(self, xs: np.ndarray) -> np.ndarray:
        xs = np.atleast_2d(xs)
        e1, e2 = local_frame(self.center.vec)
        plane = np.stack([xs @ e1, xs @ e2], axis=1)
        if self.kind == "gnomonic":
            plane = plane / (xs @ self.center.vec)[:, None]
        return self.scale * plane


# This function is used to build a projection that fits `reach` radians around the center
def make_projection(kind: str, center: SpherePoint, reach: float, radius: float = FIGURE_RADIUS) -> Projection:
    if kind not in PROJECTIONS:
        raise BadParameters(f"unknown projection '{kind}', expected one of {', '.join(PROJECTIONS)}")
    reach = max(reach, 1e-6)
    if kind == "gnomonic":
        if reach > GNOMONIC_REACH:
            raise BadParameters(f"the figure reaches {reach:.6g} rad from its center, too far for a gnomonic chart")
        extent = math.tan(reach)
    else:
        extent = math.sin(min(reach, HALF_PI))
    return Projection(center, kind, radius / extent)


# This function is used to split a sampled curve into the runs that can be drawn
def _visible_runs(projection: Projection, xs: np.ndarray) -> list[np.ndarray]:
    mask = projection.visible(xs)
    runs, current = [], []
    for x, ok in zip(xs, mask):
        if ok:
            current.append(x)
        elif current:
            runs.append(np.array(current))
            current = []
    if current:
        runs.append(np.array(current))
    return [projection.project(run) for run in runs if len(run) >= 2]


def _draw_curve(canvas: SvgCanvas, projection: Projection, xs: np.ndarray, css_class: str, stroke: str, closed: bool = False) -> None:
    runs = _visible_runs(projection, xs)
    whole = len(runs) == 1 and len(runs[0]) == len(xs)
    for run in runs:
        canvas.path(run, css_class, stroke, closed=closed and whole)


# Exact circle when the cap is centered at the projection center, sampled outline otherwise
def _draw_cap(canvas: SvgCanvas, projection: Projection, cap: Cap, css_class: str, stroke: str) -> None:
    if angles(cap.center.vec, projection.center.vec) < 1e-12:
        extent = math.tan(cap.radius) if projection.kind == "gnomonic" else math.sin(cap.radius)
        canvas.circle(0.0, 0.0, projection.scale * extent, css_class, stroke)
        return
    e1, e2 = local_frame(cap.center.vec)
    phi = np.linspace(0.0, 2 * math.pi, CAP_SAMPLES, endpoint=False)
    ring = np.cos(phi)[:, None] * e1 + np.sin(phi)[:, None] * e2
    xs = math.cos(cap.radius) * cap.center.vec + math.sin(cap.radius) * ring
    _draw_curve(canvas, projection, np.vstack([xs, xs[:1]]), css_class, stroke, closed=True)

# This function is used to draw the boundary of the body edge by edge
def _draw_body(canvas: SvgCanvas, projection: Projection, body: Body) -> None:
    if isinstance(body, Cap):
        _draw_cap(canvas, projection, body, "body", "#000000")
        return
    for edge in edges_of(body):
        if edge.is_arc:
            _draw_curve(canvas, projection, edge.points(np.linspace(0.0, 1.0, EDGE_SAMPLES)), "edge arc", "#000000")
        elif projection.kind == "gnomonic":
            canvas.path(projection.project(np.stack([edge.start.vec, edge.end.vec])), "edge geodesic", "#000000")
        else:
            _draw_curve(canvas, projection, edge.points(np.linspace(0.0, 1.0, EDGE_SAMPLES)), "edge geodesic", "#000000")

# This function is used to draw both bounding semicircles of the lune and mark their centers
def _draw_lune(canvas: SvgCanvas, projection: Projection, lune: Lune) -> None:
    corner, _ = lune_corners(lune)
    t = np.linspace(0.0, math.pi, LUNE_SAMPLES)
    for center in lune_bounding_centers(lune):
        xs = np.cos(t)[:, None] * corner.vec + np.sin(t)[:, None] * center.vec
        _draw_curve(canvas, projection, xs, "lune", "#2B6FE0")
        if projection.visible(center.vec)[0]:
            x, y = projection.project(center.vec)[0]
            canvas.circle(x, y, CENTER_MARK, "lune-center", "#2B6FE0", fill="#2B6FE0")


# This function is used to draw a body with its optional overlays
def plot_body(body: Body, projection: str = "orthographic", lune: Lune | None = None, cap: Cap | None = None, center: SpherePoint | None = None, size: float = VIEW_BOX, radius: float = FIGURE_RADIUS) -> SvgCanvas:
    """
    :param body: The body to draw.
    :param projection: "orthographic" or "gnomonic".
    :param lune: Optional lune overlay, both bounding semicircles and their centers.
    :param cap: Optional cap overlay (typically the smallest enclosing cap).
    :param center: Projection center. Defaults to the cap center when a cap is drawn,
        else to the centroid direction of the body.
    :param size: Side of the square canvas.
    :param radius: Everything drawn fits in this radius around the middle of the canvas.
    """
    if center is None:
        center = cap.center if cap is not None else interior_point(body)
    reach = float(np.max(angles(boundary_parameters(body, max(REACH_SAMPLES, len(edges_of(body)))).points, center.vec)))
    if cap is not None:
        reach = max(reach, float(angles(cap.center.vec, center.vec)) + cap.radius)
    frame = make_projection(projection, center, reach, radius)

    canvas = SvgCanvas(size)
    _draw_body(canvas, frame, body)
    if cap is not None:
        _draw_cap(canvas, frame, cap, "cap", "#E02B2B")
    if lune is not None:
        _draw_lune(canvas, frame, lune)
    canvas.text(-size / 2 + 20, size / 2 - 30, f"{body_kind(body)}, {projection}")
    logger.debug(f"plotted {body_kind(body)} with {len(canvas.commands)} items")
    return canvas
