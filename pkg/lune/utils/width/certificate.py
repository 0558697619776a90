from __future__ import annotations

import math
import logging
import numpy as np
from dataclasses import dataclass
from utils.bodies import Body, ConvexPolygon
from utils.errors import BadParameters, DegenerateInput, ThicknessTooLarge
from utils.sphere import DEFAULT_TOLERANCE, HALF_PI, SpherePoint, Tolerance, tangent_toward, walk
from .engine import lune_through_point, thickness

"""
Reducedness certificate
    Two numerical gates for a geodesic polygon. The necessary gate looks, at every
    vertex e, for a lune of the polygon's thickness containing it with e as the center
    of one bounding semicircle. The falsification gate cuts a small corner off every
    vertex and requires the thickness to drop. Passing both does not prove the polygon
    reduced; failing either shows it is not.
"""

logger = logging.getLogger("lune.width")

# ==========
# Constants
# ==========
CORNER_DEPTH = 0.02
CERTIFIED = "certified-consistent-with-reduced"
NOT_REDUCED = "not reduced"


@dataclass(frozen=True)
class CertificateReport:
    thickness: float
    vertex_slack: tuple[float, ...] # best lune slack at every vertex, >= -tol passes
    thickness_drop: tuple[float, ...] # thickness lost by cutting every corner
    necessary_ok: bool
    falsification_ok: bool

    @property
    def verdict(self) -> str:
        return CERTIFIED if self.necessary_ok and self.falsification_ok else NOT_REDUCED

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def toJson(self) -> dict:
        return {
            "verdict": self.verdict,
            "thickness": self.thickness,
            "necessary": {"ok": self.necessary_ok, "worst_slack": min(self.vertex_slack)},
            "falsification": {"ok": self.falsification_ok, "smallest_drop": min(self.thickness_drop)},
        }


# This function is used to cut the corner at vertex i with two points at `depth` along its sides
def cut_corner(polygon: ConvexPolygon, i: int, depth: float = CORNER_DEPTH) -> ConvexPolygon:
    vs = polygon.vertices
    n = len(vs)
    v, before, after = vs[i].vec, vs[i - 1].vec, vs[(i + 1) % n].vec
    step = min(depth, 0.25 * min(polygon.edges[i - 1].length, polygon.edges[i].length))
    first = walk(v, tangent_toward(v, before), step)
    second = walk(v, tangent_toward(v, after), step)
    cut = list(vs[:i]) + [SpherePoint.from_vector(first), SpherePoint.from_vector(second)] + list(vs[i + 1:])
    return ConvexPolygon(tuple(cut))

# This function is used to run both gates on a polygon
def reducedness_certificate(polygon: Body, tol: float = DEFAULT_TOLERANCE.eps_claim, tolerance: Tolerance = DEFAULT_TOLERANCE) -> CertificateReport:
    """
    :param polygon: A geodesic polygon of thickness below pi/2.
    :param tol: Slack accepted by the necessary gate.
    :param tolerance: Tolerances; eps_claim is the smallest thickness drop accepted.
    """
    if not isinstance(polygon, ConvexPolygon):
        raise BadParameters("the reducedness certificate only covers geodesic polygons")
    width, _ = thickness(polygon, tolerance)
    if width >= HALF_PI:
        raise ThicknessTooLarge(f"thickness {width:.9g} is not below pi/2")

    slacks = tuple(lune_through_point(polygon, v, width, tolerance)[1] for v in polygon.vertices)
    drops = []
    for i in range(len(polygon.vertices)):
        try:
            drops.append(width - thickness(cut_corner(polygon, i), tolerance)[0])
        except DegenerateInput:
            drops.append(-math.inf)
    report = CertificateReport(
        width,
        slacks,
        tuple(drops),
        bool(np.min(slacks) >= -tol),
        bool(np.min(drops) >= tolerance.eps_claim),
    )
    logger.debug(f"reducedness certificate: {report.verdict} (thickness {width:.9g})")
    return report
