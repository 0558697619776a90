from __future__ import annotations

import logging
import numpy as np
from functools import lru_cache
from utils.bodies import Body, ConvexPolygon, boundary_parameters, dual_body, edges_of, intersect_caps, support_margin
from utils.errors import BadRadius, EmptyResult
from utils.regions import Cap
from utils.sphere import DEFAULT_TOLERANCE, HALF_PI, SpherePoint, Tolerance

"""
Polar
    The polar body (poles of all hemispheres containing the body) and its
    ball version, the intersection of the caps of radius rho around the body's points.
"""

logger = logging.getLogger("lune.width")

# ==========
# Constants
# ==========
RHO_SAMPLES = (128, 256, 512)


# This function is used to get the polar of a body
@lru_cache(maxsize=256)
def polar(body: Body) -> Body:
    """
    Cap(c, r) goes to Cap(c, pi/2 - r), a polygon to the polygon of its side poles, a
    disk-polygon side of radius s around q to the arc of radius pi/2 - s around q.

    :param body: A body inside an open hemisphere.
    """
    return dual_body(body)

# This function is used to intersect the caps of radius rho around every point of the body
def polar_rho(body: Body | SpherePoint, rho: float, tol: Tolerance = DEFAULT_TOLERANCE) -> Body:
    """
    For polygons the vertex caps are enough. For disk-polygons the caps around boundary
    samples are intersected, doubling the sample count until the result stops moving.

    :param body: A body, or a single point.
    :param rho: Radius in (0, pi/2].
    """
    if not (0.0 < rho <= HALF_PI + 1e-12):
        raise BadRadius(f"rho must be in (0, pi/2], got {rho}")
    if isinstance(body, SpherePoint):
        return Cap(body, rho)
    if rho >= HALF_PI - 1e-12:
        return polar(body)
    if isinstance(body, Cap):
        if body.radius >= rho:
            raise EmptyResult(f"no point is within {rho} of a whole cap of radius {body.radius}")
        return Cap(body.center, rho - body.radius)
    if isinstance(body, ConvexPolygon):
        return intersect_caps([Cap(v, rho) for v in body.vertices], tol)

    previous = None
    for count in RHO_SAMPLES:
        count = max(count, len(body.edges))
        points = boundary_parameters(body, count).points
        current = intersect_caps([Cap(SpherePoint.from_vector(p), rho) for p in points], tol)
        if previous is not None and _hausdorff_gap(previous, current) <= tol.eps_opt:
            return current
        previous = current
    logger.debug(f"polar_rho stopped at {RHO_SAMPLES[-1]} samples before settling")
    return previous

# Largest margin gap between two nearby bodies, measured on their boundary samples
def _hausdorff_gap(first: Body, second: Body) -> float:
    a = boundary_parameters(first, max(256, len(edges_of(first)))).points
    b = boundary_parameters(second, max(256, len(edges_of(second)))).points
    return float(max(np.max(np.abs(support_margin(second, a))), np.max(np.abs(support_margin(first, b)))))

# This function is used to build the convex hull of a family of caps through the polar
def conv_of_caps(caps: list[Cap], tol: Tolerance = DEFAULT_TOLERANCE) -> Body:
    """
    conv of the union of B_r(c) is the polar of the intersection of B_{pi/2 - r}(c).

    :param caps: Caps of radius below pi/2 whose centers lie in an open hemisphere.
    """
    return dual_body(intersect_caps([Cap(cap.center, HALF_PI - cap.radius) for cap in caps], tol))
