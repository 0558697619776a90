from __future__ import annotations

import math
import logging
import numpy as np
from scipy.optimize import bisect, linprog
from scipy.spatial import ConvexHull, QhullError
from utils.errors import (
    BadParameters,
    BadRadius,
    BadThickness,
    DegenerateInput,
    EmptyResult,
    NoSolution,
    NotInOpenHemisphere,
)
from utils.regions import Cap
from utils.sphere import (
    DEFAULT_TOLERANCE,
    HALF_PI,
    SpherePoint,
    Tolerance,
    angles,
    as_vector,
    local_frame,
    normalize,
    normalize_rows,
    polar_offset,
)
from .BodyTypes import Body, ConvexPolygon, DiskPolygon, Edge
from .geometry import dual_body

"""
Constructors
    Closed-form body families (caps, quarter-disks, Reuleaux odd-gons, regular and regular
    reduced polygons), the convex hull of a point set and the intersection of caps.
"""

logger = logging.getLogger("lune.bodies")

# ==========
# Constants
# ==========
VERTEX_MERGE_TOLERANCE = 1e-9


# ========================================================================================================================================================================
# Hull
# ========================================================================================================================================================================

# This function is used to find a pole m with p.m > 0 for every point, or fail
def open_hemisphere_witness(points: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """
    Solves max t subject to p_i . m >= t, -1 <= m <= 1 as a linear program.

    :param points: Array of unit vectors, shape (n, 3).
    :return: The normalized witness pole.
    """
    points = np.atleast_2d(points)
    c = np.array([0.0, 0.0, 0.0, -1.0])
    a_ub = np.hstack([-points, np.ones((len(points), 1))])
    b_ub = np.zeros(len(points))
    bounds = [(-1.0, 1.0)] * 3 + [(None, 1.0)]
    result = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if not result.success or -result.fun <= tol.eps_alg:
        raise NotInOpenHemisphere("the points are not inside any open hemisphere")
    return normalize(result.x[:3])

# This function is used to build the spherical convex hull of a point set
def convex_hull(points: list[SpherePoint], tol: Tolerance = DEFAULT_TOLERANCE) -> ConvexPolygon:
    """
    The points are sent to the gnomonic chart around an open-hemisphere witness, where
    great circles are straight lines, and the planar hull is taken there.

    :param points: At least three points inside an open hemisphere.
    """
    if len(points) < 3:
        raise DegenerateInput(f"a hull needs at least 3 points, got {len(points)}")
    vs = np.array([as_vector(p) for p in points])
    pole = open_hemisphere_witness(vs, tol)
    e1, e2 = local_frame(pole)
    heights = vs @ pole
    chart = np.column_stack([(vs @ e1) / heights, (vs @ e2) / heights])
    try:
        hull = ConvexHull(chart)
    except QhullError as e:
        raise DegenerateInput("all points lie on one great circle") from e
    # scipy lists 2-D hull vertices counterclockwise
    return ConvexPolygon(tuple(SpherePoint.from_vector(vs[i]) for i in hull.vertices))


# ========================================================================================================================================================================
# Closed-form families
# ========================================================================================================================================================================

def make_cap(c: SpherePoint, radius: float) -> Cap:
    if not (0.0 < radius <= HALF_PI):
        raise BadRadius(f"cap radius must be in (0, pi/2], got {radius}")
    return Cap(c, radius)

# This function is used to build the sector of a cap spanned by two orthogonal radii
def make_quarter_disk(c: SpherePoint, thickness: float, orientation: float = 0.0) -> DiskPolygon:
    """
    :param c: The apex (center of the disk).
    :param thickness: Radius of the disk, in (0, pi/2); also the thickness of the result.
    :param orientation: Bearing of the first radius in the tangent frame at c.
    """
    if not (0.0 < thickness < HALF_PI):
        raise BadThickness(f"quarter-disk radius must be in (0, pi/2), got {thickness}")
    frame = local_frame(c.vec)
    a = SpherePoint.from_vector(polar_offset(c.vec, thickness, orientation, frame))
    b = SpherePoint.from_vector(polar_offset(c.vec, thickness, orientation + HALF_PI, frame))
    return DiskPolygon((Edge(c, a), Edge(a, b, c, thickness), Edge(b, c)))

# Circumradius of the regular n-gon whose long diagonals have length w
def reuleaux_circumradius(n: int, w: float) -> float:
    spread = math.pi - math.pi / n # central angle between the ends of a long diagonal
    return math.asin(math.sqrt((1.0 - math.cos(w)) / (1.0 - math.cos(spread))))

# This function is used to place the vertices of a regular n-gon around c, counterclockwise
def regular_vertices(c: SpherePoint, n: int, circumradius: float, orientation: float = 0.0) -> list[SpherePoint]:
    frame = local_frame(c.vec)
    return [
        SpherePoint.from_vector(polar_offset(c.vec, circumradius, orientation + 2 * math.pi * j / n, frame))
        for j in range(n)
    ]

# This function is used to build a spherical Reuleaux odd-gon of constant width w
def make_reuleaux_odd_gon(c: SpherePoint, n: int, w: float, orientation: float = 0.0) -> DiskPolygon:
    """
    For w <= pi/2 the body is the intersection of the caps of radius w around the
    vertices of a regular n-gon with long diagonals w. For w > pi/2 (triangles only) it
    is the polar of the Reuleaux triangle of width pi - w, whose sides are arcs of
    radius w - pi/2 joined by segments.

    :param c: Center of the body.
    :param n: Odd number of vertices, at least 3.
    :param w: The constant width.
    :param orientation: Bearing of the first vertex in the tangent frame at c.
    """
    if n < 3 or n % 2 == 0:
        raise BadParameters(f"Reuleaux polygons need an odd vertex count >= 3, got {n}")
    upper = 2 * math.pi / 3 if n == 3 else HALF_PI
    if not (0.0 < w <= upper + 1e-12):
        raise BadParameters(f"width {w} out of range (0, {upper:.6f}] for n = {n}")

    if w > HALF_PI:
        narrow = make_reuleaux_odd_gon(c, n, math.pi - w, orientation)
        return dual_body(narrow)

    vertices = regular_vertices(c, n, reuleaux_circumradius(n, w), orientation)
    across = (n + 1) // 2
    edges = tuple(
        Edge(vertices[j], vertices[(j + 1) % n], vertices[(j + across) % n], w) for j in range(n)
    )
    return DiskPolygon(edges)

def make_regular_polygon(c: SpherePoint, n: int, circumradius: float, orientation: float = 0.0) -> ConvexPolygon:
    if n < 3:
        raise BadParameters(f"a polygon needs at least 3 vertices, got {n}")
    if not (0.0 < circumradius < HALF_PI):
        raise BadRadius(f"circumradius must be in (0, pi/2), got {circumradius}")
    return ConvexPolygon(tuple(regular_vertices(c, n, circumradius, orientation)))

# Equilateral triangle with the given side length
def make_equilateral_triangle(c: SpherePoint, side: float, orientation: float = 0.0) -> ConvexPolygon:
    if not (0.0 < side < 2 * math.pi / 3):
        raise BadParameters(f"equilateral side must be in (0, 2 pi/3), got {side}")
    circumradius = math.asin(2.0 / math.sqrt(3.0) * math.sin(side / 2.0))
    return make_regular_polygon(c, 3, circumradius, orientation)

# This function is used to solve r + arctan(tan(r) cos(pi/n)) = thickness for the circumradius r
def regular_reduced_circumradius(n: int, thickness: float) -> float:
    shrink = math.cos(math.pi / n)

    def gap(r: float) -> float:
        return r + math.atan(math.tan(r) * shrink) - thickness

    low, high = 1e-15, min(thickness, HALF_PI - 1e-12)
    if gap(low) >= 0.0 or gap(high) <= 0.0:
        raise NoSolution(f"no regular reduced {n}-gon of thickness {thickness}")
    return bisect(gap, low, high, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)

# This function is used to build the regular reduced odd-gon of a given thickness
def make_regular_reduced_polygon(c: SpherePoint, n: int, thickness: float, orientation: float = 0.0) -> ConvexPolygon:
    """
    Regular geodesic n-gon whose vertex-to-opposite-side-midpoint distance equals the
    requested thickness.

    :param c: Center of the polygon.
    :param n: Odd number of vertices, at least 3.
    :param thickness: Requested thickness, in (0, pi/2).
    """
    if n < 3 or n % 2 == 0:
        raise BadParameters(f"regular reduced polygons need an odd vertex count >= 3, got {n}")
    if not (0.0 < thickness < HALF_PI):
        raise BadThickness(f"thickness must be in (0, pi/2), got {thickness}")
    return make_regular_polygon(c, n, regular_reduced_circumradius(n, thickness), orientation)


# ========================================================================================================================================================================
# Intersections of caps
# ========================================================================================================================================================================

# This function is used to get every point where the boundary circles of two of the caps cross
def _circle_crossings(centers: np.ndarray, radii: np.ndarray) -> np.ndarray:
    """
    A crossing of the circles around q1 and q2 is a q1 + b q2 + g (q1 x q2), with a and b
    fixed by the two distance conditions and g by the unit length.
    """
    i, j = np.triu_indices(len(centers), 1)
    q1, q2 = centers[i], centers[j]
    c = np.einsum("ij,ij->i", q1, q2)
    normal = np.cross(q1, q2)
    sin_sq = np.einsum("ij,ij->i", normal, normal)
    cos1, cos2 = np.cos(radii[i]), np.cos(radii[j])
    usable = sin_sq > 1e-24
    safe = np.where(usable, sin_sq, 1.0)
    alpha = (cos1 - c * cos2) / safe
    beta = (cos2 - c * cos1) / safe
    base = alpha[:, None] * q1 + beta[:, None] * q2
    rest = 1.0 - np.einsum("ij,ij->i", base, base)
    usable &= rest >= 0.0
    gamma = np.sqrt(np.where(usable, rest, 0.0) / safe)
    plus = base + gamma[:, None] * normal
    minus = base - gamma[:, None] * normal
    return normalize_rows(np.concatenate([plus[usable], minus[usable]]))

# This function is used to keep the points lying in every cap, checking the caps in blocks
def _inside_all(points: np.ndarray, centers: np.ndarray, radii: np.ndarray, tol: Tolerance, block: int = 64) -> np.ndarray:
    keep = np.ones(len(points), dtype=bool)
    limits = np.cos(radii + tol.eps_alg)
    for start in range(0, len(centers), block):
        alive = np.where(keep)[0]
        if not len(alive):
            break
        dots = points[alive] @ centers[start:start + block].T
        keep[alive] = np.all(dots >= limits[start:start + block] - 1e-15, axis=1)
    return keep

# This function is used to build the intersection of a family of caps as a body
def intersect_caps(caps: list[Cap], tol: Tolerance = DEFAULT_TOLERANCE) -> Body:
    """
    Vertices are the pairwise boundary crossings lying in every cap; consecutive vertices
    are joined by the arc of the cap whose circle carries both of them.

    :param caps: Caps of radius at most pi/2.
    """
    if not caps:
        raise BadParameters("no caps to intersect")
    centers = np.array([cap.center.vec for cap in caps])
    radii = np.array([cap.radius for cap in caps])

    # a cap lying inside every other one is the whole answer
    for i in np.argsort(radii):
        if np.all(angles(centers, centers[i]) + radii[i] <= radii + tol.eps_alg):
            return caps[int(i)]

    crossings = _circle_crossings(centers, radii)
    if not len(crossings):
        raise EmptyResult("the caps have no common boundary point")
    crossings = crossings[_inside_all(crossings, centers, radii, tol)]
    if len(crossings) < 2:
        raise EmptyResult("the intersection of the caps has no interior")

    middle = normalize(crossings.sum(axis=0))
    e1, e2 = local_frame(middle)
    order = np.argsort(np.arctan2(crossings @ e2, crossings @ e1) % (2 * math.pi), kind="stable")
    vertices = []
    for point in crossings[order]:
        # crossings of three circles through one point come out several times, next to each other
        if not vertices or np.linalg.norm(point - vertices[-1]) > VERTEX_MERGE_TOLERANCE:
            vertices.append(point)
    if len(vertices) > 2 and np.linalg.norm(vertices[0] - vertices[-1]) <= VERTEX_MERGE_TOLERANCE:
        vertices.pop()
    if len(vertices) < 2:
        raise EmptyResult("the intersection of the caps has no interior")

    edges: list[Edge] = []
    for k, start in enumerate(vertices):
        end = vertices[(k + 1) % len(vertices)]
        edges.extend(_arc_between(start, end, caps, centers, radii, tol))
    return DiskPolygon(tuple(edges))

# This function is used to pick the cap whose circle joins two consecutive vertices
def _arc_between(start: np.ndarray, end: np.ndarray, caps: list[Cap], centers: np.ndarray, radii: np.ndarray, tol: Tolerance) -> list[Edge]:
    on_start = np.abs(angles(centers, start) - radii) <= 1e-9
    on_end = np.abs(angles(centers, end) - radii) <= 1e-9
    for i in np.where(on_start & on_end)[0]:
        q = centers[i]
        u = normalize(start - np.dot(start, q) * q)
        v = np.cross(q, u)
        sweep = math.atan2(float(np.dot(end, v)), float(np.dot(end, u))) % (2 * math.pi)
        middle = polar_offset(q, radii[i], sweep / 2.0, (u, v))
        if not np.all(angles(centers, middle) <= radii + tol.eps_alg):
            continue
        a, b = SpherePoint.from_vector(start), SpherePoint.from_vector(end)
        if sweep < math.pi - 1e-6:
            return [Edge(a, b, caps[i].center, float(radii[i]))]
        # halve arcs reaching half a circle
        m = SpherePoint.from_vector(middle)
        return [Edge(a, m, caps[i].center, float(radii[i])), Edge(m, b, caps[i].center, float(radii[i]))]
    raise EmptyResult("consecutive vertices of the cap intersection share no boundary circle")
