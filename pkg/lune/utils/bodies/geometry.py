from __future__ import annotations

import math
import numpy as np
from dataclasses import dataclass
from functools import lru_cache
from utils.errors import BadParameters, NotInOpenHemisphere, NotOnBoundary
from utils.regions import Cap
from utils.sphere import (
    DEFAULT_TOLERANCE,
    HALF_PI,
    SpherePoint,
    Tolerance,
    angles,
    distance,
    interpolate,
    local_frame,
    normalize,
    normalize_rows,
    polar_offset,
    tangent_toward,
)
from .BodyTypes import Body, ConvexPolygon, DiskPolygon, Edge, ON_CIRCLE_TOLERANCE

"""
Body geometry
    Everything is driven by one boundary model: a cycle of geodesic and circular edges.
    A cap is four quarter arcs, a polygon is its geodesic sides. The boundary of the
    polar body (the poles of all supporting hemispheres) is built from the same model,
    and containment, support and farthest-point queries all reduce to minimizing a dot
    product over those edges.
"""

# ========================================================================================================================================================================
# Boundary model
# ========================================================================================================================================================================

# This function is used to get the boundary edges of any body
@lru_cache(maxsize=1024)
def edges_of(body: Body) -> tuple[Edge, ...]:
    if isinstance(body, Cap):
        frame = local_frame(body.center.vec)
        corners = [
            SpherePoint.from_vector(polar_offset(body.center.vec, body.radius, k * HALF_PI, frame)) for k in range(4)
        ]
        return tuple(Edge(corners[k], corners[(k + 1) % 4], body.center, body.radius) for k in range(4))
    return body.edges

# This function is used to get the boundary of the polar body, the poles of every supporting hemisphere
@lru_cache(maxsize=1024)
def support_edges(body: Body) -> tuple[Edge, ...]:
    """
    Boundary of the polar body as an edge cycle.

    A geodesic side with pole k becomes the polar vertex k, a circular side around q of
    radius s becomes the arc around q of radius pi/2 - s, and every corner becomes the
    geodesic between the supporting poles of its two sides.

    :param body: The body.
    """
    if isinstance(body, Cap):
        if body.radius >= HALF_PI - ON_CIRCLE_TOLERANCE:
            raise NotInOpenHemisphere("a hemisphere has a single supporting hemisphere, its polar is a point")
        return edges_of(Cap(body.center, HALF_PI - body.radius))

    edges = edges_of(body)
    start_poles = [SpherePoint.from_vector(edge.pole_at_start) for edge in edges]
    end_poles = [SpherePoint.from_vector(edge.pole_at_end) for edge in edges]
    result: list[Edge] = []
    for i, edge in enumerate(edges):
        if edge.is_arc and HALF_PI - edge.arc_radius > ON_CIRCLE_TOLERANCE:
            result.append(Edge(start_poles[i], end_poles[i], edge.arc_center, HALF_PI - edge.arc_radius))
        following = start_poles[(i + 1) % len(edges)]
        if distance(end_poles[i], following) > ON_CIRCLE_TOLERANCE:
            result.append(Edge(end_poles[i], following))
    return tuple(result)

# This function is used to build the polar body from the polar boundary
def dual_body(body: Body) -> Body:
    if isinstance(body, Cap):
        if body.radius >= HALF_PI - ON_CIRCLE_TOLERANCE:
            raise NotInOpenHemisphere("the polar of a hemisphere is a single point")
        return Cap(body.center, HALF_PI - body.radius)
    edges = support_edges(body)
    if all(not edge.is_arc for edge in edges):
        return ConvexPolygon(tuple(edge.start for edge in edges))
    return DiskPolygon(edges)

# This function is used to get a point inside the body
def interior_point(body: Body) -> SpherePoint:
    if isinstance(body, Cap):
        return body.center
    return SpherePoint.from_vector(normalize(body.vertex_array.sum(axis=0)))

def vertices_of(body: Body) -> tuple[SpherePoint, ...]:
    if isinstance(body, Cap):
        return ()
    return tuple(body.vertices)


# ========================================================================================================================================================================
# Dot-product queries
# ========================================================================================================================================================================

# This function is used to minimize x.y over a cycle of edges for every row x
def min_dot_over(edges: tuple[Edge, ...], xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    xs = np.atleast_2d(np.asarray(xs, dtype=float))
    best = np.full(len(xs), np.inf)
    points = np.zeros_like(xs)
    for edge in edges:
        dots, pts = edge.min_dot(xs)
        better = dots < best
        best = np.where(better, dots, best)
        points[better] = pts[better]
    return best, points

# Signed margin of each row inside the body: pi/2 minus the largest distance to a supporting pole
def support_margin(body: Body, xs: np.ndarray) -> np.ndarray:
    """
    Zero on the boundary, positive inside, negative outside. For a cap this is the
    radius minus the distance to the center.

    :param body: The body.
    :param xs: Array of unit vectors, shape (m, 3).
    """
    xs = np.atleast_2d(np.asarray(xs, dtype=float))
    if isinstance(body, Cap):
        return body.radius - angles(xs, body.center.vec)
    _, poles = min_dot_over(support_edges(body), xs)
    return HALF_PI - angles(xs, poles)

# This function is used to get, for every row x, the farthest point of the body and its distance
def farthest(body: Body, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    :param body: The body.
    :param xs: Array of unit vectors, shape (m, 3).
    :return: (distances, farthest points) with shapes (m,) and (m, 3).
    """
    xs = np.atleast_2d(np.asarray(xs, dtype=float))
    if isinstance(body, Cap):
        c = body.center.vec
        d = angles(xs, c)
        away = -(xs - (xs @ c)[:, None] * c)
        reach = np.linalg.norm(away, axis=1)
        fallback = local_frame(c)[0]
        away = np.where(reach[:, None] > 1e-14, away / np.where(reach > 1e-14, reach, 1.0)[:, None], fallback)
        points = normalize_rows(math.cos(body.radius) * c + math.sin(body.radius) * away)
        return np.minimum(d + body.radius, math.pi), points

    _, points = min_dot_over(edges_of(body), xs)
    dists = angles(xs, points)
    # the antipode of x is the farthest point whenever the body holds it
    suspicious = np.where(dists > HALF_PI)[0]
    if len(suspicious):
        holds = support_margin(body, -xs[suspicious]) >= -DEFAULT_TOLERANCE.eps_alg
        hit = suspicious[holds]
        dists[hit] = math.pi
        points[hit] = -xs[hit]
    return dists, points

# This function is used to test a batch of points for membership
def contains_points(body: Body, xs: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    xs = np.atleast_2d(np.asarray(xs, dtype=float))
    if isinstance(body, Cap):
        return angles(xs, body.center.vec) <= body.radius + tol.eps_alg
    if isinstance(body, ConvexPolygon):
        vs = body.vertex_array
        normals = np.cross(vs, np.roll(vs, -1, axis=0))
        return np.all(xs @ normals.T >= -tol.eps_alg, axis=1)
    return support_margin(body, xs) >= -tol.eps_alg

# This function is used to test one point for membership
def body_contains(body: Body, p: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return bool(contains_points(body, p.vec[None, :], tol)[0])

# This function is used to check that p is on the boundary of the body
def on_boundary(body: Body, p: SpherePoint, tol: float = DEFAULT_TOLERANCE.eps_opt) -> bool:
    return abs(float(support_margin(body, p.vec[None, :])[0])) <= tol


# ========================================================================================================================================================================
# Boundary sampling
# ========================================================================================================================================================================

@dataclass(frozen=True)
class BoundarySample:
    points: np.ndarray # (n, 3)
    edge_index: np.ndarray # (n,) edge of edges_of(body) holding each point
    t: np.ndarray # (n,) parameter of each point on its edge

    def as_points(self) -> list[SpherePoint]:
        return [SpherePoint.from_vector(p) for p in self.points]


# This function is used to spread n points over the boundary by arc length, every vertex included
def boundary_parameters(body: Body, n: int) -> BoundarySample:
    edges = edges_of(body)
    if isinstance(body, Cap):
        if n < 3:
            raise BadParameters(f"a cap needs at least 3 boundary samples, got {n}")
        quarter = np.arange(n) * 4.0 / n
        index = np.minimum(np.floor(quarter).astype(int), 3)
        t = quarter - index
        points = np.array([edges[i].points([ti])[0] for i, ti in zip(index, t)])
        return BoundarySample(points, index, t)

    if n < len(edges):
        raise BadParameters(f"need at least one sample per edge ({len(edges)}), got {n}")
    lengths = np.array([edge.length for edge in edges])
    extra = n - len(edges)
    quota = extra * lengths / lengths.sum()
    counts = np.floor(quota).astype(int)
    # largest remainders take the leftover points, ties by edge order
    leftover = extra - counts.sum()
    order = sorted(range(len(edges)), key=lambda i: (-(quota[i] - counts[i]), i))
    for i in order[:leftover]:
        counts[i] += 1

    points, index, ts = [], [], []
    for i, edge in enumerate(edges):
        t = np.arange(counts[i] + 1) / (counts[i] + 1)
        points.append(edge.points(t))
        index.append(np.full(len(t), i))
        ts.append(t)
    return BoundarySample(np.concatenate(points), np.concatenate(index), np.concatenate(ts))

# This function is used to get n deterministic boundary points
def boundary_sample(body: Body, n: int) -> list[SpherePoint]:
    """
    n points on the boundary, equidistributed by arc length on every edge and
    including all vertices.

    :param body: The body.
    :param n: Number of points (at least the number of edges).
    """
    return boundary_parameters(body, n).as_points()


# ========================================================================================================================================================================
# Supporting hemispheres
# ========================================================================================================================================================================

@dataclass(frozen=True)
class SupportingPoles:
    first: SpherePoint
    last: SpherePoint # equal to first at smooth points

    @property
    def is_unique(self) -> bool:
        return distance(self.first, self.last) <= ON_CIRCLE_TOLERANCE

    # This function is used to walk the arc of poles at a corner
    def sample(self, count: int) -> list[SpherePoint]:
        if self.is_unique:
            return [self.first]
        return [interpolate(self.first, self.last, t) for t in np.linspace(0.0, 1.0, count)]

    def toJson(self) -> dict:
        return {"first": self.first.toJson(), "last": self.last.toJson()}


# This function is used to get the poles of all hemispheres supporting the body at p
def supporting_poles_at(body: Body, p: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> SupportingPoles:
    """
    A single pole at smooth boundary points, the arc of poles between the two incident
    sides at a corner.

    :param body: The body.
    :param p: A boundary point.
    """
    slack = tol.eps_opt
    if isinstance(body, Cap):
        if abs(distance(body.center, p) - body.radius) > slack:
            raise NotOnBoundary(f"{p} is not on the boundary of the cap")
        pole = SpherePoint.from_vector(tangent_toward(p.vec, body.center.vec))
        return SupportingPoles(pole, pole)

    edges = edges_of(body)
    for i, edge in enumerate(edges):
        if distance(edge.start, p) <= slack:
            incoming = edges[i - 1]
            return SupportingPoles(
                SpherePoint.from_vector(incoming.pole_at_end), SpherePoint.from_vector(edge.pole_at_start)
            )
    for edge in edges:
        if edge.locate(p, slack) is not None:
            pole = SpherePoint.from_vector(edge.poles_at(p.vec[None, :])[0])
            return SupportingPoles(pole, pole)
    raise NotOnBoundary(f"{p} is not on the boundary of the body")


# ========================================================================================================================================================================
# Shape predicates
# ========================================================================================================================================================================

# Exactly one supporting hemisphere at every boundary point
def is_smooth(body: Body) -> bool:
    if isinstance(body, Cap):
        return True
    edges = edges_of(body)
    for i, edge in enumerate(edges):
        incoming = edges[i - 1]
        if distance(SpherePoint.from_vector(incoming.pole_at_end), SpherePoint.from_vector(edge.pole_at_start)) > 1e-7:
            return False
    return True

# No boundary segment: every side is a circular arc of radius below pi/2
def is_strictly_convex(body: Body) -> bool:
    if isinstance(body, Cap):
        return body.radius < HALF_PI - ON_CIRCLE_TOLERANCE
    return all(edge.is_arc and edge.arc_radius < HALF_PI - ON_CIRCLE_TOLERANCE for edge in edges_of(body))

# This function is used to list extreme points: vertices, plus samples of every strictly curved side
def extreme_points(body: Body, per_arc: int = 32) -> np.ndarray:
    if isinstance(body, Cap):
        return boundary_parameters(body, max(per_arc, 8)).points
    points = [v.vec[None, :] for v in body.vertices]
    for edge in edges_of(body):
        if edge.is_arc and edge.arc_radius < HALF_PI - ON_CIRCLE_TOLERANCE:
            points.append(edge.points(np.linspace(0.0, 1.0, per_arc + 2)[1:-1]))
    return np.concatenate(points)
