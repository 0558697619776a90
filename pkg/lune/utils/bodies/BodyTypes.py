from __future__ import annotations

import math
import numpy as np
from dataclasses import dataclass
from functools import cached_property
from utils.errors import BadParameters, BadRadius, DegenerateInput, SchemaError
from utils.regions import Cap
from utils.sphere import HALF_PI, SpherePoint, distance, normalize, normalize_rows

"""
BodyTypes
    The three body families: caps (from regions), geodesic polygons and disk-polygons whose
    sides are geodesic or circular arcs. Every type converts to and from the plain
    dictionaries of the body document with toJson / fromDict.
"""

# ==========
# Constants
# ==========
ON_CIRCLE_TOLERANCE = 1e-9 # arc endpoints must sit on the arc's circle
LOCATE_SLACK = 1e-12


# ========================================================================================================================================================================
# Edge
# ========================================================================================================================================================================

@dataclass(frozen=True)
class Edge:
    start: SpherePoint
    end: SpherePoint
    arc_center: SpherePoint | None = None # None for a geodesic edge
    arc_radius: float | None = None

    def __post_init__(self) -> None:
        if self.is_arc:
            if self.arc_radius is None or not (0.0 < self.arc_radius <= HALF_PI + 1e-12):
                raise BadRadius(f"arc radius must be in (0, pi/2], got {self.arc_radius}")
            for endpoint in (self.start, self.end):
                if abs(distance(self.arc_center, endpoint) - self.arc_radius) > ON_CIRCLE_TOLERANCE:
                    raise DegenerateInput(f"{endpoint} is not on the circle of radius {self.arc_radius} around {self.arc_center}")
            sweep = self._frame[2]
            if not (1e-12 < sweep < math.pi):
                raise DegenerateInput(f"arc must subtend less than pi of its circle, got {sweep}")
        else:
            length = distance(self.start, self.end)
            if not (0.0 < length < math.pi):
                raise DegenerateInput(f"geodesic edge of length {length}")

    @property
    def is_arc(self) -> bool:
        return self.arc_center is not None

    # (u, v, sweep): arc points are cos(r) q + sin(r) (cos(phi) u + sin(phi) v), phi in [0, sweep]
    @cached_property
    def _frame(self) -> tuple[np.ndarray, np.ndarray, float]:
        q = self.arc_center.vec
        u = normalize(self.start.vec - np.dot(self.start.vec, q) * q)
        v = np.cross(q, u)
        sweep = math.atan2(float(np.dot(self.end.vec, v)), float(np.dot(self.end.vec, u))) % (2 * math.pi)
        return u, v, sweep

    @cached_property
    def pole(self) -> np.ndarray:
        """
        Pole of the great circle of a geodesic edge, on the body's side.
        """
        return normalize(np.cross(self.start.vec, self.end.vec))

    @property
    def sweep(self) -> float:
        return self._frame[2] if self.is_arc else distance(self.start, self.end)

    @property
    def length(self) -> float:
        if self.is_arc:
            return math.sin(self.arc_radius) * self._frame[2]
        return distance(self.start, self.end)

    # This function is used to get points of the edge at parameters t in [0, 1]
    def points(self, ts) -> np.ndarray:
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        if self.is_arc:
            u, v, sweep = self._frame
            phi = ts * sweep
            q = self.arc_center.vec
            r = self.arc_radius
            ring = np.cos(phi)[:, None] * u + np.sin(phi)[:, None] * v
            return normalize_rows(math.cos(r) * q + math.sin(r) * ring)
        a, b = self.start.vec, self.end.vec
        length = distance(self.start, self.end)
        sin_length = math.sin(length)
        return normalize_rows(
            (np.sin((1.0 - ts) * length) / sin_length)[:, None] * a + (np.sin(ts * length) / sin_length)[:, None] * b
        )

    def point(self, t: float) -> SpherePoint:
        return SpherePoint.from_vector(self.points([t])[0])

    # Pole of the supporting hemisphere at each row of ys (ys on the edge)
    def poles_at(self, ys: np.ndarray) -> np.ndarray:
        ys = np.atleast_2d(ys)
        if not self.is_arc:
            return np.tile(self.pole, (len(ys), 1))
        q = self.arc_center.vec
        return normalize_rows(q - (ys @ q)[:, None] * ys)

    @property
    def pole_at_start(self) -> np.ndarray:
        return self.poles_at(self.start.vec[None, :])[0]

    @property
    def pole_at_end(self) -> np.ndarray:
        return self.poles_at(self.end.vec[None, :])[0]

    # This function is used to find the parameter of p on the edge, None when p is off the edge
    def locate(self, p: SpherePoint, tol: float) -> float | None:
        if self.is_arc:
            if abs(distance(self.arc_center, p) - self.arc_radius) > tol:
                return None
            u, v, sweep = self._frame
            w = p.vec - np.dot(p.vec, self.arc_center.vec) * self.arc_center.vec
            phi = math.atan2(float(np.dot(w, v)), float(np.dot(w, u))) % (2 * math.pi)
            slack = tol / max(math.sin(self.arc_radius), tol)
            if phi > sweep + slack:
                # just before the start wraps around to 2 pi
                if phi > 2 * math.pi - slack:
                    return 0.0
                return None
            return min(phi / sweep, 1.0)
        n = self.pole
        if abs(float(np.dot(p.vec, n))) > tol:
            return None
        length = distance(self.start, self.end)
        from_start = distance(self.start, p)
        from_end = distance(p, self.end)
        if from_start + from_end > length + 2 * tol:
            return None
        return min(max(from_start / length, 0.0), 1.0)

    # This function is used to minimize x.y over the edge for every row x of xs (the farthest edge point from x)
    def min_dot(self, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        For every row x of xs, the smallest x.y over the points y of the edge and the
        point attaining it.

        :param xs: Array of unit vectors, shape (m, 3).
        """
        xs = np.atleast_2d(xs)
        a, b = self.start.vec, self.end.vec
        candidates = [xs @ a, xs @ b]
        points = [np.tile(a, (len(xs), 1)), np.tile(b, (len(xs), 1))]

        if self.is_arc:
            q = self.arc_center.vec
            u, v, sweep = self._frame
            r = self.arc_radius
            xu, xv = xs @ u, xs @ v
            reach = np.hypot(xu, xv)
            phi = np.arctan2(-xv, -xu) % (2 * math.pi)
            inside = (reach > 1e-14) & (phi <= sweep + LOCATE_SLACK)
            interior = math.cos(r) * (xs @ q) - math.sin(r) * reach
            ring = np.cos(phi)[:, None] * u + np.sin(phi)[:, None] * v
            interior_points = math.cos(r) * q + math.sin(r) * ring
        else:
            n = self.pole
            xn = xs @ n
            projected = xs - xn[:, None] * n
            reach = np.linalg.norm(projected, axis=1)
            safe = np.where(reach > 1e-14, reach, 1.0)
            interior_points = -projected / safe[:, None]
            inside = (
                (reach > 1e-14)
                & (np.cross(a, interior_points) @ n >= -LOCATE_SLACK)
                & (np.cross(interior_points, b) @ n >= -LOCATE_SLACK)
            )
            interior = -reach

        candidates.append(np.where(inside, interior, np.inf))
        points.append(interior_points)
        stacked = np.stack(candidates, axis=1)
        choice = np.argmin(stacked, axis=1)
        rows = np.arange(len(xs))
        best_points = np.stack(points, axis=1)[rows, choice]
        return stacked[rows, choice], best_points

    def rotated(self, matrix: np.ndarray) -> Edge:
        if self.is_arc:
            return Edge(self.start.rotated(matrix), self.end.rotated(matrix), self.arc_center.rotated(matrix), self.arc_radius)
        return Edge(self.start.rotated(matrix), self.end.rotated(matrix))

    # Convert the edge to a dictionary
    def toJson(self) -> dict:
        data = {"start": self.start.toJson(), "end": self.end.toJson()}
        if self.is_arc:
            data["arc_center"] = self.arc_center.toJson()
            data["arc_radius"] = self.arc_radius
        return data

    # Convert a dictionary to an edge
    @classmethod
    def fromDict(cls, data: dict) -> Edge:
        try:
            start = SpherePoint.from_vector(data["start"])
            end = SpherePoint.from_vector(data["end"])
            if "arc_center" in data:
                return cls(start, end, SpherePoint.from_vector(data["arc_center"]), float(data["arc_radius"]))
            return cls(start, end)
        except (KeyError, TypeError, IndexError, ValueError) as e:
            raise SchemaError(f"bad edge record {data!r}: {e}") from e


# ========================================================================================================================================================================
# Polygons
# ========================================================================================================================================================================

@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple[SpherePoint, ...] # counterclockwise seen from outside

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        n = len(self.vertices)
        if n < 3:
            raise BadParameters(f"a polygon needs at least 3 vertices, got {n}")
        vs = np.array([v.vec for v in self.vertices])
        turns = np.einsum("ij,ij->i", vs, np.cross(np.roll(vs, -1, axis=0), np.roll(vs, -2, axis=0)))
        if np.any(turns <= 1e-12):
            raise DegenerateInput("vertex cycle is not strictly convex and counterclockwise")
        if np.any(vs @ normalize(vs.sum(axis=0)) <= 0.0):
            raise DegenerateInput("polygon is not inside an open hemisphere")

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        n = len(self.vertices)
        return tuple(Edge(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n))

    @cached_property
    def vertex_array(self) -> np.ndarray:
        return np.array([v.vec for v in self.vertices])

    def rotated(self, matrix: np.ndarray) -> ConvexPolygon:
        return ConvexPolygon(tuple(v.rotated(matrix) for v in self.vertices))

    def toJson(self) -> dict:
        return {"vertices": [v.toJson() for v in self.vertices]}

    @classmethod
    def fromDict(cls, data: dict) -> ConvexPolygon:
        try:
            return cls(tuple(SpherePoint.from_vector(v) for v in data["vertices"]))
        except (KeyError, TypeError, IndexError, ValueError) as e:
            raise SchemaError(f"bad polygon record: {e}") from e


@dataclass(frozen=True)
class DiskPolygon:
    edges: tuple[Edge, ...] # head to tail, counterclockwise seen from outside

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        n = len(self.edges)
        if n < 2:
            raise BadParameters(f"a disk-polygon needs at least 2 edges, got {n}")
        for i, edge in enumerate(self.edges):
            following = self.edges[(i + 1) % n]
            if distance(edge.end, following.start) > ON_CIRCLE_TOLERANCE:
                raise DegenerateInput(f"edge {i} does not end where edge {(i + 1) % n} starts")
        self._check_convex()

    # Every sampled boundary point must lie in every sampled supporting hemisphere
    def _check_convex(self) -> None:
        ts = np.linspace(0.0, 1.0, 9)[:-1] + 1.0 / 16
        samples = np.concatenate([edge.points(ts) for edge in self.edges])
        poles = np.concatenate([edge.poles_at(edge.points(ts)) for edge in self.edges])
        if np.min(samples @ poles.T) < -1e-9:
            raise DegenerateInput("disk-polygon boundary is not convex or not counterclockwise")

    @property
    def vertices(self) -> tuple[SpherePoint, ...]:
        return tuple(edge.start for edge in self.edges)

    @cached_property
    def vertex_array(self) -> np.ndarray:
        return np.array([v.vec for v in self.vertices])

    def rotated(self, matrix: np.ndarray) -> DiskPolygon:
        return DiskPolygon(tuple(edge.rotated(matrix) for edge in self.edges))

    def toJson(self) -> dict:
        return {"edges": [edge.toJson() for edge in self.edges]}

    @classmethod
    def fromDict(cls, data: dict) -> DiskPolygon:
        try:
            return cls(tuple(Edge.fromDict(e) for e in data["edges"]))
        except (KeyError, TypeError) as e:
            raise SchemaError(f"bad disk-polygon record: {e}") from e


Body = Cap | ConvexPolygon | DiskPolygon


# This function is used to rotate any body
def rotate_body(body: Body, matrix: np.ndarray) -> Body:
    if isinstance(body, Cap):
        return Cap(body.center.rotated(matrix), body.radius)
    return body.rotated(matrix)

# This function is used to name the kind of a body in documents
def body_kind(body: Body) -> str:
    if isinstance(body, Cap):
        return "cap"
    if isinstance(body, ConvexPolygon):
        return "polygon"
    if isinstance(body, DiskPolygon):
        return "disk_polygon"
    raise BadParameters(f"{type(body).__name__} is not a body")

