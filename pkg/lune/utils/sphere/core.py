from __future__ import annotations

import math
import numpy as np
from dataclasses import dataclass
from functools import cached_property
from scipy.spatial.transform import Rotation
from utils.errors import AntipodalEndpoints, ConfigError, DegenerateInput, DegenerateTriple

"""
Sphere core
    Points, arcs and the small set of predicates every other module is built on.
    Angles are radians everywhere. Distances always go through atan2 of the cross
    and dot products, never arccos of the dot product.
"""

# ==========
# Constants
# ==========
NORMALIZATION_TOLERANCE = 1e-12
HALF_PI = math.pi / 2


# ==========
# Tolerance
# ==========
@dataclass(frozen=True)
class Tolerance:
    eps_alg: float = 1e-9 # algebraic predicates (orientation, membership)
    eps_opt: float = 1e-7 # optimizer convergence
    eps_claim: float = 1e-6 # theorem checks

    def __post_init__(self) -> None:
        if not (0 < self.eps_alg < self.eps_opt < self.eps_claim < 1e-3):
            raise ConfigError(
                f"tolerances must satisfy 0 < eps_alg < eps_opt < eps_claim < 1e-3, got "
                f"{self.eps_alg}, {self.eps_opt}, {self.eps_claim}"
            )

    def toJson(self) -> dict:
        return {"eps_alg": self.eps_alg, "eps_opt": self.eps_opt, "eps_claim": self.eps_claim}


DEFAULT_TOLERANCE = Tolerance()


# ========================================================================================================================================================================
# Vector helpers (numpy arrays, rows are points)
# ========================================================================================================================================================================

# This function is used to scale a vector to unit length
def normalize(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm < NORMALIZATION_TOLERANCE:
        raise DegenerateInput("cannot normalize a zero vector")
    return v / norm

# This function is used to scale every row of an array to unit length
def normalize_rows(vs: np.ndarray) -> np.ndarray:
    vs = np.asarray(vs, dtype=float)
    norms = np.linalg.norm(vs, axis=-1, keepdims=True)
    return vs / np.where(norms < NORMALIZATION_TOLERANCE, 1.0, norms)

# Angle between unit vectors, row-wise and broadcasting
def angles(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    cross = np.linalg.norm(np.cross(a, b), axis=-1)
    dot = np.einsum("...i,...i->...", a, b)
    return np.arctan2(cross, dot)

# This function is used to get the unit tangent at p pointing along the arc toward q
def tangent_toward(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return normalize(q - np.dot(q, p) * p)

# This function is used to walk a distance t from p along the unit tangent u
def walk(p: np.ndarray, u: np.ndarray, t: float) -> np.ndarray:
    return normalize(math.cos(t) * np.asarray(p, dtype=float) + math.sin(t) * np.asarray(u, dtype=float))

# Orthonormal frame (e1, e2) of the tangent plane at c, e2 = c x e1 so angles grow counterclockwise seen from outside
def local_frame(c: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    c = np.asarray(c, dtype=float)
    helper = np.array([1.0, 0.0, 0.0]) if abs(c[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = normalize(helper - np.dot(helper, c) * c)
    e2 = np.cross(c, e1)
    return e1, e2

# This function is used to place a point at a given distance and bearing from c
def polar_offset(c: np.ndarray, radius: float, bearing: float, frame: tuple[np.ndarray, np.ndarray] | None = None) -> np.ndarray:
    e1, e2 = frame if frame is not None else local_frame(c)
    direction = math.cos(bearing) * e1 + math.sin(bearing) * e2
    return walk(c, direction, radius)

# This function is used to draw a random rotation, used by the suites to move figures around
def random_rotation(rng: np.random.Generator) -> np.ndarray:
    return Rotation.random(random_state=rng).as_matrix()

# This function is used to draw points uniformly on the sphere
def random_unit_vectors(rng: np.random.Generator, count: int) -> np.ndarray:
    return normalize_rows(rng.normal(size=(count, 3)))


# ========================================================================================================================================================================
# Domain types
# ========================================================================================================================================================================

@dataclass(frozen=True)
class SpherePoint:
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        norm = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if norm < NORMALIZATION_TOLERANCE or not math.isfinite(norm):
            raise DegenerateInput(f"({self.x}, {self.y}, {self.z}) is not a direction")
        # Re-normalize so consumers can assume a unit vector
        object.__setattr__(self, "x", float(self.x / norm))
        object.__setattr__(self, "y", float(self.y / norm))
        object.__setattr__(self, "z", float(self.z / norm))

    @classmethod
    def from_vector(cls, v) -> SpherePoint:
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @cached_property
    def vec(self) -> np.ndarray:
        v = np.array([self.x, self.y, self.z])
        v.setflags(write=False)
        return v

    def __neg__(self) -> SpherePoint:
        return SpherePoint(-self.x, -self.y, -self.z)

    def rotated(self, matrix: np.ndarray) -> SpherePoint:
        return SpherePoint.from_vector(np.asarray(matrix) @ self.vec)

    def toJson(self) -> list[float]:
        return [self.x, self.y, self.z]

    def __repr__(self) -> str:
        return f"SpherePoint({self.x:.9g}, {self.y:.9g}, {self.z:.9g})"


@dataclass(frozen=True)
class GeodesicArc:
    a: SpherePoint
    b: SpherePoint

    def __post_init__(self) -> None:
        if distance(self.a, self.b) > math.pi - DEFAULT_TOLERANCE.eps_alg:
            raise AntipodalEndpoints("the arc between antipodes is not unique")

    @property
    def length(self) -> float:
        return distance(self.a, self.b)

    def point_at(self, t: float) -> SpherePoint:
        return interpolate(self.a, self.b, t)


# This function is used to accept either a SpherePoint or a raw 3-vector
def as_vector(p: SpherePoint | np.ndarray | list | tuple) -> np.ndarray:
    if isinstance(p, SpherePoint):
        return p.vec
    return normalize(np.asarray(p, dtype=float))


# ========================================================================================================================================================================
# Operations
# ========================================================================================================================================================================

# This function is used to get the spherical distance |ab|
def distance(a: SpherePoint, b: SpherePoint) -> float:
    """
    Spherical distance of two points, in [0, pi].

    :param a: The first point.
    :param b: The second point.
    """
    u, v = as_vector(a), as_vector(b)
    return float(math.atan2(np.linalg.norm(np.cross(u, v)), float(np.dot(u, v))))

def antipode(p: SpherePoint) -> SpherePoint:
    return -p

# This function is used to get the point of the arc ab at fraction t of its length
def interpolate(a: SpherePoint, b: SpherePoint, t: float, tol: Tolerance = DEFAULT_TOLERANCE) -> SpherePoint:
    """
    Unit-speed geodesic interpolation along the shorter arc ab.

    :param a: Start of the arc (t = 0).
    :param b: End of the arc (t = 1).
    :param t: Fraction of the arc length, in [0, 1].
    """
    d = distance(a, b)
    if d > math.pi - tol.eps_alg:
        raise AntipodalEndpoints(f"{a} and {b} are antipodal")
    if d < NORMALIZATION_TOLERANCE:
        return a
    if t <= 0.0:
        return a
    if t >= 1.0:
        return b
    u = tangent_toward(a.vec, b.vec)
    return SpherePoint.from_vector(walk(a.vec, u, t * d))

# Sign of the triple product a.(b x c), zero inside eps_alg
def orient(a: SpherePoint, b: SpherePoint, c: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    value = float(np.dot(as_vector(a), np.cross(as_vector(b), as_vector(c))))
    if abs(value) < tol.eps_alg:
        return 0
    return 1 if value > 0 else -1

# This function is used to get the small circle through three points
def circumcircle(a: SpherePoint, b: SpherePoint, c: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[SpherePoint, float]:
    """
    Center and radius of the circle through a, b and c. Of the two antipodal
    equidistant centers the one with the smaller radius is returned.

    :param a: First point.
    :param b: Second point.
    :param c: Third point.
    """
    if orient(a, b, c, tol) == 0:
        raise DegenerateTriple("the three points lie on one great circle")
    u, v, w = as_vector(a), as_vector(b), as_vector(c)
    normal = np.cross(v - u, w - u)
    norm = np.linalg.norm(normal)
    if norm < NORMALIZATION_TOLERANCE:
        raise DegenerateTriple("coinciding points")
    center = normal / norm
    if np.dot(center, u) < 0:
        center = -center
    center_point = SpherePoint.from_vector(center)
    return center_point, distance(center_point, a)
