from __future__ import annotations

import math
import numpy as np
from dataclasses import dataclass
from utils.errors import BadRadius, DegenerateLune
from utils.sphere import DEFAULT_TOLERANCE, HALF_PI, SpherePoint, Tolerance, distance, normalize

"""
Regions
    Hemispheres, caps (spherical balls) and lunes. A lune is stored by the poles of
    its two hemispheres only; bounding semicircles and corners are derived.
"""

@dataclass(frozen=True)
class Hemisphere:
    pole: SpherePoint

    def contains(self, p: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return float(np.dot(self.pole.vec, p.vec)) >= -tol.eps_alg


@dataclass(frozen=True)
class Cap:
    center: SpherePoint
    radius: float

    def __post_init__(self) -> None:
        if not (0.0 < self.radius <= HALF_PI + 1e-12):
            raise BadRadius(f"cap radius must be in (0, pi/2], got {self.radius}")

    @property
    def is_hemisphere(self) -> bool:
        return abs(self.radius - HALF_PI) <= 1e-12

    def contains(self, p: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return distance(self.center, p) <= self.radius + tol.eps_alg

    def as_hemisphere(self) -> Hemisphere | None:
        return Hemisphere(self.center) if self.is_hemisphere else None


@dataclass(frozen=True)
class Lune:
    g: SpherePoint
    h: SpherePoint

    # This function is used to reject coinciding or opposite hemispheres
    def validate(self, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        d = distance(self.g, self.h)
        if d < tol.eps_alg or d > math.pi - tol.eps_alg:
            raise DegenerateLune(f"hemispheres H({self.g}) and H({self.h}) do not form a lune")
        return d

    def contains(self, p: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return Hemisphere(self.g).contains(p, tol) and Hemisphere(self.h).contains(p, tol)


# ========================================================================================================================================================================
# Operations
# ========================================================================================================================================================================

# Thickness of G n H: pi minus the distance of the poles
def lune_thickness(lune: Lune, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    return math.pi - lune.validate(tol)

# This function is used to get the centers of the semicircles G/H and H/G
def lune_bounding_centers(lune: Lune, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[SpherePoint, SpherePoint]:
    """
    Centers of the two semicircles bounding the lune.

    c_GH lies on bd(G) and is the point of that great circle deepest inside H,
    c_HG is the symmetric point on bd(H).

    :param lune: The lune G n H.
    """
    lune.validate(tol)
    g, h = lune.g.vec, lune.h.vec
    gh = float(np.dot(g, h))
    c_gh = SpherePoint.from_vector(normalize(h - gh * g))
    c_hg = SpherePoint.from_vector(normalize(g - gh * h))
    return c_gh, c_hg

# This function is used to get the two (antipodal) corners of a lune
def lune_corners(lune: Lune, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[SpherePoint, SpherePoint]:
    lune.validate(tol)
    corner = SpherePoint.from_vector(normalize(np.cross(lune.g.vec, lune.h.vec)))
    return corner, -corner

# Membership dispatch over the three region kinds
def region_contains(region: Hemisphere | Cap | Lune, p: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return region.contains(p, tol)

# This function is used to build the lune of thickness `thickness` that has p as the center of the semicircle on bd(H(k))
def lune_with_center(k: SpherePoint, p: SpherePoint, thickness: float) -> Lune:
    """
    :param k: Pole of the hemisphere whose boundary passes through p (k is orthogonal to p).
    :param p: The requested semicircle center.
    :param thickness: Thickness of the lune, in (0, pi).
    """
    alpha = math.pi - thickness
    k_star = math.cos(alpha) * k.vec + math.sin(alpha) * p.vec
    return Lune(k, SpherePoint.from_vector(k_star))
