from __future__ import annotations

import math
import logging
import numpy as np
from dataclasses import dataclass, field
from itertools import combinations
from utils.bodies import Body, ConvexPolygon, boundary_parameters, edges_of, farthest
from utils.errors import BadParameters, NotInOpenHemisphere, RegimeUnknown
from utils.regions import Cap
from utils.sphere import DEFAULT_TOLERANCE, HALF_PI, SpherePoint, Tolerance, angles, normalize_rows
from utils.width import is_constant_width, reducedness_certificate, scan_then_polish, thickness

"""
Covering
    Smallest caps around bodies. Any three points determine a candidate cap, so the
    smallest enclosing cap of a point set is found among the caps of pairs and triples
    (smallest feasible one wins). Larger sets are handled by growing a small working set
    with the points left outside, and bodies by adding their exact farthest point from
    the current center until nothing sticks out.
"""

logger = logging.getLogger("lune.covering")

# ==========
# Constants
# ==========
CAP_CANDIDATES = 256
COVER_BOUNDARY = 512
WORKING_SET_LIMIT = 48
MAX_ROUNDS = 100
FEASIBILITY_SLACK = 1e-12
BATCH = 4096
DEKSTER_FACTOR = 2.0 * math.sqrt(3.0) / 3.0


# ========================================================================================================================================================================
# Types
# ========================================================================================================================================================================

@dataclass(frozen=True)
class CoverResult:
    center: SpherePoint
    radius: float
    support: tuple[SpherePoint, ...] = () # points on the cap's circle determining it

    @property
    def cap(self) -> Cap:
        return Cap(self.center, self.radius)

    def toJson(self) -> dict:
        return {"center": self.center.toJson(), "radius": self.radius, "support": [p.toJson() for p in self.support]}


@dataclass(frozen=True)
class BoundReport:
    regime: str
    thickness: float
    measured: float
    bounds: dict[str, float] = field(default_factory=dict)

    @property
    def bound(self) -> float:
        return min(self.bounds.values())

    @property
    def slack(self) -> float:
        return self.bound - self.measured

    def holds(self, tol: float = DEFAULT_TOLERANCE.eps_claim) -> bool:
        return self.measured <= self.bound + tol

    def toJson(self) -> dict:
        return {
            "regime": self.regime,
            "thickness": self.thickness,
            "measured": self.measured,
            "bounds": dict(self.bounds),
            "bound": self.bound,
            "slack": self.slack,
            "ok": self.holds(),
        }


# ========================================================================================================================================================================
# Point sets
# ========================================================================================================================================================================

# This function is used to list the caps of all pairs (diametral) and triples (circumscribed) of points
def _candidate_caps(points: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    m = len(points)
    i, j = np.triu_indices(m, 1)
    centers = [normalize_rows(points[i] + points[j])]
    radii = [angles(points[i], points[j]) / 2.0]
    supports = [np.stack([i, j, j], axis=1)]

    if m >= 3:
        triples = np.array(list(combinations(range(m), 3)))
        a, b, c = points[triples[:, 0]], points[triples[:, 1]], points[triples[:, 2]]
        normal = np.cross(b - a, c - a)
        norm = np.linalg.norm(normal, axis=1)
        usable = norm > 1e-14
        normal = normal[usable] / norm[usable, None]
        # the center sits on the points' side of their plane
        normal *= np.where(np.einsum("ij,ij->i", normal, a[usable]) < 0.0, -1.0, 1.0)[:, None]
        centers.append(normal)
        radii.append(angles(normal, a[usable]))
        supports.append(triples[usable])

    return np.concatenate(centers), np.concatenate(radii), np.concatenate(supports)

# This function is used to pick the smallest cap containing every point among the pair and triple caps
def _smallest_feasible(points: np.ndarray) -> tuple[np.ndarray, float, tuple[int, ...]]:
    if len(points) == 1:
        return points[0], 0.0, (0,)
    centers, radii, supports = _candidate_caps(points)
    floor = float(np.max(radii[: len(points) * (len(points) - 1) // 2])) # largest half pair distance
    keep = radii >= floor - FEASIBILITY_SLACK
    centers, radii, supports = centers[keep], radii[keep], supports[keep]
    order = np.argsort(radii, kind="stable")
    for start in range(0, len(order), BATCH):
        batch = order[start:start + BATCH]
        dots = centers[batch] @ points.T
        feasible = np.all(dots >= np.cos(radii[batch])[:, None] - FEASIBILITY_SLACK, axis=1)
        if np.any(feasible):
            best = batch[int(np.argmax(feasible))]
            return centers[best], float(radii[best]), tuple(sorted(set(int(s) for s in supports[best])))
    raise NotInOpenHemisphere("no cap of radius below pi/2 contains the points")

# This function is used to find the smallest cap containing a set of points
def min_cap_of_points(points: np.ndarray) -> CoverResult:
    """
    :param points: Array of unit vectors, shape (m, 3), inside an open hemisphere.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if not len(points):
        raise BadParameters("no points to cover")
    if len(points) <= WORKING_SET_LIMIT:
        center, radius, support = _smallest_feasible(points)
    else:
        first = int(np.argmax(angles(points, points[0])))
        second = int(np.argmax(angles(points, points[first])))
        working = sorted({0, first, second})
        for _ in range(MAX_ROUNDS):
            center, radius, support = _smallest_feasible(points[working])
            support = tuple(working[s] for s in support)
            gaps = angles(points, center) - radius
            outside = [int(i) for i in np.argsort(-gaps)[:4] if gaps[i] > FEASIBILITY_SLACK and int(i) not in working]
            if not outside:
                break
            working = sorted(set(support) | set(outside) | set(working[-WORKING_SET_LIMIT // 2:]))
        else:
            logger.warning(f"smallest cap of {len(points)} points stopped after {MAX_ROUNDS} rounds")
    if radius >= HALF_PI:
        raise NotInOpenHemisphere(f"the smallest cap has radius {radius:.9g} >= pi/2")
    return CoverResult(SpherePoint.from_vector(center), radius, tuple(SpherePoint.from_vector(points[s]) for s in support))


# ========================================================================================================================================================================
# Bodies
# ========================================================================================================================================================================

# This function is used to find the smallest cap containing the body
def min_enclosing_cap(body: Body, samples: int = CAP_CANDIDATES, tol: Tolerance = DEFAULT_TOLERANCE) -> CoverResult:
    """
    Starts from the smallest cap of `samples` boundary points (all vertices included),
    then adds the exact farthest body point from the center and solves again until the
    body sticks out by less than eps_opt.

    :param body: A body inside an open hemisphere.
    :param samples: Number of boundary points of the first pass.
    """
    if isinstance(body, Cap):
        if body.is_hemisphere:
            raise NotInOpenHemisphere("a hemisphere has no enclosing cap of radius below pi/2")
        return CoverResult(body.center, body.radius)

    points = boundary_parameters(body, max(samples, len(edges_of(body)))).points
    result = min_cap_of_points(points)
    working = np.array([p.vec for p in result.support])
    for _ in range(MAX_ROUNDS):
        reach, far = farthest(body, result.center.vec[None, :])
        if reach[0] <= result.radius + tol.eps_opt:
            return result
        working = np.vstack([working, far])
        result = min_cap_of_points(working)
    logger.warning(f"enclosing cap polish stopped after {MAX_ROUNDS} rounds")
    return result

# This function is used to find the boundary point whose farthest body point is nearest
def boundary_centered_cover(body: Body, samples: int = COVER_BOUNDARY) -> CoverResult:
    """
    Minimizes f(p) = max over the body of |px| along the boundary, from `samples`
    boundary points and a golden-section polish on the sides around the best one.

    :param body: The body.
    :return: The best boundary center, its radius f(p) and the farthest point as support.
    """
    edges = edges_of(body)
    sample = boundary_parameters(body, max(samples, len(edges)))
    dists, _ = farthest(body, sample.points)
    i = int(np.argmin(dists))
    index = int(sample.edge_index[i])
    t = float(sample.t[i])
    h = 1.0 / np.count_nonzero(sample.edge_index == index)

    best_value, best_point = float(dists[i]), sample.points[i]
    windows = [(edges[index], max(t - h, 0.0), min(t + h, 1.0))]
    if t <= 0.0:
        windows.append((edges[index - 1], 1.0 - h, 1.0))
    for edge, low, high in windows:
        result = scan_then_polish(lambda ts, edge=edge: farthest(body, edge.points(ts))[0], low, high, samples=8)
        if result.value < best_value:
            best_value, best_point = result.value, edge.points([result.x])[0]

    _, far = farthest(body, best_point[None, :])
    return CoverResult(SpherePoint.from_vector(best_point), float(best_value), (SpherePoint.from_vector(far[0]),))

# This function is used to list the boundary samples able to center a cap of radius rho covering the body
def cover_pivots(body: Body, rho: float | None = None, samples: int = COVER_BOUNDARY, tol: Tolerance = DEFAULT_TOLERANCE) -> list[SpherePoint]:
    """
    :param body: The body.
    :param rho: Cap radius, the thickness of the body by default.
    """
    if rho is None:
        rho, _ = thickness(body, tol)
    points = boundary_parameters(body, max(samples, len(edges_of(body)))).points
    dists, _ = farthest(body, points)
    return [SpherePoint.from_vector(p) for p in points[dists <= rho + tol.eps_claim]]


# ========================================================================================================================================================================
# Covering bounds
# ========================================================================================================================================================================

# Radius of the smallest cap around a body of constant width w <= 2 pi/3 (the Reuleaux triangle's circumcap)
def dekster_radius(w: float) -> float:
    return math.asin(DEKSTER_FACTOR * math.sin(w / 2.0))

# Covering radius for constant width w >= pi/2
def wide_constant_width_radius(w: float) -> float:
    return w + math.asin(DEKSTER_FACTOR * math.cos(w / 2.0)) - HALF_PI

# Covering radius for reduced bodies of thickness at most pi/2
def reduced_radius(thickness: float) -> float:
    return math.atan(math.sqrt(2.0) * math.tan(thickness / 2.0))

# This function is used to compare the smallest enclosing cap with the covering bounds of the body's regime
def covering_bound_report(body: Body, assume_reduced: bool = False, tol: Tolerance = DEFAULT_TOLERANCE) -> BoundReport:
    """
    :param body: The body.
    :param assume_reduced: Treat the body as reduced without the polygon certificate.
    """
    width, _ = thickness(body, tol)
    bounds: dict[str, float] = {}
    if is_constant_width(body, width, tol.eps_claim):
        regime = "constant-width"
        if width <= 2.0 * math.pi / 3.0 + 1e-12:
            bounds["dekster"] = dekster_radius(width)
        if width >= HALF_PI - 1e-12:
            bounds["wide-constant-width"] = wide_constant_width_radius(width)
        if width <= HALF_PI:
            bounds["reduced"] = reduced_radius(width)
    elif width <= HALF_PI and (
        assume_reduced or (isinstance(body, ConvexPolygon) and reducedness_certificate(body, tolerance=tol).certified)
    ):
        regime = "reduced"
        bounds["reduced"] = reduced_radius(width)
    else:
        raise RegimeUnknown(f"thickness {width:.9g}: neither of constant width nor certified reduced")

    report = BoundReport(regime, width, min_enclosing_cap(body, tol=tol).radius, bounds)
    logger.info(f"covering bound ({regime}): measured {report.measured:.9g}, bound {report.bound:.9g}, slack {report.slack:.3g}")
    return report
