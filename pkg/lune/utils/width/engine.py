from __future__ import annotations

import math
import logging
import numpy as np
from dataclasses import dataclass
from utils.bodies import (
    Body,
    ConvexPolygon,
    Edge,
    boundary_parameters,
    edges_of,
    extreme_points,
    farthest,
    supporting_poles_at,
)
from utils.errors import DiameterMismatch, NotConstantWidthOverHalfPi, NotSupporting
from utils.regions import Cap, Lune, lune_with_center
from utils.sphere import (
    DEFAULT_TOLERANCE,
    HALF_PI,
    SpherePoint,
    Tolerance,
    angles,
    local_frame,
    polar_offset,
    tangent_toward,
    walk,
)
from .optimize import scan_then_polish, scan_then_polish_max
from .polar import polar

"""
Width engine
    A hemisphere H(k) supports the body exactly when k is on the boundary of the polar
    body, and the narrowest lune H(k) n H(k') has thickness pi - |kk'| for the polar
    point k' farthest from k. So width, thickness and the constant-width test are all
    searches along the polar boundary, and diameter is a search along the body's own
    boundary of the farthest-point distance.
"""

logger = logging.getLogger("lune.width")

# ==========
# Constants
# ==========
POLAR_SCAN = 1024
BRUTE_FORCE_SAMPLES = 2000
COARSE_SAMPLES = 24
DIAMETER_ARC_SAMPLES = 64
CONSTANT_DIAMETER_SAMPLES = 512
POLE_ARC_SAMPLES = 64
CROSS_CHECK_GAP = 1e-4


# ========================================================================================================================================================================
# Types
# ========================================================================================================================================================================

@dataclass(frozen=True)
class CoSupportPair:
    k: SpherePoint
    k_star: SpherePoint # pole of the hemisphere closing the narrowest lune

    @property
    def lune(self) -> Lune:
        return Lune(self.k, self.k_star)

    def toJson(self) -> dict:
        return {"k": self.k.toJson(), "k_star": self.k_star.toJson()}


@dataclass(frozen=True)
class WidthProfile:
    samples: tuple[tuple[SpherePoint, float], ...]
    min_width: float
    argmin_pole: SpherePoint

    @property
    def max_width(self) -> float:
        return max(width for _, width in self.samples)

    def toJson(self) -> dict:
        return {
            "min_width": self.min_width,
            "max_width": self.max_width,
            "argmin_pole": self.argmin_pole.toJson(),
            "samples": len(self.samples),
        }


@dataclass(frozen=True)
class ConstantWidthVerdict:
    ok: bool
    deviation: float # largest |width_K - w| found
    worst_pole: SpherePoint

    def __bool__(self) -> bool:
        return self.ok

    def toJson(self) -> dict:
        return {"ok": self.ok, "deviation": self.deviation, "worst_pole": self.worst_pole.toJson()}


@dataclass(frozen=True)
class ConstantDiameterVerdict:
    ok: bool
    deviation: float # largest shortfall w - max distance from a boundary point
    worst_point: SpherePoint

    def __bool__(self) -> bool:
        return self.ok

    def toJson(self) -> dict:
        return {"ok": self.ok, "deviation": self.deviation, "worst_point": self.worst_point.toJson()}


# ========================================================================================================================================================================
# Width
# ========================================================================================================================================================================

# This function is used to get width_K for every supporting pole k (rows of ks), with the closing poles
def widths_at(body: Body, ks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    dists, k_stars = farthest(polar(body), ks)
    return math.pi - dists, k_stars

# This function is used to get the width of the body determined by the supporting hemisphere H(k)
def width_at(body: Body, k: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[float, CoSupportPair]:
    """
    The thickness of the narrowest lune H(k) n H(k') containing the body.

    :param body: The body.
    :param k: Pole of a hemisphere supporting the body.
    :return: (width, the pair k, k' closing the narrowest lune).
    """
    reach = float(farthest(body, k.vec[None, :])[0][0])
    if abs(reach - HALF_PI) > tol.eps_opt:
        raise NotSupporting(f"H({k}) does not support the body (farthest point at {reach})")
    widths, k_stars = widths_at(body, k.vec[None, :])
    return float(widths[0]), CoSupportPair(k, SpherePoint.from_vector(k_stars[0]))

# This function is used to sample width_K along the whole polar boundary
def width_profile(body: Body, samples: int = POLAR_SCAN) -> WidthProfile:
    dual = polar(body)
    poles = boundary_parameters(dual, max(samples, len(edges_of(dual)))).points
    widths, _ = widths_at(body, poles)
    i = int(np.argmin(widths))
    return WidthProfile(
        tuple((SpherePoint.from_vector(k), float(w)) for k, w in zip(poles, widths)),
        float(widths[i]),
        SpherePoint.from_vector(poles[i]),
    )

# This function is used to find the smallest width of the body, its thickness
def thickness(body: Body, tol: Tolerance = DEFAULT_TOLERANCE, samples: int = BRUTE_FORCE_SAMPLES) -> tuple[float, CoSupportPair]:
    """
    Every side of the polar boundary is searched with a coarse scan and a golden-section
    polish. A brute-force scan of `samples` polar boundary points cross-checks the result.

    :param body: The body.
    :param samples: Size of the brute-force scan.
    :return: (thickness, the pair of poles of a narrowest lune containing the body).
    """
    dual = polar(body)
    edges = edges_of(dual)
    best_width, best_pole = math.inf, None
    for edge in edges:
        result = scan_then_polish(lambda ts, edge=edge: widths_at(body, edge.points(ts))[0], samples=COARSE_SAMPLES, tol=tol.eps_opt * 1e-3)
        if result.value < best_width:
            best_width, best_pole = result.value, edge.points([result.x])[0]

    poles = boundary_parameters(dual, max(samples, len(edges))).points
    widths, _ = widths_at(body, poles)
    i = int(np.argmin(widths))
    if abs(widths[i] - best_width) > CROSS_CHECK_GAP:
        logger.warning(f"thickness search ({best_width:.9g}) and brute-force scan ({widths[i]:.9g}) disagree")
    if widths[i] < best_width:
        best_width, best_pole = float(widths[i]), poles[i]

    k = SpherePoint.from_vector(best_pole)
    _, k_stars = widths_at(body, best_pole[None, :])
    return float(best_width), CoSupportPair(k, SpherePoint.from_vector(k_stars[0]))


# ========================================================================================================================================================================
# Diameter
# ========================================================================================================================================================================

# This function is used to polish a boundary sample by maximizing f along its edge
def _polish_on_edge(f, edges: tuple[Edge, ...], index: int, t: float, h: float) -> tuple[float, np.ndarray]:
    best_value, best_point = -math.inf, None
    windows = [(edges[index], max(t - h, 0.0), min(t + h, 1.0))]
    if t <= 0.0:
        windows.append((edges[index - 1], 1.0 - h, 1.0))
    for edge, low, high in windows:
        result = scan_then_polish_max(lambda ts, edge=edge: f(edge.points(ts)), low, high, samples=8)
        if result.value > best_value:
            best_value, best_point = result.value, edge.points([result.x])[0]
    return best_value, best_point

# This function is used to get the diameter of the body and a pair of points realizing it
def diameter(body: Body, arc_samples: int = DIAMETER_ARC_SAMPLES) -> tuple[float, tuple[SpherePoint, SpherePoint]]:
    """
    Caps are closed form. Polygons of diameter at most pi/2 reach it at two vertices.
    Otherwise the distance to the farthest point of the body is maximized along the
    boundary, from samples on every side and a golden-section polish.

    :param body: The body.
    :param arc_samples: Boundary samples per side before the polish.
    :return: (diameter, (p, q)) with |pq| the diameter.
    """
    if isinstance(body, Cap):
        frame = local_frame(body.center.vec)
        p = polar_offset(body.center.vec, body.radius, 0.0, frame)
        q = polar_offset(body.center.vec, body.radius, math.pi, frame)
        return 2.0 * body.radius, (SpherePoint.from_vector(p), SpherePoint.from_vector(q))

    if isinstance(body, ConvexPolygon):
        vs = body.vertex_array
        pairs = angles(vs[:, None, :], vs[None, :, :])
        i, j = np.unravel_index(int(np.argmax(pairs)), pairs.shape)
        if pairs[i, j] <= HALF_PI:
            return float(pairs[i, j]), (body.vertices[i], body.vertices[j])

    edges = edges_of(body)
    sample = boundary_parameters(body, arc_samples * len(edges))
    dists, _ = farthest(body, sample.points)
    i = int(np.argmax(dists))
    index = int(sample.edge_index[i])
    h = 1.0 / np.count_nonzero(sample.edge_index == index)
    value, point = _polish_on_edge(lambda xs: farthest(body, xs)[0], edges, index, float(sample.t[i]), h)
    if value < dists[i]:
        value, point = float(dists[i]), sample.points[i]
    _, partner = farthest(body, point[None, :])
    return float(value), (SpherePoint.from_vector(point), SpherePoint.from_vector(partner[0]))

# This function is used to get the diameter of the set of extreme points
def diameter_of_extreme_points(body: Body, per_arc: int = DIAMETER_ARC_SAMPLES) -> tuple[float, tuple[SpherePoint, SpherePoint]]:
    if isinstance(body, Cap):
        return diameter(body)
    points = extreme_points(body, per_arc)
    pairs = angles(points[:, None, :], points[None, :, :])
    i, j = np.unravel_index(int(np.argmax(pairs)), pairs.shape)
    return float(pairs[i, j]), (SpherePoint.from_vector(points[i]), SpherePoint.from_vector(points[j]))


# ========================================================================================================================================================================
# Constant width / constant diameter
# ========================================================================================================================================================================

# This function is used to test width_K = w over a deterministic scan of the polar boundary
def is_constant_width(body: Body, w: float, tol: float, samples: int = POLAR_SCAN) -> ConstantWidthVerdict:
    """
    :param body: The body.
    :param w: The expected width.
    :param tol: Largest accepted deviation.
    :param samples: Poles scanned before refining near the worst one.
    """
    dual = polar(body)
    edges = edges_of(dual)
    sample = boundary_parameters(dual, max(samples, len(edges)))
    widths, _ = widths_at(body, sample.points)
    deviation = np.abs(widths - w)
    i = int(np.argmax(deviation))
    index = int(sample.edge_index[i])
    h = 1.0 / np.count_nonzero(sample.edge_index == index)
    value, pole = _polish_on_edge(lambda ks: np.abs(widths_at(body, ks)[0] - w), edges, index, float(sample.t[i]), h)
    if value < deviation[i]:
        value, pole = float(deviation[i]), sample.points[i]
    return ConstantWidthVerdict(bool(value <= tol), float(value), SpherePoint.from_vector(pole))

# This function is used to test that every boundary point has a partner at distance w
def is_constant_diameter(body: Body, w: float, tol: float, samples: int = CONSTANT_DIAMETER_SAMPLES) -> ConstantDiameterVerdict:
    """
    :param body: The body, of diameter w.
    :param w: The expected diameter.
    :param tol: Largest accepted shortfall.
    """
    value, _ = diameter(body)
    if abs(value - w) > tol:
        raise DiameterMismatch(f"diameter is {value:.9g}, not {w:.9g}")
    points = boundary_parameters(body, max(samples, len(edges_of(body)))).points
    dists, _ = farthest(body, points)
    shortfall = w - dists
    i = int(np.argmax(shortfall))
    worst = max(float(shortfall[i]), 0.0)
    return ConstantDiameterVerdict(worst <= tol, worst, SpherePoint.from_vector(points[i]))


# ========================================================================================================================================================================
# Lunes through boundary points, touching balls
# ========================================================================================================================================================================

# This function is used to find the best lune of thickness `width` containing the body with p as a semicircle center
def lune_through_point(body: Body, p: SpherePoint, width: float, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[Lune, float]:
    """
    The hemisphere H(k) runs over the hemispheres supporting the body at p and H(k') is
    the unique partner making p the center of the semicircle on bd(H(k)). The search
    maximizes the slack pi/2 - (distance from k' to its farthest body point), which is
    nonnegative exactly when the lune contains the body.

    :param body: The body.
    :param p: A boundary point.
    :param width: Thickness of the lune, in (0, pi).
    :return: (best lune, its slack).
    """
    poles = supporting_poles_at(body, p, tol)
    alpha = math.pi - width

    def slack(ks: np.ndarray) -> np.ndarray:
        k_stars = math.cos(alpha) * ks + math.sin(alpha) * p.vec
        return HALF_PI - farthest(body, k_stars)[0]

    if poles.is_unique:
        k = poles.first.vec
        value = float(slack(k[None, :])[0])
    else:
        arc = Edge(poles.first, poles.last)
        result = scan_then_polish_max(lambda ss: slack(arc.points(ss)), samples=POLE_ARC_SAMPLES, tol=tol.eps_opt * 1e-3)
        k, value = arc.points([result.x])[0], result.value
    return lune_with_center(SpherePoint.from_vector(k), p, width), value

# This function is used to inscribe the ball of radius w - pi/2 touching the body from inside at p
def inscribed_touching_ball(body: Body, p: SpherePoint, width: float | None = None, tol: Tolerance = DEFAULT_TOLERANCE) -> Cap:
    """
    :param body: A body of constant width w > pi/2.
    :param p: A boundary point.
    :param width: The constant width when already known; measured and checked otherwise.
    """
    if width is None:
        width, _ = thickness(body, tol)
        verdict = is_constant_width(body, width, tol.eps_claim)
        if not verdict:
            raise NotConstantWidthOverHalfPi(f"the body is not of constant width (deviation {verdict.deviation:.3g})")
    if width <= HALF_PI:
        raise NotConstantWidthOverHalfPi(f"width {width:.9g} is not above pi/2")

    k = supporting_poles_at(body, p, tol).first
    radius = width - HALF_PI
    center = walk(p.vec, tangent_toward(p.vec, k.vec), radius)
    return Cap(SpherePoint.from_vector(center), radius)
