from __future__ import annotations

import math
import numpy as np
from typing import Iterator
from utils.bodies import (
    Body,
    boundary_parameters,
    edges_of,
    is_smooth,
    is_strictly_convex,
    make_cap,
    make_quarter_disk,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
    support_margin,
    supporting_poles_at,
)
from utils.covering import boundary_centered_cover, covering_bound_report, dekster_radius, reduced_radius
from utils.errors import NotOnBoundary
from utils.regions import Cap, Lune, lune_bounding_centers
from utils.sphere import HALF_PI, SpherePoint, Tolerance, angles, distance, polar_offset, random_unit_vectors, walk, tangent_toward
from utils.width import (
    conv_of_caps,
    diameter,
    inscribed_touching_ball,
    is_constant_diameter,
    is_constant_width,
    lune_through_point,
    polar,
    thickness,
    width_at,
)
from .registry import register_suite

"""
Suites
    One suite per claim. Cases are drawn from the seeded rng; bodies are placed by random
    rigid motions (random center and orientation). A case yields 0 when the claim holds
    and the size of the failure otherwise; boolean claims fail with 1.
"""

# ==========
# Constants
# ==========
BOUNDARY_CHECKS = 64
BALL_SAMPLES = 200
BOOLEAN_FAILURE = 1.0


# ========================================================================================================================================================================
# Generators
# ========================================================================================================================================================================

def _random_point(rng: np.random.Generator) -> SpherePoint:
    return SpherePoint.from_vector(random_unit_vectors(rng, 1)[0])

def _orientation(rng: np.random.Generator) -> float:
    return float(rng.uniform(0.0, 2.0 * math.pi))

# This function is used to draw a regular reduced polygon at a random place
def _reduced_polygon(rng: np.random.Generator, low: float, high: float, sizes: tuple[int, ...] = (3, 5, 7)):
    n = int(rng.choice(sizes))
    width = float(rng.uniform(low, high))
    return make_regular_reduced_polygon(_random_point(rng), n, width, _orientation(rng))

# This function is used to draw the constant-width bodies of width w: a cap, and Reuleaux polygons where they exist
def _constant_width_bodies(rng: np.random.Generator, w: float) -> Iterator[Body]:
    if w < math.pi:
        yield make_cap(_random_point(rng), w / 2.0)
    if w <= 2.0 * math.pi / 3.0:
        yield make_reuleaux_odd_gon(_random_point(rng), 3, w, _orientation(rng))
    if w <= HALF_PI:
        yield make_reuleaux_odd_gon(_random_point(rng), 5, w, _orientation(rng))

def _boundary_points(body: Body, count: int = BOUNDARY_CHECKS) -> np.ndarray:
    return boundary_parameters(body, max(count, len(edges_of(body)))).points

def _flag(holds: bool) -> float:
    return 0.0 if holds else BOOLEAN_FAILURE

# Position of a boundary point along the edge cycle: edge index plus parameter
def _boundary_position(body: Body, p: SpherePoint) -> float:
    for i, edge in enumerate(edges_of(body)):
        t = edge.locate(p, 1e-9)
        if t is not None:
            return i + t
    raise NotOnBoundary(f"{p} is not on the boundary")


# ========================================================================================================================================================================
# Reduced bodies
# ========================================================================================================================================================================

@register_suite("T_I_main", cases=20)
def adjacent_minimal_lunes(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    Two neighbouring narrowest lunes M1 n M1*, M2 n M2* of a reduced polygon: the four
    semicircle centers lie on the boundary and |a1a2| = |b1b2|.
    """
    for _ in range(cases):
        polygon = _reduced_polygon(rng, 0.3, 1.3, sizes=(3, 5))
        width, _ = thickness(polygon, tol)
        dual = polar(polygon)

        # narrowest lunes close at the polar vertices and at their co-support poles
        minimal = []
        for k in dual.vertices:
            w, pair = width_at(polygon, k, tol)
            if abs(w - width) <= tol.eps_claim:
                minimal.extend([pair.k, pair.k_star])
        positions = sorted((_boundary_position(dual, k), k) for k in minimal)
        distinct = positions[:1] + [item for prev, item in zip(positions, positions[1:]) if item[0] - prev[0] > 1e-7]
        if len(distinct) < 2:
            yield BOOLEAN_FAILURE
            continue
        first, second = distinct[0][1], distinct[1][1]

        violation = 0.0
        centers = []
        for k in (first, second):
            w, pair = width_at(polygon, k, tol)
            a, b = lune_bounding_centers(Lune(pair.k, pair.k_star), tol)
            margins = support_margin(polygon, np.array([a.vec, b.vec]))
            violation = max(violation, abs(w - width), float(np.max(np.abs(margins))))
            centers.append((a, b))
        (a1, b1), (a2, b2) = centers
        yield max(violation, abs(distance(a1, a2) - distance(b1, b2)))

@register_suite("T_I_segment", cases=20)
def side_lunes(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    The width determined by a side of a reduced polygon is its thickness and the center
    of the semicircle on that side belongs to the side.
    """
    for _ in range(cases):
        polygon = _reduced_polygon(rng, 0.2, 1.4)
        width, _ = thickness(polygon, tol)
        violation = 0.0
        for edge in polygon.edges:
            w, pair = width_at(polygon, SpherePoint.from_vector(edge.pole), tol)
            center, _ = lune_bounding_centers(pair.lune, tol)
            off_circle = abs(float(np.dot(center.vec, edge.pole)))
            overshoot = distance(edge.start, center) + distance(center, edge.end) - edge.length
            violation = max(violation, abs(w - width), off_circle, max(overshoot, 0.0))
        yield violation

@register_suite("T_I_constant", cases=10)
def wide_caps(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    Caps of thickness at least pi/2 are of constant width, and wide constant-width bodies
    have a unique supporting hemisphere at every boundary point.
    """
    for i in range(cases):
        rho = float(rng.uniform(math.pi / 4.0, HALF_PI - 0.01))
        cap = make_cap(_random_point(rng), rho)
        violation = is_constant_width(cap, 2.0 * rho, tol.eps_claim).deviation
        violation = max(violation, _flag(is_smooth(cap)))
        if i % 2 == 0:
            w = float(rng.uniform(HALF_PI + 0.05, 2.0 * math.pi / 3.0 - 0.05))
            wide = make_reuleaux_odd_gon(_random_point(rng), 3, w, _orientation(rng))
            unique = all(supporting_poles_at(wide, SpherePoint.from_vector(p), tol).is_unique for p in _boundary_points(wide))
            violation = max(violation, _flag(is_smooth(wide) and unique))
        yield violation

@register_suite("T_I_strict", cases=10)
def strict_convexity(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    A reduced body of thickness below pi/2 is of constant width exactly when it is
    strictly convex: reduced polygons are neither, Reuleaux polygons are both.
    """
    for _ in range(cases):
        polygon = _reduced_polygon(rng, 0.3, 1.3)
        width, _ = thickness(polygon, tol)
        violation = _flag(not is_constant_width(polygon, width, tol.eps_claim) and not is_strictly_convex(polygon))

        n = int(rng.choice((3, 5)))
        w = float(rng.uniform(0.4, HALF_PI - 0.05))
        reuleaux = make_reuleaux_odd_gon(_random_point(rng), n, w, _orientation(rng))
        verdict = is_constant_width(reuleaux, w, tol.eps_claim)
        yield max(violation, verdict.deviation, _flag(is_strictly_convex(reuleaux)))

@register_suite("T_I_lune_at_p", cases=6)
def lunes_at_boundary_points(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    Every boundary point of a body of constant width w is the center of a semicircle of
    some lune of thickness w containing the body.
    """
    widths = (0.6, 1.0, 1.4, 1.8)
    for i in range(cases):
        w = widths[i % len(widths)]
        violation = 0.0
        for body in _constant_width_bodies(rng, w):
            for p in _boundary_points(body):
                _, slack = lune_through_point(body, SpherePoint.from_vector(p), w, tol)
                violation = max(violation, -slack)
        yield violation


# ========================================================================================================================================================================
# Constant width
# ========================================================================================================================================================================

@register_suite("T_II_convexhull", cases=50)
def shifted_balls(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    For x1, x2 at distance pi/2 from o and x on the arc x1x2, the ball B_mu(x') lies in
    conv(B_mu(x1') u B_mu(x2')), y' being the point of the arc oy at distance mu from y.
    """
    for _ in range(cases):
        o = _random_point(rng).vec
        mu = float(rng.uniform(0.05, 1.2))
        bearing = _orientation(rng)
        spread = float(rng.uniform(0.2, math.pi - mu - 0.2))
        x1 = polar_offset(o, HALF_PI, bearing)
        x2 = polar_offset(o, HALF_PI, bearing + spread)
        x = walk(x1, tangent_toward(x1, x2), float(rng.uniform(0.0, 1.0)) * float(angles(x1, x2)))

        def shifted(y: np.ndarray) -> SpherePoint:
            return SpherePoint.from_vector(walk(y, tangent_toward(y, o), mu))

        hull = conv_of_caps([Cap(shifted(x1), mu), Cap(shifted(x2), mu)], tol)
        ring = boundary_parameters(Cap(shifted(x), mu), BALL_SAMPLES).points
        yield max(float(np.max(-support_margin(hull, ring))), 0.0)

@register_suite("T_II_touching", cases=4)
def touching_balls(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    A body of constant width w > pi/2 holds the ball of radius w - pi/2 touching it from
    inside at any boundary point p, with |pp'| = w - pi/2.
    """
    for i in range(cases):
        if i % 2 == 0:
            w = float(rng.uniform(1.65, 2.0))
            body = make_reuleaux_odd_gon(_random_point(rng), 3, w, _orientation(rng))
        else:
            w = 2.0 * float(rng.uniform(0.8, 1.2))
            body = make_cap(_random_point(rng), w / 2.0)
        violation = 0.0
        for p in _boundary_points(body):
            point = SpherePoint.from_vector(p)
            ball = inscribed_touching_ball(body, point, w, tol)
            ring = boundary_parameters(ball, BALL_SAMPLES).points
            violation = max(
                violation,
                abs(distance(point, ball.center) - (w - HALF_PI)),
                float(np.max(-support_margin(body, ring))),
            )
        yield violation

@register_suite("T_II_diam_w", cases=8)
def constant_width_diameter(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    A body of constant width w has diameter w.
    """
    for _ in range(cases):
        w = float(rng.uniform(0.3, 2.0))
        yield max(abs(diameter(body)[0] - w) for body in _constant_width_bodies(rng, w))

@register_suite("T_II_iff", cases=6)
def width_and_diameter(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    Constant width w implies constant diameter w; for w >= pi/2 the two are equivalent.
    """
    widths = (0.8, HALF_PI, 1.8)
    for i in range(cases):
        w = widths[i % len(widths)]
        violation = 0.0
        for body in _constant_width_bodies(rng, w):
            cd = is_constant_diameter(body, w, 1e-5)
            cw = is_constant_width(body, w, 1e-5)
            violation = max(violation, cd.deviation if cw else _flag(cd.ok == cw.ok))
        # a quarter-disk is of neither constant diameter nor constant width
        quarter = make_quarter_disk(_random_point(rng), float(rng.uniform(0.3, 1.3)), _orientation(rng))
        d, _ = diameter(quarter)
        q_width, _ = thickness(quarter, tol)
        neither = not is_constant_diameter(quarter, d, 1e-5).ok and not is_constant_width(quarter, q_width, 1e-5).ok
        yield max(violation, _flag(neither))


# ========================================================================================================================================================================
# Diameter and covering
# ========================================================================================================================================================================

@register_suite("T_III_diam_bound", cases=50)
def diameter_bound(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    A reduced body has diameter at most arccos(cos^2 thickness), with equality for the
    quarter-disk.
    """
    for i in range(cases):
        polygon = _reduced_polygon(rng, 0.2, 1.4)
        width, _ = thickness(polygon, tol)
        violation = max(diameter(polygon)[0] - math.acos(math.cos(width) ** 2), 0.0)
        if i % 10 == 0:
            quarter = make_quarter_disk(_random_point(rng), float(rng.uniform(0.2, 1.4)), _orientation(rng))
            q_width, _ = thickness(quarter, tol)
            violation = max(violation, abs(diameter(quarter)[0] - math.acos(math.cos(q_width) ** 2)))
        yield violation

@register_suite("T_III_precise", cases=12)
def half_pi_threshold(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    Reduced bodies of thickness below pi/2 have diameter below pi/2; those of thickness
    at least pi/2 have diameter equal to their thickness.
    """
    for i in range(cases):
        if i % 3 == 0:
            body = _reduced_polygon(rng, 0.2, 1.5)
        elif i % 3 == 1:
            body = make_quarter_disk(_random_point(rng), float(rng.uniform(0.2, 1.5)), _orientation(rng))
        else:
            w = float(rng.uniform(HALF_PI, 2.0 * math.pi / 3.0))
            body = make_reuleaux_odd_gon(_random_point(rng), 3, w, _orientation(rng)) if i % 2 else make_cap(_random_point(rng), w / 2.0)
        width, _ = thickness(body, tol)
        d, _ = diameter(body)
        yield _flag(d < HALF_PI) if width < HALF_PI else abs(d - width)

@register_suite("T_IV_bounds", cases=8)
def covering_bounds(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    Smallest enclosing caps against the covering radii: Dekster's for constant width up
    to 2 pi/3, the wide bound from pi/2 on, arctan(sqrt2 tan(thickness/2)) for reduced
    bodies; the first and the last are attained.
    """
    corpus = [
        ("reuleaux", 0.6),
        ("reuleaux", 1.0),
        ("reuleaux", HALF_PI),
        ("reuleaux", 1.8),
        ("polygon", 0.7),
        ("quarter", 0.4),
        ("quarter", 0.8),
        ("quarter", 1.2),
    ]
    for kind, w in corpus[:cases]:
        center, orientation = _random_point(rng), _orientation(rng)
        if kind == "reuleaux":
            report = covering_bound_report(make_reuleaux_odd_gon(center, 3, w, orientation), tol=tol)
            sharp = abs(report.measured - dekster_radius(w)) if w <= HALF_PI else 0.0
        elif kind == "polygon":
            report = covering_bound_report(make_regular_reduced_polygon(center, 5, w, orientation), tol=tol)
            sharp = 0.0
        else:
            report = covering_bound_report(make_quarter_disk(center, w, orientation), assume_reduced=True, tol=tol)
            sharp = abs(report.measured - reduced_radius(w))
        yield max(report.measured - report.bound, sharp, 0.0)

@register_suite("T_IV_dual", cases=8)
def polar_width(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    The polar of a body of constant width w is of constant width pi - w.
    """
    for _ in range(cases):
        w = float(rng.uniform(0.3, HALF_PI - 0.05))
        dual = polar(make_reuleaux_odd_gon(_random_point(rng), 3, w, _orientation(rng)))
        width, _ = thickness(dual, tol)
        yield max(abs(width - (math.pi - w)), is_constant_width(dual, math.pi - w, tol.eps_claim).deviation)

@register_suite("T_V_cover", cases=20)
def boundary_covers(rng: np.random.Generator, cases: int, tol: Tolerance) -> Iterator[float]:
    """
    A reduced polygon lies in a cap of radius equal to its thickness centered at one of
    its boundary points.
    """
    for _ in range(cases):
        polygon = _reduced_polygon(rng, 0.3, 1.4)
        width, _ = thickness(polygon, tol)
        yield max(boundary_centered_cover(polygon).radius - width, 0.0)
