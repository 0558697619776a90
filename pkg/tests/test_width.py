import math
import logging
import pytest
import numpy as np
from utils.bodies import (
    ConvexPolygon,
    boundary_parameters,
    contains_points,
    make_quarter_disk,
    make_regular_polygon,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
    rotate_body,
    support_margin,
)
from utils.covering import boundary_centered_cover
from utils.errors import (
    BadParameters,
    BadRadius,
    DiameterMismatch,
    EmptyResult,
    NotConstantWidthOverHalfPi,
    NotSupporting,
    ThicknessTooLarge,
)
from utils.regions import Cap, lune_thickness
from utils.sphere import HALF_PI, SpherePoint, Tolerance, distance, polar_offset, random_rotation
from utils.width import (
    CERTIFIED,
    NOT_REDUCED,
    conv_of_caps,
    cut_corner,
    diameter,
    diameter_of_extreme_points,
    golden_section,
    inscribed_touching_ball,
    is_constant_diameter,
    is_constant_width,
    lune_through_point,
    polar,
    polar_rho,
    reducedness_certificate,
    scan_then_polish,
    thickness,
    width_at,
    width_profile,
)


# ========================================================================================================================================================================
# Optimizer
# ========================================================================================================================================================================

def test_golden_section_finds_the_minimum():
    result = golden_section(lambda x: (x - 0.3) ** 2, 0.0, 1.0)
    assert result.x == pytest.approx(0.3, abs=1e-6)

def test_golden_section_keeps_an_endpoint_minimum():
    result = golden_section(lambda x: x, 0.0, 1.0)
    assert result.x == 0.0
    assert result.value == 0.0

def test_golden_section_warns_at_the_iteration_cap(caplog):
    with caplog.at_level(logging.WARNING, logger="lune.width"):
        golden_section(lambda x: (x - 0.5) ** 2, 0.0, 1.0, tol=1e-12, max_iter=5)
    assert "capped" in caplog.text

def test_scan_then_polish_escapes_local_minima():
    f = lambda ts: np.cos(12 * np.asarray(ts)) + np.asarray(ts)
    result = scan_then_polish(f, 0.0, 1.0, samples=48)
    assert result.x == pytest.approx((math.pi - math.asin(1 / 12)) / 12, abs=1e-6)


# ========================================================================================================================================================================
# Width and thickness
# ========================================================================================================================================================================

@pytest.mark.parametrize("rho", [0.2, math.pi / 6, 0.7, math.pi / 4, 1.2, HALF_PI - 0.01])
def test_ball_width(north, rho):
    width, pair = thickness(Cap(north, rho))
    assert width == pytest.approx(2 * rho, abs=1e-7)
    assert lune_thickness(pair.lune) == pytest.approx(width, abs=1e-9)

def test_width_at_a_supporting_pole(north):
    k = SpherePoint.from_vector(polar_offset(north.vec, HALF_PI - 0.4, 0.3))
    width, pair = width_at(Cap(north, 0.4), k)
    assert width == pytest.approx(0.8, abs=1e-9)
    assert pair.k == k
    with pytest.raises(NotSupporting):
        width_at(Cap(north, 0.4), north)

def test_thickness_of_the_standard_bodies(reduced_triangle, quarter_disk):
    assert thickness(reduced_triangle)[0] == pytest.approx(0.8, abs=1e-6)
    assert thickness(quarter_disk)[0] == pytest.approx(math.pi / 3, abs=1e-6)

def test_narrowest_lune_contains_the_body(reduced_triangle):
    width, pair = thickness(reduced_triangle)
    lune = pair.lune
    assert lune_thickness(lune) == pytest.approx(width, abs=1e-9)
    for v in reduced_triangle.vertices:
        assert lune.contains(v, Tolerance(1e-8, 1e-7, 1e-6))

def test_width_profile(reduced_triangle):
    profile = width_profile(reduced_triangle, 512)
    assert len(profile.samples) >= 512
    assert profile.min_width >= thickness(reduced_triangle)[0] - 1e-9
    assert profile.max_width >= profile.min_width

def test_constant_width_reuleaux_triangle(reuleaux_triangle):
    verdict = is_constant_width(reuleaux_triangle, 1.0, 1e-6)
    assert verdict.ok and bool(verdict)
    assert verdict.deviation < 1e-6

@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 5])
@pytest.mark.parametrize("w", [0.6, 1.0, HALF_PI])
def test_reuleaux_constancy(north, n, w):
    body = make_reuleaux_odd_gon(north, n, w)
    assert is_constant_width(body, w, 1e-6, 1024).deviation < 1e-6
    assert diameter(body)[0] == pytest.approx(w, abs=1e-6)

def test_wide_reuleaux_triangle_has_constant_width(north):
    body = make_reuleaux_odd_gon(north, 3, 1.9)
    assert thickness(body)[0] == pytest.approx(1.9, abs=1e-6)
    assert is_constant_width(body, 1.9, 1e-6)

def test_polygons_are_not_of_constant_width(reduced_triangle):
    verdict = is_constant_width(reduced_triangle, 0.8, 1e-6)
    assert not verdict
    assert verdict.deviation > 1e-3

def test_polar_width_reciprocity(reuleaux_triangle):
    assert thickness(polar(reuleaux_triangle))[0] == pytest.approx(math.pi - 1.0, abs=1e-6)

# Dense lune scan: pi minus the farthest polar point, over every sampled pole of the polar boundary
def _lune_scan_thickness(body, samples=2000):
    poles = boundary_parameters(polar(body), samples).points
    far = np.arccos(np.clip(poles @ poles.T, -1.0, 1.0)).max(axis=1)
    return float(np.min(math.pi - far))

@pytest.mark.parametrize("make", [
    lambda c: make_quarter_disk(c, math.pi / 3),
    lambda c: make_regular_reduced_polygon(c, 5, 0.9),
    lambda c: make_reuleaux_odd_gon(c, 3, 1.0),
    lambda c: make_reuleaux_odd_gon(c, 3, 1.9),
    lambda c: Cap(c, 0.6),
])
def test_thickness_matches_the_dense_lune_scan(north, make):
    body = make(north)
    assert thickness(body)[0] == pytest.approx(_lune_scan_thickness(body), abs=1e-4)

@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 5, 7])
@pytest.mark.parametrize("delta", [0.3, 0.7, 1.1, 1.4])
def test_regular_reduced_polygons(north, n, delta):
    body = make_regular_reduced_polygon(north, n, delta)
    assert thickness(body)[0] == pytest.approx(delta, abs=1e-6)
    assert boundary_centered_cover(body).radius <= delta + 1e-6

@pytest.mark.parametrize("make", [
    lambda c: make_quarter_disk(c, 0.7),
    lambda c: make_regular_reduced_polygon(c, 5, 0.9),
    lambda c: make_reuleaux_odd_gon(c, 5, 1.2),
])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_rigid_motions_keep_thickness_and_diameter(north, make, seed):
    body = make(north)
    moved = rotate_body(body, random_rotation(np.random.default_rng(seed)))
    assert thickness(moved)[0] == pytest.approx(thickness(body)[0], abs=1e-6)
    assert diameter(moved)[0] == pytest.approx(diameter(body)[0], abs=1e-6)


# ========================================================================================================================================================================
# Diameter
# ========================================================================================================================================================================

def test_diameters(north, quarter_disk, reuleaux_triangle):
    assert diameter(Cap(north, 0.5))[0] == pytest.approx(1.0, abs=1e-12)
    assert diameter(quarter_disk)[0] == pytest.approx(math.acos(0.25), abs=1e-6)
    d, (p, q) = diameter(reuleaux_triangle)
    assert d == pytest.approx(1.0, abs=1e-6)
    assert distance(p, q) == pytest.approx(d, abs=1e-9)

def test_polygon_diameter_is_a_vertex_pair(reduced_triangle):
    d, (p, q) = diameter(reduced_triangle)
    assert p in reduced_triangle.vertices and q in reduced_triangle.vertices
    assert d == pytest.approx(reduced_triangle.edges[0].length, abs=1e-12)

def test_extreme_points_carry_the_diameter(reuleaux_triangle):
    assert diameter_of_extreme_points(reuleaux_triangle)[0] == pytest.approx(1.0, abs=1e-9)

def test_constant_diameter(reuleaux_triangle, reduced_triangle):
    assert is_constant_diameter(reuleaux_triangle, 1.0, 1e-6)
    with pytest.raises(DiameterMismatch):
        is_constant_diameter(reuleaux_triangle, 0.9, 1e-6)
    d = diameter(reduced_triangle)[0]
    assert not is_constant_diameter(reduced_triangle, d, 1e-6)

def test_quarter_disk_is_not_of_constant_diameter(quarter_disk):
    d = diameter(quarter_disk)[0]
    verdict = is_constant_diameter(quarter_disk, d, 1e-5)
    assert not verdict.ok
    assert verdict.deviation > 1e-2


# ========================================================================================================================================================================
# Polar bodies
# ========================================================================================================================================================================

def test_polar_rho_of_points_and_caps(north):
    assert polar_rho(north, 0.4) == Cap(north, 0.4)
    assert polar_rho(Cap(north, 0.3), 1.0).radius == pytest.approx(0.7)
    with pytest.raises(EmptyResult):
        polar_rho(Cap(north, 0.5), 0.4)
    with pytest.raises(BadRadius):
        polar_rho(north, 2.0)

def test_polar_rho_of_a_triangle_is_the_reuleaux_triangle(reuleaux_triangle):
    triangle = ConvexPolygon(reuleaux_triangle.vertices)
    body = polar_rho(triangle, 1.0)
    assert len(body.edges) == 3
    for v in body.vertices:
        assert min(distance(v, u) for u in reuleaux_triangle.vertices) < 1e-7

def test_polar_rho_at_half_pi_is_the_polar(reduced_triangle):
    assert polar_rho(reduced_triangle, HALF_PI) == polar(reduced_triangle)

def test_hull_of_one_cap(north):
    hull = conv_of_caps([Cap(north, 0.3)])
    assert hull.radius == pytest.approx(0.3, abs=1e-12)


# ========================================================================================================================================================================
# Lunes through points, touching balls, certificate
# ========================================================================================================================================================================

def test_lune_through_a_cap_boundary_point(north):
    cap = Cap(north, 0.5)
    p = SpherePoint.from_vector(polar_offset(north.vec, 0.5, 1.0))
    lune, slack = lune_through_point(cap, p, 1.0)
    assert slack == pytest.approx(0.0, abs=1e-7)
    assert lune_thickness(lune) == pytest.approx(1.0, abs=1e-9)

def test_lune_through_a_vertex_of_a_reduced_polygon(reduced_triangle):
    width = thickness(reduced_triangle)[0]
    for v in reduced_triangle.vertices:
        assert lune_through_point(reduced_triangle, v, width)[1] >= -1e-6

def test_touching_ball_inside_a_wide_body(north):
    body = make_reuleaux_odd_gon(north, 3, 1.9)
    p = body.edges[0].point(0.5)
    ball = inscribed_touching_ball(body, p, width=1.9)
    assert ball.radius == pytest.approx(1.9 - HALF_PI)
    assert distance(ball.center, p) == pytest.approx(ball.radius, abs=1e-9)
    rim = np.array([polar_offset(ball.center.vec, ball.radius, b) for b in np.linspace(0, 2 * math.pi, 64)])
    assert np.min(support_margin(body, rim)) >= -1e-7
    assert contains_points(body, ball.center.vec[None, :]).all()

def test_touching_ball_needs_width_over_half_pi(reuleaux_triangle):
    with pytest.raises(NotConstantWidthOverHalfPi):
        inscribed_touching_ball(reuleaux_triangle, reuleaux_triangle.vertices[0])

def test_touching_ball_needs_constant_width(reduced_triangle):
    with pytest.raises(NotConstantWidthOverHalfPi):
        inscribed_touching_ball(reduced_triangle, reduced_triangle.vertices[0])

def test_certificate_accepts_a_regular_reduced_triangle(reduced_triangle):
    report = reducedness_certificate(reduced_triangle)
    assert report.verdict == CERTIFIED
    assert report.thickness == pytest.approx(0.8, abs=1e-6)
    assert min(report.thickness_drop) > 1e-4
    assert report.toJson()["verdict"] == CERTIFIED

def test_certificate_rejects_a_square(north):
    report = reducedness_certificate(make_regular_polygon(north, 4, 0.5))
    assert report.verdict == NOT_REDUCED
    assert not report.falsification_ok
    assert not report.necessary_ok
    assert min(report.vertex_slack) < 0
    assert report.toJson()["necessary"]["ok"] is False

def test_certificate_limits(north, reuleaux_triangle):
    with pytest.raises(BadParameters):
        reducedness_certificate(reuleaux_triangle)
    with pytest.raises(ThicknessTooLarge):
        reducedness_certificate(make_regular_polygon(north, 6, 1.4))

def test_cut_corner_adds_a_vertex(reduced_triangle):
    cut = cut_corner(reduced_triangle, 0)
    assert len(cut.vertices) == 4
    assert thickness(cut)[0] < 0.8 - 1e-4
