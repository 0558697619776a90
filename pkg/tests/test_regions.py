import math
import pytest
import numpy as np
from hypothesis import given, settings, strategies as st
from strategies import lunes, sphere_points
from utils.errors import BadRadius, DegenerateLune
from utils.regions import (
    Cap,
    Hemisphere,
    Lune,
    lune_bounding_centers,
    lune_corners,
    lune_thickness,
    lune_with_center,
    region_contains,
)
from utils.sphere import SpherePoint, distance, local_frame, polar_offset


@given(lunes())
@settings(max_examples=300)
def test_thickness_is_the_distance_of_the_centers(lune):
    c_gh, c_hg = lune_bounding_centers(lune)
    assert abs(lune_thickness(lune) - distance(c_gh, c_hg)) < 1e-9

@given(lunes())
def test_centers_lie_on_their_semicircles(lune):
    c_gh, c_hg = lune_bounding_centers(lune)
    assert abs(np.dot(c_gh.vec, lune.g.vec)) < 1e-12
    assert abs(np.dot(c_hg.vec, lune.h.vec)) < 1e-12
    assert lune.contains(c_gh) and lune.contains(c_hg)

@given(lunes())
def test_corners_are_antipodal_and_on_both_boundaries(lune):
    a, b = lune_corners(lune)
    assert distance(a, b) == pytest.approx(math.pi, abs=1e-9)
    assert abs(np.dot(a.vec, lune.g.vec)) < 1e-12
    assert abs(np.dot(a.vec, lune.h.vec)) < 1e-12

def test_degenerate_lunes():
    g = SpherePoint(0.0, 0.0, 1.0)
    with pytest.raises(DegenerateLune):
        lune_thickness(Lune(g, g))
    with pytest.raises(DegenerateLune):
        lune_thickness(Lune(g, -g))

@given(sphere_points(), st.floats(min_value=0.0, max_value=2 * math.pi), st.floats(min_value=0.05, max_value=3.0))
def test_lune_with_center_puts_p_at_the_center(k, bearing, width):
    e1, e2 = local_frame(k.vec)
    p = SpherePoint.from_vector(math.cos(bearing) * e1 + math.sin(bearing) * e2)
    lune = lune_with_center(k, p, width)
    assert lune_thickness(lune) == pytest.approx(width, abs=1e-9)
    assert distance(lune_bounding_centers(lune)[0], p) < 1e-9

def test_cap_membership(north):
    cap = Cap(north, 0.5)
    assert cap.contains(SpherePoint.from_vector(polar_offset(north.vec, 0.49, 1.0)))
    assert not cap.contains(SpherePoint.from_vector(polar_offset(north.vec, 0.51, 1.0)))
    assert region_contains(cap, north)
    assert not cap.is_hemisphere
    assert cap.as_hemisphere() is None

def test_half_pi_cap_is_a_hemisphere(north):
    cap = Cap(north, math.pi / 2)
    assert cap.is_hemisphere
    assert cap.as_hemisphere() == Hemisphere(north)
    assert region_contains(Hemisphere(north), SpherePoint(1.0, 0.0, 0.0))
    assert not region_contains(Hemisphere(north), SpherePoint(1.0, 0.0, -0.1))

@pytest.mark.parametrize("radius", [0.0, -0.1, math.pi / 2 + 1e-6, 3.0])
def test_cap_radius_range(north, radius):
    with pytest.raises(BadRadius):
        Cap(north, radius)
