import math
import pytest
import numpy as np
from hypothesis import given, settings, strategies as st
from strategies import point_pairs, sphere_points
from utils.errors import AntipodalEndpoints, ConfigError, DegenerateInput, DegenerateTriple
from utils.sphere import (
    GeodesicArc,
    SpherePoint,
    Tolerance,
    antipode,
    circumcircle,
    distance,
    interpolate,
    normalize,
    orient,
    polar_offset,
)


@given(sphere_points(), sphere_points())
def test_distance_is_symmetric_and_bounded(a, b):
    d = distance(a, b)
    assert 0.0 <= d <= math.pi
    assert d == pytest.approx(distance(b, a), abs=1e-12)

@given(sphere_points(), sphere_points(), sphere_points())
def test_triangle_inequality(a, b, c):
    assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-11

@given(sphere_points())
def test_antipode_is_at_pi(p):
    assert distance(p, antipode(p)) == pytest.approx(math.pi, abs=1e-12)
    assert distance(p, p) == 0.0

def test_small_distances_keep_precision():
    a = SpherePoint(1.0, 0.0, 0.0)
    b = SpherePoint(math.cos(1e-10), math.sin(1e-10), 0.0)
    assert distance(a, b) == pytest.approx(1e-10, rel=1e-6)

@given(point_pairs(), st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=50)
def test_interpolate_splits_the_arc(pair, t):
    a, b = pair
    p = interpolate(a, b, t)
    assert distance(a, p) == pytest.approx(t * distance(a, b), abs=1e-9)
    assert distance(a, p) + distance(p, b) == pytest.approx(distance(a, b), abs=1e-9)

def test_interpolate_rejects_antipodes():
    p = SpherePoint(0.0, 0.0, 1.0)
    with pytest.raises(AntipodalEndpoints):
        interpolate(p, -p, 0.5)
    with pytest.raises(AntipodalEndpoints):
        GeodesicArc(p, -p)

def test_orient_signs():
    x, y, z = SpherePoint(1, 0, 0), SpherePoint(0, 1, 0), SpherePoint(0, 0, 1)
    assert orient(x, y, z) == 1
    assert orient(y, x, z) == -1
    assert orient(x, y, SpherePoint(1, 1, 0)) == 0

def test_circumcircle_is_equidistant():
    c = SpherePoint(0.2, -0.1, 1.0)
    points = [SpherePoint.from_vector(polar_offset(c.vec, 0.7, bearing)) for bearing in (0.1, 2.0, 4.0)]
    center, radius = circumcircle(*points)
    assert radius == pytest.approx(0.7, abs=1e-9)
    assert distance(center, c) < 1e-9

def test_circumcircle_rejects_collinear_points():
    with pytest.raises(DegenerateTriple):
        circumcircle(SpherePoint(1, 0, 0), SpherePoint(1, 1, 0), SpherePoint(0, 1, 0))

def test_points_are_normalized():
    p = SpherePoint(3.0, 0.0, 4.0)
    assert np.linalg.norm(p.vec) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(DegenerateInput):
        SpherePoint(0.0, 0.0, 0.0)
    with pytest.raises(DegenerateInput):
        normalize(np.zeros(3))

def test_tolerance_ordering():
    Tolerance(1e-10, 1e-8, 1e-6)
    with pytest.raises(ConfigError):
        Tolerance(1e-6, 1e-7, 1e-5)
    with pytest.raises(ConfigError):
        Tolerance(1e-9, 1e-7, 1e-2)
