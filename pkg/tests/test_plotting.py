import re
import math
import pytest
from utils.bodies import on_boundary
from utils.covering import min_enclosing_cap
from utils.errors import BadParameters
from utils.plotting import FIGURE_RADIUS, make_projection, plot_body
from utils.regions import Cap, lune_bounding_centers
from utils.sphere import HALF_PI, SpherePoint, polar_offset
from utils.width import thickness


def test_reuleaux_with_cap(reuleaux_triangle):
    cap = min_enclosing_cap(reuleaux_triangle).cap
    svg = plot_body(reuleaux_triangle, cap=cap).render()
    assert svg.count('class="edge arc"') == 3
    assert svg.count('<circle class="cap"') == 1
    assert 'viewBox="0 0 1000 1000"' in svg
    # the cap is centered, so it is the 450 unit circle
    radius = float(re.search(r'<circle class="cap" cx="500.000" cy="500.000" r="([0-9.]+)"', svg).group(1))
    assert radius == pytest.approx(FIGURE_RADIUS, abs=1e-3)

def test_gnomonic_sides_are_straight(reduced_triangle):
    svg = plot_body(reduced_triangle, "gnomonic").render()
    paths = re.findall(r'<path class="edge geodesic" d="([^"]+)"', svg)
    assert len(paths) == 3
    assert all(d.count(" L ") == 1 for d in paths)

def test_orthographic_sides_are_sampled(reduced_triangle):
    svg = plot_body(reduced_triangle, "orthographic").render()
    paths = re.findall(r'<path class="edge geodesic" d="([^"]+)"', svg)
    assert len(paths) == 3
    assert all(d.count(" L ") > 1 for d in paths)

def test_plots_are_deterministic(reduced_triangle):
    _, pair = thickness(reduced_triangle)
    first = plot_body(reduced_triangle, lune=pair.lune).render()
    second = plot_body(reduced_triangle, lune=pair.lune).render()
    assert first == second

def test_lune_overlay_centers(reduced_triangle):
    _, pair = thickness(reduced_triangle)
    svg = plot_body(reduced_triangle, lune=pair.lune).render()
    assert svg.count('class="lune-center"') == 2
    assert svg.count('class="lune"') >= 2
    for center in lune_bounding_centers(pair.lune):
        assert on_boundary(reduced_triangle, center, 1e-5)

def test_everything_fits_the_figure(reuleaux_triangle):
    svg = plot_body(reuleaux_triangle, "gnomonic").render()
    for d in re.findall(r'<path class="edge arc" d="([^"]+)"', svg):
        for x, y in re.findall(r"([0-9.-]+) ([0-9.-]+)", d):
            assert math.hypot(float(x) - 500.0, float(y) - 500.0) <= FIGURE_RADIUS + 1e-3

def test_cap_body_is_a_circle(north):
    svg = plot_body(Cap(north, 0.4)).render()
    assert svg.count('<circle class="body"') == 1

def test_projection_limits(north):
    with pytest.raises(BadParameters):
        make_projection("mercator", north, 0.5)
    with pytest.raises(BadParameters):
        make_projection("gnomonic", north, HALF_PI)
    projection = make_projection("gnomonic", north, 0.5)
    point = SpherePoint.from_vector(polar_offset(north.vec, 0.5, 0.0))
    assert math.hypot(*projection.project(point.vec)[0]) == pytest.approx(FIGURE_RADIUS)

def test_save(tmp_path, reduced_triangle):
    path = tmp_path / "figures" / "triangle.svg"
    plot_body(reduced_triangle).save(str(path))
    assert path.read_text(encoding="utf-8").startswith("<?xml")
