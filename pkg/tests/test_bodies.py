import json
import math
import pytest
import numpy as np
from utils.bodies import (
    BodyDocument,
    ConvexPolygon,
    DiskPolygon,
    body_contains,
    boundary_sample,
    contains_points,
    convex_hull,
    document_from_body,
    dual_body,
    extreme_points,
    intersect_caps,
    is_smooth,
    is_strictly_convex,
    load_document,
    make_cap,
    make_equilateral_triangle,
    make_quarter_disk,
    make_regular_polygon,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
    on_boundary,
    open_hemisphere_witness,
    regular_reduced_circumradius,
    rotate_body,
    save_document,
    supporting_poles_at,
)
from utils.errors import (
    BadParameters,
    BadRadius,
    BadThickness,
    DegenerateInput,
    NotInOpenHemisphere,
    SchemaError,
)
from utils.regions import Cap
from utils.sphere import HALF_PI, SpherePoint, distance, polar_offset, random_rotation


# ========================================================================================================================================================================
# Constructors
# ========================================================================================================================================================================

def test_quarter_disk_edges(north):
    body = make_quarter_disk(north, 1.0)
    assert isinstance(body, DiskPolygon)
    assert [edge.is_arc for edge in body.edges] == [False, True, False]
    assert body.edges[1].arc_radius == 1.0
    assert distance(north, body.edges[1].start) == pytest.approx(1.0, abs=1e-12)

@pytest.mark.parametrize("thickness", [0.0, HALF_PI, 2.0])
def test_quarter_disk_thickness_range(north, thickness):
    with pytest.raises(BadThickness):
        make_quarter_disk(north, thickness)

@pytest.mark.parametrize("n", [3, 5, 7])
@pytest.mark.parametrize("w", [0.6, 1.0, HALF_PI])
def test_reuleaux_sides_are_arcs_of_radius_w(north, n, w):
    body = make_reuleaux_odd_gon(north, n, w)
    assert len(body.edges) == n
    assert all(edge.is_arc and edge.arc_radius == pytest.approx(w) for edge in body.edges)
    assert distance(body.vertices[0], body.vertices[(n + 1) // 2]) == pytest.approx(w, abs=1e-12)

def test_wide_reuleaux_triangle_mixes_arcs_and_segments(north):
    body = make_reuleaux_odd_gon(north, 3, 1.9)
    assert isinstance(body, DiskPolygon)
    arcs = [edge for edge in body.edges if edge.is_arc]
    assert len(arcs) == 3
    assert all(edge.arc_radius == pytest.approx(1.9 - HALF_PI, abs=1e-12) for edge in arcs)

@pytest.mark.parametrize("n, w", [(4, 1.0), (1, 1.0), (5, 1.7), (3, 2.2), (3, 0.0)])
def test_reuleaux_parameters(north, n, w):
    with pytest.raises(BadParameters):
        make_reuleaux_odd_gon(north, n, w)

@pytest.mark.parametrize("n", [3, 5, 9])
@pytest.mark.parametrize("thickness", [0.3, 0.8, 1.4])
def test_regular_reduced_circumradius_solves_the_equation(n, thickness):
    r = regular_reduced_circumradius(n, thickness)
    assert r + math.atan(math.tan(r) * math.cos(math.pi / n)) == pytest.approx(thickness, abs=1e-12)

def test_regular_reduced_polygon_rejects_bad_parameters(north):
    with pytest.raises(BadParameters):
        make_regular_reduced_polygon(north, 4, 0.8)
    with pytest.raises(BadThickness):
        make_regular_reduced_polygon(north, 3, HALF_PI)

def test_equilateral_triangle_side(north):
    body = make_equilateral_triangle(north, 0.9)
    for edge in body.edges:
        assert edge.length == pytest.approx(0.9, abs=1e-12)

def test_regular_polygon_radius(north):
    with pytest.raises(BadRadius):
        make_regular_polygon(north, 4, HALF_PI)
    with pytest.raises(BadParameters):
        make_regular_polygon(north, 2, 0.5)

def test_make_cap(north):
    assert make_cap(north, 0.4) == Cap(north, 0.4)
    with pytest.raises(BadRadius):
        make_cap(north, 0.0)

def test_polygon_must_be_counterclockwise(north):
    body = make_regular_polygon(north, 5, 0.6)
    with pytest.raises(DegenerateInput):
        ConvexPolygon(tuple(reversed(body.vertices)))


# ========================================================================================================================================================================
# Hulls and cap intersections
# ========================================================================================================================================================================

def test_hull_drops_interior_points(north):
    corners = [SpherePoint.from_vector(polar_offset(north.vec, 0.5, k * HALF_PI)) for k in range(4)]
    inside = [north, SpherePoint.from_vector(polar_offset(north.vec, 0.1, 0.3))]
    hull = convex_hull(corners + inside)
    assert len(hull.vertices) == 4
    for corner in corners:
        assert min(distance(corner, v) for v in hull.vertices) < 1e-9

@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_hull_is_idempotent(north, seed):
    rng = np.random.default_rng(seed)
    points = [SpherePoint.from_vector(polar_offset(north.vec, r, b)) for r, b in zip(rng.uniform(0.0, 1.0, 40), rng.uniform(0.0, 2 * math.pi, 40))]
    hull = convex_hull(points)
    again = convex_hull(list(hull.vertices))
    assert len(again.vertices) == len(hull.vertices)
    for v in hull.vertices:
        assert min(distance(v, u) for u in again.vertices) < 1e-9

def test_hull_needs_an_open_hemisphere():
    points = [SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0), SpherePoint(0, 1, 0), SpherePoint(0, 0, 1)]
    with pytest.raises(NotInOpenHemisphere):
        convex_hull(points)

def test_open_hemisphere_witness(rng):
    points = np.array([polar_offset(np.array([0.0, 0.0, 1.0]), 1.2, b) for b in rng.uniform(0, 2 * math.pi, 20)])
    pole = open_hemisphere_witness(points)
    assert np.all(points @ pole > 0.0)

def test_intersection_of_nested_caps_is_the_smaller_cap(north):
    small = Cap(north, 0.2)
    assert intersect_caps([Cap(north, 1.0), small]) == small

def test_intersection_of_vertex_caps_is_the_reuleaux_triangle(north):
    reference = make_reuleaux_odd_gon(north, 3, 1.0)
    body = intersect_caps([Cap(v, 1.0) for v in reference.vertices])
    assert len(body.edges) == 3
    for v in body.vertices:
        assert min(distance(v, u) for u in reference.vertices) < 1e-7


# ========================================================================================================================================================================
# Geometry queries
# ========================================================================================================================================================================

def test_membership(reuleaux_triangle, north):
    assert body_contains(reuleaux_triangle, north)
    assert not body_contains(reuleaux_triangle, -north)
    assert contains_points(reuleaux_triangle, reuleaux_triangle.vertex_array).all()

def test_boundary_sample_is_on_the_boundary(reuleaux_triangle):
    points = boundary_sample(reuleaux_triangle, 60)
    assert len(points) == 60
    assert all(on_boundary(reuleaux_triangle, p) for p in points)
    assert not on_boundary(reuleaux_triangle, SpherePoint(0.0, 0.0, 1.0))

def test_supporting_poles_at_a_corner_and_on_an_arc(reuleaux_triangle):
    corner = supporting_poles_at(reuleaux_triangle, reuleaux_triangle.vertices[0])
    assert not corner.is_unique
    side = supporting_poles_at(reuleaux_triangle, reuleaux_triangle.edges[0].point(0.5))
    assert side.is_unique

def test_shape_predicates(north, reuleaux_triangle, reduced_triangle):
    assert is_smooth(Cap(north, 0.5))
    assert is_strictly_convex(Cap(north, 0.5))
    assert not is_smooth(reuleaux_triangle)
    assert is_strictly_convex(reuleaux_triangle)
    assert not is_strictly_convex(reduced_triangle)
    assert is_smooth(make_reuleaux_odd_gon(north, 3, 1.9))

def test_extreme_points(reuleaux_triangle, reduced_triangle):
    assert len(extreme_points(reduced_triangle)) == 3
    points = extreme_points(reuleaux_triangle, per_arc=4)
    assert points.shape == (3 + 3 * 4, 3)
    assert all(on_boundary(reuleaux_triangle, SpherePoint.from_vector(p)) for p in points)

def test_polar_of_a_cap(north):
    assert dual_body(Cap(north, 0.3)) == Cap(north, HALF_PI - 0.3)
    with pytest.raises(NotInOpenHemisphere):
        dual_body(Cap(north, HALF_PI))

def test_polar_of_a_polygon_is_a_polygon(reduced_triangle):
    dual = dual_body(reduced_triangle)
    assert isinstance(dual, ConvexPolygon)
    again = dual_body(dual)
    for v in reduced_triangle.vertices:
        assert min(distance(v, u) for u in again.vertices) < 1e-9

def test_rotation_keeps_distances(reduced_triangle, rng):
    moved = rotate_body(reduced_triangle, random_rotation(rng))
    a, b = reduced_triangle.vertices[:2]
    c, d = moved.vertices[:2]
    assert distance(a, b) == pytest.approx(distance(c, d), abs=1e-12)


# ========================================================================================================================================================================
# Documents
# ========================================================================================================================================================================

@pytest.mark.parametrize("make", [
    lambda c: Cap(c, 0.5),
    lambda c: make_regular_reduced_polygon(c, 5, 0.9),
    lambda c: make_reuleaux_odd_gon(c, 3, 1.0),
    lambda c: make_quarter_disk(c, 0.7),
])
def test_document_round_trip(tmp_path, north, make):
    body = make(north)
    path = str(tmp_path / "body.json")
    save_document(document_from_body(body, {"note": "x"}), path)
    document = load_document(path, strict=True)
    assert document.metadata == {"note": "x"}
    again = document.body()
    assert type(again) is type(body)
    if isinstance(body, Cap):
        assert again.radius == body.radius
    else:
        for u, v in zip(body.vertices, again.vertices):
            assert distance(u, v) < 1e-12

def test_unknown_fields(north):
    raw = document_from_body(Cap(north, 0.5)).toJson()
    raw["color"] = "red"
    with pytest.raises(SchemaError):
        BodyDocument.fromDict(raw, strict=True)
    document = BodyDocument.fromDict(raw)
    assert document.metadata["color"] == "red"

@pytest.mark.parametrize("raw", [
    {"schema_version": "2", "kind": "cap", "data": {"center": [0, 0, 1], "radius": 0.5}},
    {"schema_version": "1", "kind": "cap"},
    {"schema_version": "1", "kind": "blob", "data": {}},
    {"schema_version": "1", "kind": "polygon", "data": {"vertices": [[0, 0, 1]]}},
    [1, 2, 3],
])
def test_bad_documents(raw):
    with pytest.raises((SchemaError, BadParameters)):
        BodyDocument.fromDict(raw)

def test_invalid_json_is_a_schema_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(SchemaError):
        load_document(str(path))
