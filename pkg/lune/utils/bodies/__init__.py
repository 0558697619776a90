from .BodyTypes import Body, ConvexPolygon, DiskPolygon, Edge, body_kind, rotate_body
from .geometry import (
    BoundarySample,
    SupportingPoles,
    body_contains,
    boundary_parameters,
    boundary_sample,
    contains_points,
    dual_body,
    edges_of,
    extreme_points,
    farthest,
    interior_point,
    is_smooth,
    is_strictly_convex,
    min_dot_over,
    on_boundary,
    support_edges,
    support_margin,
    supporting_poles_at,
    vertices_of,
)
from .constructors import (
    convex_hull,
    intersect_caps,
    make_cap,
    make_equilateral_triangle,
    make_quarter_disk,
    make_regular_polygon,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
    open_hemisphere_witness,
    regular_reduced_circumradius,
)
from .documents import SCHEMA_VERSION, BodyDocument, document_from_body, load_document, save_document
