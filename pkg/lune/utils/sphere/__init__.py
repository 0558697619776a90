from .core import (
    HALF_PI,
    DEFAULT_TOLERANCE,
    Tolerance,
    SpherePoint,
    GeodesicArc,
    angles,
    antipode,
    as_vector,
    circumcircle,
    distance,
    interpolate,
    local_frame,
    normalize,
    normalize_rows,
    orient,
    polar_offset,
    random_rotation,
    random_unit_vectors,
    tangent_toward,
    walk,
)
