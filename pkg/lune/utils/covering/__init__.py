from .covering import (
    CAP_CANDIDATES,
    COVER_BOUNDARY,
    BoundReport,
    CoverResult,
    boundary_centered_cover,
    cover_pivots,
    covering_bound_report,
    dekster_radius,
    min_cap_of_points,
    min_enclosing_cap,
    reduced_radius,
    wide_constant_width_radius,
)
