from .regions import (
    Cap,
    Hemisphere,
    Lune,
    lune_bounding_centers,
    lune_corners,
    lune_thickness,
    lune_with_center,
    region_contains,
)
