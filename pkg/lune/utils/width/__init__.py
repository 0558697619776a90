from .optimize import SearchResult, golden_section, scan_then_polish, scan_then_polish_max
from .polar import conv_of_caps, polar, polar_rho
from .engine import (
    BRUTE_FORCE_SAMPLES,
    CONSTANT_DIAMETER_SAMPLES,
    DIAMETER_ARC_SAMPLES,
    POLAR_SCAN,
    CoSupportPair,
    ConstantDiameterVerdict,
    ConstantWidthVerdict,
    WidthProfile,
    diameter,
    diameter_of_extreme_points,
    inscribed_touching_ball,
    is_constant_diameter,
    is_constant_width,
    lune_through_point,
    thickness,
    width_at,
    width_profile,
    widths_at,
)
from .certificate import CERTIFIED, NOT_REDUCED, CertificateReport, cut_corner, reducedness_certificate
