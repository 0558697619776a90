from __future__ import annotations

import logging
from dataclasses import dataclass
from utils.bodies import Body, body_kind, is_smooth, is_strictly_convex
from utils.covering import CAP_CANDIDATES, COVER_BOUNDARY, CoverResult, boundary_centered_cover, min_enclosing_cap
from utils.sphere import DEFAULT_TOLERANCE, SpherePoint, Tolerance
from utils.width import (
    BRUTE_FORCE_SAMPLES,
    CONSTANT_DIAMETER_SAMPLES,
    DIAMETER_ARC_SAMPLES,
    POLAR_SCAN,
    ConstantDiameterVerdict,
    ConstantWidthVerdict,
    CoSupportPair,
    diameter,
    is_constant_diameter,
    is_constant_width,
    polar,
    thickness,
)

"""
Measure
    Every measurement the command line reports for one body, taken in one pass.
"""

logger = logging.getLogger("lune.measure")


# Sample counts of the measurements, read from the "samples" section of config.json
@dataclass(frozen=True)
class SampleCounts:
    polar_scan: int = POLAR_SCAN
    brute_force: int = BRUTE_FORCE_SAMPLES
    diameter_arc: int = DIAMETER_ARC_SAMPLES
    cover_boundary: int = COVER_BOUNDARY
    cap_candidates: int = CAP_CANDIDATES
    constant_diameter: int = CONSTANT_DIAMETER_SAMPLES

    @classmethod
    def fromDict(cls, raw: dict | None) -> SampleCounts:
        raw = raw or {}
        return cls(**{key: int(value) for key, value in raw.items() if key in cls.__dataclass_fields__})

    def toJson(self) -> dict:
        return {key: getattr(self, key) for key in self.__dataclass_fields__}


DEFAULT_SAMPLES = SampleCounts()


@dataclass(frozen=True)
class MeasureReport:
    kind: str
    thickness: float
    co_support: CoSupportPair
    diameter: float
    diameter_endpoints: tuple[SpherePoint, SpherePoint]
    enclosing_cap: CoverResult
    boundary_cover: CoverResult
    constant_width: ConstantWidthVerdict
    constant_diameter: ConstantDiameterVerdict
    polar_thickness: float
    smooth: bool
    strictly_convex: bool

    def toJson(self) -> dict:
        return {
            "kind": self.kind,
            "thickness": self.thickness,
            "co_support": self.co_support.toJson(),
            "diameter": self.diameter,
            "diameter_endpoints": [p.toJson() for p in self.diameter_endpoints],
            "min_enclosing_cap": self.enclosing_cap.toJson(),
            "boundary_centered_cover": self.boundary_cover.toJson(),
            "constant_width": self.constant_width.toJson(),
            "constant_diameter": self.constant_diameter.toJson(),
            "polar_thickness": self.polar_thickness,
            "smooth": self.smooth,
            "strictly_convex": self.strictly_convex,
        }


# This function is used to take every measurement of a body at once
def measure(body: Body, tol: Tolerance = DEFAULT_TOLERANCE, samples: SampleCounts = DEFAULT_SAMPLES) -> MeasureReport:
    """
    :param body: The body to measure.
    :param tol: Tolerances; the constant-width and constant-diameter verdicts use eps_claim.
    :param samples: Sample counts of the scans.
    """
    width, pair = thickness(body, tol, samples.brute_force)
    d, endpoints = diameter(body, samples.diameter_arc)
    report = MeasureReport(
        kind=body_kind(body),
        thickness=width,
        co_support=pair,
        diameter=d,
        diameter_endpoints=endpoints,
        enclosing_cap=min_enclosing_cap(body, samples.cap_candidates, tol),
        boundary_cover=boundary_centered_cover(body, samples.cover_boundary),
        constant_width=is_constant_width(body, width, tol.eps_claim, samples.polar_scan),
        constant_diameter=is_constant_diameter(body, d, tol.eps_claim, samples.constant_diameter),
        polar_thickness=thickness(polar(body), tol, samples.brute_force)[0],
        smooth=is_smooth(body),
        strictly_convex=is_strictly_convex(body),
    )
    logger.debug(f"measured {report.kind}: thickness {width:.9g}, diameter {d:.9g}")
    return report
