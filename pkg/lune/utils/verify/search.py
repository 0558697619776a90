from __future__ import annotations

import math
import logging
import numpy as np
from dataclasses import dataclass
from utils.bodies import Body, intersect_caps
from utils.bodies.constructors import regular_vertices, reuleaux_circumradius
from utils.errors import BadParameters, LuneError
from utils.regions import Cap
from utils.sphere import DEFAULT_TOLERANCE, HALF_PI, SpherePoint, Tolerance, random_unit_vectors, walk
from utils.width import diameter, is_constant_diameter, is_constant_width
from .registry import DEFAULT_SEED

"""
Constant diameter search
    Looks for bodies of constant diameter w < pi/2 that are not of constant width w.
    Candidates are intersections of caps of radius w around jittered regular odd-gons.
    A candidate is only flagged when the gap survives a re-check at doubled density;
    a flag is a case to look at, never a disproof.
"""

logger = logging.getLogger("lune.verify")

# ==========
# Constants
# ==========
JITTER = 1e-3
FLAG_FACTOR = 10.0


@dataclass(frozen=True)
class FlaggedCandidate:
    trial: int
    width: float
    width_deviation: float
    body: Body

    def toJson(self) -> dict:
        return {"trial": self.trial, "width": self.width, "width_deviation": self.width_deviation, "body": self.body.toJson()}


@dataclass(frozen=True)
class SearchReport:
    seed: int
    trials: int
    built: int # candidates that formed a valid body
    constant_diameter: int # candidates passing the constant-diameter test
    flagged: tuple[FlaggedCandidate, ...]

    @property
    def message(self) -> str:
        if self.flagged:
            return f"{len(self.flagged)} flagged candidate(s) in {self.trials} trials, numerical artifacts not ruled out"
        return f"no counterexample found in {self.trials} trials"

    def toJson(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "built": self.built,
            "constant_diameter": self.constant_diameter,
            "flagged": [candidate.toJson() for candidate in self.flagged],
            "message": self.message,
        }


# This function is used to build one candidate: caps of radius w around a (jittered) regular odd-gon
def _candidate(rng: np.random.Generator, trial: int) -> tuple[Body, float]:
    n = int(rng.choice((3, 5)))
    w = float(rng.uniform(0.4, HALF_PI - 0.1))
    center = SpherePoint.from_vector(random_unit_vectors(rng, 1)[0])
    orientation = float(rng.uniform(0.0, 2.0 * math.pi))
    vertices = regular_vertices(center, n, reuleaux_circumradius(n, w), orientation)
    if trial > 0:
        vertices = [
            SpherePoint.from_vector(walk(v.vec, _tangent(rng, v.vec), float(rng.uniform(0.0, JITTER)))) for v in vertices
        ]
    return intersect_caps([Cap(v, w) for v in vertices]), w

def _tangent(rng: np.random.Generator, p: np.ndarray) -> np.ndarray:
    u = rng.normal(size=3)
    u -= np.dot(u, p) * p
    return u / np.linalg.norm(u)

# This function is used to test one candidate, at the given sampling density
def _width_gap(body: Body, tol: Tolerance, density: int) -> tuple[bool, float, float]:
    w, _ = diameter(body)
    constant = is_constant_diameter(body, w, tol.eps_claim, samples=512 * density)
    if not constant:
        return False, w, 0.0
    return True, w, is_constant_width(body, w, tol.eps_claim, samples=1024 * density).deviation

# This function is used to search for a body of constant diameter but not of constant width
def search_constant_diameter_counterexample(seed: int = DEFAULT_SEED, trials: int = 100, tol: Tolerance = DEFAULT_TOLERANCE) -> SearchReport:
    """
    Trial 0 is the exact Reuleaux polygon, the following trials jitter its vertices.

    :param seed: Seed of the candidate generator.
    :param trials: Number of candidates, at least 1.
    """
    if trials < 1:
        raise BadParameters(f"trials must be at least 1, got {trials}")
    rng = np.random.default_rng(seed)
    built = constant = 0
    flagged: list[FlaggedCandidate] = []
    for trial in range(trials):
        try:
            body, _ = _candidate(rng, trial)
            is_constant, w, gap = _width_gap(body, tol, 1)
        except LuneError as e:
            logger.debug(f"trial {trial} skipped: {type(e).__name__}: {e}")
            continue
        built += 1
        if not is_constant:
            continue
        constant += 1
        if gap <= FLAG_FACTOR * tol.eps_claim:
            continue
        still_constant, w, gap = _width_gap(body, tol, 2)
        if still_constant and gap > FLAG_FACTOR * tol.eps_claim:
            logger.warning(f"trial {trial}: constant diameter {w:.9g} but width deviates by {gap:.3g}")
            flagged.append(FlaggedCandidate(trial, w, gap, body))

    report = SearchReport(seed, trials, built, constant, tuple(flagged))
    logger.info(report.message)
    return report
