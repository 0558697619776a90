from __future__ import annotations

import logging
import numpy as np
from dataclasses import dataclass
from typing import Callable, Iterator
from utils.errors import UnknownTheoremId
from utils.sphere import DEFAULT_TOLERANCE, Tolerance

"""
Suite registry
    Every suite is a generator function registered under its theorem id. It draws its
    cases from the seeded rng and yields one violation per case: how far the case is
    from satisfying the claim, 0 when it holds exactly.
"""

logger = logging.getLogger("lune.verify")

# ==========
# Constants
# ==========
DEFAULT_SEED = 1

SuiteFunction = Callable[[np.random.Generator, int, Tolerance], Iterator[float]]


@dataclass(frozen=True)
class Suite:
    theorem_id: str
    function: SuiteFunction
    default_cases: int
    summary: str


@dataclass(frozen=True)
class SuiteReport:
    theorem_id: str
    cases_run: int
    worst_violation: float
    passed: bool
    seed: int

    def toJson(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "cases_run": self.cases_run,
            "worst_violation": self.worst_violation,
            "pass": self.passed,
            "seed": self.seed,
        }


SUITES: dict[str, Suite] = {}


# This function is used to register a suite under its theorem id
def register_suite(theorem_id: str, cases: int):
    def decorator(function: SuiteFunction) -> SuiteFunction:
        summary = function.__doc__.strip().splitlines()[0] if function.__doc__ else ""
        SUITES[theorem_id] = Suite(theorem_id, function, cases, summary)
        return function
    return decorator

def suite_ids() -> list[str]:
    return list(SUITES)

# This function is used to run one registered suite
def run_suite(theorem_id: str, cases: int | None = None, seed: int = DEFAULT_SEED, tol: Tolerance = DEFAULT_TOLERANCE) -> SuiteReport:
    """
    :param theorem_id: A registered id.
    :param cases: Number of generated cases, the suite's default when None.
    :param seed: Seed of the case generator.
    """
    suite = SUITES.get(theorem_id)
    if suite is None:
        raise UnknownTheoremId(f"unknown suite {theorem_id!r} (known: {', '.join(SUITES)})")
    rng = np.random.default_rng(seed)
    count = suite.default_cases if cases is None else cases
    violations = [float(v) for v in suite.function(rng, count, tol)]
    worst = max(violations, default=0.0)
    report = SuiteReport(theorem_id, len(violations), worst, worst <= tol.eps_claim, seed)
    logger.info(f"{theorem_id}: {'pass' if report.passed else 'FAIL'} ({report.cases_run} cases, worst violation {worst:.3g})")
    return report

# This function is used to run several suites, "all" expanding to every registered one
def run_suites(theorem_ids: list[str], cases: int | None = None, seed: int = DEFAULT_SEED, tol: Tolerance = DEFAULT_TOLERANCE) -> list[SuiteReport]:
    if "all" in theorem_ids:
        theorem_ids = suite_ids()
    for theorem_id in theorem_ids:
        if theorem_id not in SUITES:
            raise UnknownTheoremId(f"unknown suite {theorem_id!r} (known: {', '.join(SUITES)})")
    return [run_suite(theorem_id, cases, seed, tol) for theorem_id in theorem_ids]
