from __future__ import annotations

import math
import logging
import numpy as np
from dataclasses import dataclass
from typing import Callable

"""
Optimize
    One-dimensional searches over an edge parameter t in [0, 1]. Objectives are
    vectorized: they take an array of parameters and return an array of values.
"""

logger = logging.getLogger("lune.width")

# ==========
# Constants
# ==========
INV_PHI = (math.sqrt(5) - 1) / 2 # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2 # 1 / phi^2
MAX_ITERATIONS = 200

Objective = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class SearchResult:
    x: float
    value: float
    iterations: int


# This function is used to run a golden-section search for the minimum of f on [a, b]
def golden_section(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10, max_iter: int = MAX_ITERATIONS) -> SearchResult:
    """
    Golden-section search.

    Given a function f with a single local minimum in the interval [a, b], shrinks
    the bracket until it is shorter than tol and returns the best evaluated point.
    The endpoints are evaluated too, so a minimum sitting on the bracket is kept.

    :param f: Scalar objective.
    :param tol: Length of the final bracket.
    :param max_iter: Iteration cap, a warning is logged when it is hit.
    """
    a, b = min(a, b), max(a, b)
    best = min(((a, f(a)), (b, f(b))), key=lambda item: item[1])
    h = b - a
    if h <= tol:
        return SearchResult(best[0], best[1], 0)

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    if n > max_iter:
        logger.warning(f"golden-section search capped at {max_iter} iterations (needs {n})")
        n = max_iter

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    inner = (c, yc) if yc < yd else (d, yd)
    if inner[1] < best[1]:
        best = inner
    return SearchResult(best[0], best[1], n)

# This function is used to minimize a vectorized objective on [a, b]: coarse scan, then golden section around the best sample
def scan_then_polish(f: Objective, a: float = 0.0, b: float = 1.0, samples: int = 24, tol: float = 1e-10) -> SearchResult:
    grid = np.linspace(a, b, samples + 1)
    values = np.asarray(f(grid), dtype=float)
    i = int(np.argmin(values))
    low, high = grid[max(i - 1, 0)], grid[min(i + 1, samples)]
    polished = golden_section(lambda t: float(f(np.array([t]))[0]), low, high, tol)
    if polished.value <= values[i]:
        return polished
    return SearchResult(float(grid[i]), float(values[i]), polished.iterations)

# Same as scan_then_polish, for the maximum
def scan_then_polish_max(f: Objective, a: float = 0.0, b: float = 1.0, samples: int = 24, tol: float = 1e-10) -> SearchResult:
    result = scan_then_polish(lambda ts: -np.asarray(f(ts), dtype=float), a, b, samples, tol)
    return SearchResult(result.x, -result.value, result.iterations)
