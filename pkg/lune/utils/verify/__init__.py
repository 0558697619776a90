from .registry import DEFAULT_SEED, SUITES, Suite, SuiteReport, register_suite, run_suite, run_suites, suite_ids
from . import suites
from .search import FlaggedCandidate, SearchReport, search_constant_diameter_counterexample
