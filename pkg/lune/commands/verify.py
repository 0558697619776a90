import argparse
from utils.misc import dumps, resolve_seed
from utils.verify import DEFAULT_SEED, run_suites, search_constant_diameter_counterexample

"""
Verify Command
    Runs the registered theorem suites and prints one JSON line per suite. The exit status
    is 0 only when every suite passes.
"""


class Verify:
    name = "verify"
    description = "Run theorem suites (or the constant-diameter search) and print JSON lines."

    def __init__(self, app) -> None:
        self.app = app

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--suite", action="append", default=None, help="suite id or 'all' (repeat, default all)")
        parser.add_argument("--seed", type=int, default=None, help="generator seed (default: $LUNE_SEED or 1)")
        parser.add_argument("--cases", type=int, default=None, help="cases per suite (default: the suite's own)")
        parser.add_argument("--search", type=int, default=None, metavar="TRIALS", help="run the constant-diameter counterexample search instead")

    def run(self, args: argparse.Namespace) -> int:
        seed = resolve_seed(args.seed, DEFAULT_SEED)

        if args.search is not None:
            report = search_constant_diameter_counterexample(seed, args.search, self.app.tolerance)
            print(dumps(report.toJson()))
            return 0

        reports = run_suites(args.suite or ["all"], args.cases, seed, self.app.tolerance)
        for report in reports:
            print(dumps(report.toJson()))
        failed = [report.theorem_id for report in reports if not report.passed]
        if failed:
            self.app.logger.error(f"Failed suites: {', '.join(failed)}")
            return 1
        return 0


def setup(app) -> None:
    app.add_command(Verify(app))
