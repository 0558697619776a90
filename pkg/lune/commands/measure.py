import argparse
from utils.bodies import load_document
from utils.measure import measure
from utils.misc import dumps, rounded

"""
Measure Command
    Thickness, diameter, covering caps and the constant width / diameter verdicts of a body
    document.
"""


class Measure:
    name = "measure"
    description = "Measure a body document."

    def __init__(self, app) -> None:
        self.app = app

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("body", help="body document (JSON)")
        parser.add_argument("--json", action="store_true", help="machine readable output")
        parser.add_argument("--strict", action="store_true", help="reject unknown document fields")

    def run(self, args: argparse.Namespace) -> int:
        body = load_document(args.body, args.strict).body()
        report = measure(body, self.app.tolerance, self.app.samples).toJson()

        if args.json:
            print(dumps(report))
            return 0
        for key, value in rounded(report).items():
            if isinstance(value, dict):
                value = ", ".join(f"{k}={v}" for k, v in value.items())
            print(f"{key}: {value}")
        return 0


def setup(app) -> None:
    app.add_command(Measure(app))
