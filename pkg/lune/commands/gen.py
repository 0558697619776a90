import argparse
from utils.bodies import (
    convex_hull,
    document_from_body,
    make_cap,
    make_quarter_disk,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
    save_document,
)
from utils.errors import BadParameters
from utils.misc import dumps, parse_vector
from utils.sphere import SpherePoint

"""
Gen Command
    Builds one of the standard bodies and writes it as a body document.
"""

# =========
# Constants
# =========
SHAPES = ("cap", "quarter-disk", "reuleaux", "reduced-ngon", "hull-of-points")

# Parameters each shape needs
REQUIRED = {
    "cap": ("radius",),
    "quarter-disk": ("delta",),
    "reuleaux": ("w",),
    "reduced-ngon": ("delta",),
    "hull-of-points": ("points",),
}


class Gen:
    name = "gen"
    description = "Generate a body (cap, quarter-disk, reuleaux, reduced-ngon, hull-of-points)."

    def __init__(self, app) -> None:
        self.app = app

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("shape", choices=SHAPES)
        parser.add_argument("--n", type=int, default=3, help="number of vertices (odd)")
        parser.add_argument("--w", type=float, help="width of the Reuleaux polygon")
        parser.add_argument("--delta", type=float, help="thickness of the quarter-disk or reduced polygon")
        parser.add_argument("--radius", type=float, help="radius of the cap")
        parser.add_argument("--center", type=parse_vector, default=(0.0, 0.0, 1.0), help="center direction x,y,z")
        parser.add_argument("--orientation", type=float, default=0.0, help="rotation about the center, radians")
        parser.add_argument("--points", type=parse_vector, action="append", help="hull point x,y,z (repeat)")
        parser.add_argument("--out", default=None, help="output file, stdout when omitted")

    # This function is used to build the body the arguments describe
    def build(self, args: argparse.Namespace):
        missing = [name for name in REQUIRED[args.shape] if getattr(args, name) is None]
        if missing:
            raise BadParameters(f"{args.shape} needs --{', --'.join(missing)}")

        c = SpherePoint(*args.center)
        if args.shape == "cap":
            return make_cap(c, args.radius)
        if args.shape == "quarter-disk":
            return make_quarter_disk(c, args.delta, args.orientation)
        if args.shape == "reuleaux":
            return make_reuleaux_odd_gon(c, args.n, args.w, args.orientation)
        if args.shape == "reduced-ngon":
            return make_regular_reduced_polygon(c, args.n, args.delta, args.orientation)
        return convex_hull([SpherePoint(*p) for p in args.points], self.app.tolerance)

    def run(self, args: argparse.Namespace) -> int:
        body = self.build(args)
        parameters = {name: getattr(args, name) for name in ("n", "w", "delta", "radius", "orientation") if getattr(args, name) is not None}
        document = document_from_body(body, {"shape": args.shape, **parameters})

        if args.out is None:
            print(dumps(document.toJson()))
        else:
            save_document(document, args.out)
            self.app.logger.info(f"Wrote {document.kind} to {args.out}")
        return 0


def setup(app) -> None:
    app.add_command(Gen(app))
