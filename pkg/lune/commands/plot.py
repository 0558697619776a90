import argparse
from utils.bodies import load_document
from utils.covering import min_enclosing_cap
from utils.misc import parse_numbers
from utils.plotting import PROJECTIONS, plot_body
from utils.regions import Lune
from utils.sphere import SpherePoint
from utils.width import thickness

"""
Plot Command
    Draws a body document as an SVG figure, with the narrowest lune and the smallest
    enclosing cap as optional overlays.
"""

FROM_THICKNESS = "thickness"


# This function is used as the argparse type of --with-lune
def lune_poles(text: str):
    if text == FROM_THICKNESS:
        return text
    return parse_numbers(text, 6)


class Plot:
    name = "plot"
    description = "Draw a body document as an SVG figure."

    def __init__(self, app) -> None:
        self.app = app

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("body", help="body document (JSON)")
        parser.add_argument("--out", required=True, help="SVG file to write")
        parser.add_argument("--projection", choices=PROJECTIONS, default="orthographic")
        parser.add_argument(
            "--with-lune",
            nargs="?",
            const=FROM_THICKNESS,
            type=lune_poles,
            default=None,
            help="lune overlay: poles kx,ky,kz,k'x,k'y,k'z, or the narrowest lune when no value is given",
        )
        parser.add_argument("--with-cap", action="store_true", help="draw the smallest enclosing cap")

    def run(self, args: argparse.Namespace) -> int:
        body = load_document(args.body).body()

        lune = None
        if args.with_lune == FROM_THICKNESS:
            lune = thickness(body, self.app.tolerance, self.app.samples.brute_force)[1].lune
        elif args.with_lune is not None:
            lune = Lune(SpherePoint(*args.with_lune[:3]), SpherePoint(*args.with_lune[3:]))
            lune.validate(self.app.tolerance)

        cap = min_enclosing_cap(body, self.app.samples.cap_candidates, self.app.tolerance).cap if args.with_cap else None
        canvas = plot_body(body, args.projection, lune, cap, size=float(self.app.svg["view_box"]), radius=float(self.app.svg["radius"]))
        canvas.save(args.out)
        self.app.logger.info(f"Wrote {args.out}")
        return 0


def setup(app) -> None:
    app.add_command(Plot(app))
