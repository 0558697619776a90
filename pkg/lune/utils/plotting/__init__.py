from .svg import VIEW_BOX, SvgCanvas
from .figures import FIGURE_RADIUS, PROJECTIONS, Projection, make_projection, plot_body
