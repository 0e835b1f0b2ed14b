"""Log-log convergence plots.

The x axis is 1/n (steps per unit of t_final), the y axis the error. A dashed
guide with the scheme's expected slope passes through the finest run.
"""

import io
from pathlib import Path

import matplotlib
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from ..errors import InvalidArgumentError
from ..models import ConvergenceReport
from ..storage import write_atomic

FIGSIZE = (6.4, 4.8)

# Fixed ids and no date stamp: reruns of a study give byte-identical plots
SVG_RC = {
    "svg.hashsalt": "prsplit",
    "svg.fonttype": "none",
}


def render_loglog_svg(report: ConvergenceReport) -> bytes:
    """SVG document for a non-empty report.

    The data line carries gid "data" and the slope guide gid "guide".
    """
    if not report.rows:
        raise InvalidArgumentError("cannot plot an empty convergence report")

    xs = [row.h / report.t_final for row in report.rows]
    ys = [row.error for row in report.rows]
    order = report.expected_order

    # error ~ (1/n)^order through the finest run
    x_end, y_end = xs[-1], ys[-1]
    x_start = xs[0] if len(xs) > 1 else x_end * 10.0
    y_start = y_end * (x_start / x_end) ** order

    buffer = io.BytesIO()
    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=FIGSIZE)
        FigureCanvasAgg(fig)
        ax = fig.add_subplot()
        ax.loglog(xs, ys, marker="o", gid="data", label=f"{report.describe()} (n={report.n})")
        ax.loglog([x_start, x_end], [y_start, y_end], "--", color="gray", gid="guide",
                  label=f"slope {order}")
        ax.set_xlabel("1/n")
        ax.set_ylabel("error")
        ax.grid(True, which="major")
        ax.legend(loc="best")
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def emit_loglog_svg(report: ConvergenceReport, path: Path) -> None:
    """Write the plot for report to path; an empty report is refused before any file exists."""
    write_atomic(Path(path), render_loglog_svg(report))
