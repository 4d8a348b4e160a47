"""SVG line charts of scaling reports in log2 coordinates."""

import logging
import math
from pathlib import Path

import numpy as np
from matplotlib import rc_context
from matplotlib.figure import Figure

from fiolab.lab.interfaces import ReportRenderer
from fiolab.lab.models import SLOPE_RELATIONS, ScalingReport

logger = logging.getLogger(__name__)

FIGURE_SIZE = (6.0, 4.0)
PREDICTED = "predicted"
SVG_PARAMS = {"svg.hashsalt": "fiolab", "svg.fonttype": "none"}


def _reference_level(report: ScalingReport) -> float | None:
    if report.relation == "max":
        return math.log2(report.tolerance)
    if report.relation == "band" and report.predicted > 0:
        return math.log2(report.predicted)
    return None


class SvgReportRenderer(ReportRenderer):
    """
    Draws measured log2 ratios with the fitted and the predicted line.

    Output is byte-stable: the SVG id salt is fixed, text stays text and no
    date is embedded.
    """

    __slots__ = ()

    def render(self, report: ScalingReport, destination: Path) -> Path:
        """
        Draw one report.

        Args:
            report: Report to draw.
            destination: Target SVG file.

        Returns:
            Path: Location of the drawing.

        """
        points = [
            (row.abscissa, math.log2(row.ratio))
            for row in report.rows
            if 0 < row.ratio < math.inf
        ]
        with rc_context(SVG_PARAMS):
            figure = Figure(figsize=FIGURE_SIZE)
            axes = figure.add_subplot()
            if points:
                xs, ys = (np.array(values) for values in zip(*points, strict=True))
                axes.plot(xs, ys, "o", color="tab:blue", label="measured")
                span = np.array([xs.min(), xs.max()])
                if math.isfinite(report.slope):
                    fitted = report.slope * span + report.intercept
                    axes.plot(span, fitted, "-", color="tab:orange", label="fit")
                if report.relation in SLOPE_RELATIONS and report.relation != "none":
                    anchored = ys[0] + report.predicted * (span - xs[0])
                    axes.plot(span, anchored, "--", color="tab:green", label=PREDICTED)
            level = _reference_level(report)
            if level is not None:
                axes.axhline(level, linestyle="--", color="tab:green", label=PREDICTED)
            axes.set_xlabel("abscissa")
            axes.set_ylabel("log2 ratio")
            axes.set_title(
                f"{report.experiment} n={report.n} p={report.p} s={report.s:g}",
            )
            if axes.lines:
                axes.legend(loc="best")
            destination.parent.mkdir(parents=True, exist_ok=True)
            figure.savefig(destination, format="svg", metadata={"Date": None})
        logger.debug("rendered %s", destination)
        return destination
