"""Report storage and rendering adapters."""

from .csv_sink import COLUMNS, CsvReportSink
from .svg_plot import SvgReportRenderer

__all__ = ["COLUMNS", "CsvReportSink", "SvgReportRenderer"]
