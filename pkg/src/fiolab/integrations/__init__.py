"""Infrastructure adapters for files on disk."""

from .reports import CsvReportSink, SvgReportRenderer

__all__ = ["CsvReportSink", "SvgReportRenderer"]
