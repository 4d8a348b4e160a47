"""Protocol contracts for report storage and rendering adapters."""

from pathlib import Path
from typing import Protocol

from .models import ScalingReport


class ReportSink(Protocol):
    """Contract for persisting scaling reports as flat files."""

    def write(self, report: ScalingReport, directory: Path) -> Path:
        """
        Persist one report.

        Args:
            report: Report to store.
            directory: Output directory, created when missing.

        Returns:
            Path: Location of the written file.

        """
        ...

    def read(self, path: Path) -> ScalingReport:
        """
        Load a report written by ``write``.

        Args:
            path: Report file.

        Returns:
            ScalingReport: Parsed report.

        """
        ...


class ReportRenderer(Protocol):
    """Contract for drawing a report as a log2 chart."""

    def render(self, report: ScalingReport, destination: Path) -> Path:
        """
        Draw one report.

        Args:
            report: Report to draw.
            destination: Target file.

        Returns:
            Path: Location of the drawing.

        """
        ...
