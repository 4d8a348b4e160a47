"""Public client entrypoint and default dependency wiring."""

from fiolab.integrations.reports.csv_sink import CsvReportSink
from fiolab.integrations.reports.svg_plot import SvgReportRenderer
from fiolab.lab.service import ExperimentService
from fiolab.settings import LabSettings


class FioLabClient:
    """Public entrypoint for fiolab services."""

    __slots__ = ("_experiment_service", "_settings")

    def __init__(
        self,
        settings: LabSettings | None = None,
        experiment_service: ExperimentService | None = None,
    ) -> None:
        """
        Initialize client with settings and optional injected experiment service.

        Args:
            settings: Runtime settings for numerics and worker pools.
            experiment_service: Prebuilt service instance for custom wiring/tests.

        """
        self._settings = settings or LabSettings()

        if experiment_service is not None:
            self._experiment_service = experiment_service
            return

        self._experiment_service = ExperimentService(
            sink=CsvReportSink(),
            renderer=SvgReportRenderer(),
            settings=self._settings,
        )

    @property
    def settings(self) -> LabSettings:
        """Runtime settings the client was built with."""
        return self._settings

    @property
    def lab(self) -> ExperimentService:
        """
        Return the experiment service.

        Returns:
            ExperimentService: Service running experiments and re-fitting reports.

        """
        return self._experiment_service
