"""Flat CSV storage of scaling reports, one report per file."""

import csv
import logging
from pathlib import Path
from typing import cast, get_args

from fiolab.exceptions import ReportFormatError
from fiolab.lab.interfaces import ReportSink
from fiolab.lab.models import ReportRow, ScalingReport, verdict_label
from fiolab.lab.types import Relation

logger = logging.getLogger(__name__)

COLUMNS = (
    "experiment",
    "n",
    "p",
    "s",
    "abscissa",
    "scale",
    "numerator",
    "denominator",
    "ratio",
    "leakage",
    "slope",
    "intercept",
    "max_residual",
    "predicted",
    "relation",
    "tolerance",
    "verdict",
)
RELATIONS = frozenset(get_args(Relation.__value__))


class CsvReportSink(ReportSink):
    """Writes reports as comma-separated files with ``repr`` floats."""

    __slots__ = ()

    def write(self, report: ScalingReport, directory: Path) -> Path:
        """
        Persist one report under its canonical file name.

        Args:
            report: Report to store.
            directory: Output directory, created when missing.

        Returns:
            Path: Location of the written CSV.

        """
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / report.filename
        verdict = verdict_label(report.verdict)
        with path.open("w", encoding="utf-8", newline="") as stream:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(COLUMNS)
            for row in report.rows:
                writer.writerow(
                    [
                        report.experiment,
                        report.n,
                        report.p,
                        repr(report.s),
                        repr(row.abscissa),
                        repr(row.scale),
                        repr(row.numerator),
                        repr(row.denominator),
                        repr(row.ratio),
                        repr(row.leakage),
                        repr(report.slope),
                        repr(report.intercept),
                        repr(report.max_residual),
                        repr(report.predicted),
                        report.relation,
                        repr(report.tolerance),
                        verdict,
                    ],
                )
        logger.debug("wrote %s rows to %s", len(report.rows), path)
        return path

    def read(self, path: Path) -> ScalingReport:
        """
        Load a report written by ``write``.

        Args:
            path: Report CSV.

        Returns:
            ScalingReport: Report with the stored fit columns.

        Raises:
            ReportFormatError: If columns are missing, the file has no rows, or a
                value cannot be parsed.

        """
        with path.open(encoding="utf-8", newline="") as stream:
            reader = csv.DictReader(stream)
            header = reader.fieldnames or []
            missing = [name for name in COLUMNS if name not in header]
            if missing:
                raise ReportFormatError.missing_columns(missing)
            records = list(reader)
        if not records:
            raise ReportFormatError.empty_report()
        first = records[0]
        if first["relation"] not in RELATIONS:
            reason = f"unknown relation {first['relation']!r}"
            raise ReportFormatError.malformed_value(str(path), reason)
        try:
            rows = tuple(
                ReportRow(
                    abscissa=float(record["abscissa"]),
                    scale=float(record["scale"]),
                    numerator=float(record["numerator"]),
                    denominator=float(record["denominator"]),
                    ratio=float(record["ratio"]),
                    leakage=float(record["leakage"]),
                )
                for record in records
            )
            return ScalingReport(
                experiment=first["experiment"],
                n=int(first["n"]),
                p=first["p"],
                s=float(first["s"]),
                rows=rows,
                slope=float(first["slope"]),
                intercept=float(first["intercept"]),
                max_residual=float(first["max_residual"]),
                predicted=float(first["predicted"]),
                relation=cast("Relation", first["relation"]),
                tolerance=float(first["tolerance"]),
            )
        except (TypeError, ValueError) as exc:
            raise ReportFormatError.malformed_value(str(path), str(exc)) from exc
