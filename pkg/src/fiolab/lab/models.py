"""Report rows, scaling reports and experiment results."""

import datetime
import math
from collections.abc import Sequence
from dataclasses import dataclass

from fiolab.exponent import LebesgueExponent

from .fitting import MIN_FIT_ROWS, SlopeFit, fit_slope
from .types import ExperimentKind, Relation

SLOPE_RELATIONS = frozenset({"le", "ge", "eq", "none"})


def verdict_label(verdict: bool | None) -> str:  # noqa: FBT001
    """
    Spell a verdict the way report files and logs do.

    Args:
        verdict: Outcome of a report.

    Returns:
        str: ``pass``, ``fail`` or ``none``.

    """
    if verdict is None:
        return "none"
    return "pass" if verdict else "fail"


@dataclass(frozen=True, slots=True)
class ReportRow:
    """
    One measurement of a scaling law.

    Attributes:
        abscissa: Fit coordinate, the shell index k or log2 of a window length.
        scale: Physical scale of the row, 2^k or the window length itself.
        numerator: Measured quantity.
        denominator: Normalizing quantity, often an H^(s,p)_FIO norm.
        ratio: ``numerator / denominator``.
        leakage: Boundary-to-peak ratio of the witness, 0 when not applicable.

    """

    abscissa: float
    scale: float
    numerator: float
    denominator: float
    ratio: float
    leakage: float = 0.0

    @classmethod
    def measured(
        cls,
        abscissa: float,
        scale: float,
        numerator: float,
        denominator: float,
        leakage: float = 0.0,
    ) -> "ReportRow":
        """
        Build a row, deriving the ratio.

        Args:
            abscissa: Fit coordinate.
            scale: Physical scale of the row.
            numerator: Measured quantity.
            denominator: Normalizing quantity.
            leakage: Boundary-to-peak ratio of the witness.

        Returns:
            ReportRow: Row with ``ratio = numerator / denominator``.

        """
        ratio = numerator / denominator if denominator != 0 else math.inf
        return cls(
            abscissa=float(abscissa),
            scale=float(scale),
            numerator=float(numerator),
            denominator=float(denominator),
            ratio=float(ratio),
            leakage=float(leakage),
        )


def judge(
    relation: Relation,
    slope: float,
    ratios: Sequence[float],
    predicted: float,
    tolerance: float,
) -> bool | None:
    """
    Derive the verdict of a report from its columns.

    Args:
        relation: Comparison rule.
        slope: Fitted log2-slope, NaN when no fit was possible.
        ratios: Ratio column in row order.
        predicted: Predicted slope, or the band center for ``band``.
        tolerance: Slope tolerance, or the ratio bound of the ratio rules.

    Returns:
        bool | None: Verdict, ``None`` for ``none``.

    """
    match relation:
        case "none":
            return None
        case "le":
            return slope <= predicted + tolerance
        case "ge":
            return slope >= predicted - tolerance
        case "eq":
            return abs(slope - predicted) <= tolerance
        case "max":
            return bool(ratios) and max(ratios) <= tolerance
        case "band":
            low, high = predicted / tolerance, predicted * tolerance
            return bool(ratios) and all(low <= ratio <= high for ratio in ratios)
    if not ratios or min(ratios) <= 0:
        return False
    if relation == "spread":
        return max(ratios) / min(ratios) <= tolerance
    return min(ratios) / ratios[0] >= tolerance


def describe_slope(rows: Sequence[ReportRow], relation: Relation) -> SlopeFit:
    """
    Fit the ratio column, tolerating unfittable data for the ratio rules.

    Args:
        rows: Report rows.
        relation: Comparison rule of the report.

    Returns:
        SlopeFit: Fit of log2 ratio against the abscissa; NaN entries when a ratio
        rule's data cannot be fitted.

    Raises:
        FitError: If a slope rule's data cannot be fitted.

    """
    points = [(row.abscissa, row.ratio) for row in rows]
    fittable = len(points) >= MIN_FIT_ROWS and all(
        math.isfinite(v) and v > 0 for _, v in points
    )
    if relation in SLOPE_RELATIONS or fittable:
        return fit_slope(points)
    return SlopeFit(math.nan, math.nan, math.nan)


@dataclass(frozen=True, slots=True)
class ScalingReport:
    """
    Fitted scaling law with the exponent it is compared against.

    Attributes:
        experiment: Report name, the experiment kind with its variant.
        n: Spatial dimension.
        p: Exponent label as written by ``LebesgueExponent``.
        s: Smoothness index of the denominator norm.
        rows: Measurements in abscissa order.
        slope: Fitted log2-slope of the ratio column.
        intercept: Fitted intercept.
        max_residual: Largest deviation of a row from the fitted line.
        predicted: Predicted slope or band center.
        relation: Comparison rule.
        tolerance: Allowance of the comparison rule.

    """

    experiment: str
    n: int
    p: str
    s: float
    rows: tuple[ReportRow, ...]
    slope: float
    intercept: float
    max_residual: float
    predicted: float
    relation: Relation
    tolerance: float

    @classmethod
    def fitted(
        cls,
        experiment: str,
        n: int,
        p: LebesgueExponent | str,
        s: float,
        rows: Sequence[ReportRow],
        predicted: float,
        relation: Relation,
        tolerance: float,
    ) -> "ScalingReport":
        """
        Fit the rows and assemble the report.

        Args:
            experiment: Report name.
            n: Spatial dimension.
            p: Exponent.
            s: Smoothness index.
            rows: Measurements.
            predicted: Predicted slope or band center.
            relation: Comparison rule.
            tolerance: Allowance of the comparison rule.

        Returns:
            ScalingReport: Report with fit columns filled.

        Raises:
            FitError: If a slope rule's rows cannot be fitted.

        """
        fit = describe_slope(rows, relation)
        return cls(
            experiment=experiment,
            n=n,
            p=str(LebesgueExponent.parse(p)),
            s=float(s),
            rows=tuple(rows),
            slope=fit.slope,
            intercept=fit.intercept,
            max_residual=fit.max_residual,
            predicted=float(predicted),
            relation=relation,
            tolerance=float(tolerance),
        )

    @property
    def ratios(self) -> list[float]:
        """Ratio column in row order."""
        return [row.ratio for row in self.rows]

    @property
    def verdict(self) -> bool | None:
        """Pass/fail outcome, ``None`` when the report carries no verdict."""
        return judge(
            self.relation,
            self.slope,
            self.ratios,
            self.predicted,
            self.tolerance,
        )

    @property
    def filename(self) -> str:
        """File name ``<experiment>_<n>_<p>_<s>.csv``."""
        label = LebesgueExponent.parse(self.p).label()
        return f"{self.experiment}_{self.n}_{label}_{self.s:g}.csv"

    def refit(self) -> "ScalingReport":
        """
        Recompute the fit columns from the rows.

        Returns:
            ScalingReport: Copy with freshly fitted slope, intercept and residual.

        """
        return ScalingReport.fitted(
            self.experiment,
            self.n,
            self.p,
            self.s,
            self.rows,
            self.predicted,
            self.relation,
            self.tolerance,
        )


@dataclass(frozen=True, slots=True)
class ExperimentRun:
    """
    Aggregated result of one experiment invocation.

    Attributes:
        kind: Experiment kind.
        reports: Reports in emission order.
        artifacts: Files written per report, CSV first.
        started_at: UTC timestamp when the run started.
        finished_at: UTC timestamp when the run finished.

    """

    kind: ExperimentKind
    reports: tuple[ScalingReport, ...]
    artifacts: tuple[tuple[str, ...], ...]
    started_at: datetime.datetime
    finished_at: datetime.datetime

    @property
    def passed(self) -> bool:
        """Whether no report carries a failing verdict."""
        return all(report.verdict is not False for report in self.reports)
