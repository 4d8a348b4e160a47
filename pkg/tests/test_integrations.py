import csv
from pathlib import Path

import numpy as np
import pytest

from fiolab.exceptions import InvalidGridError, ReportFormatError
from fiolab.integrations import CsvReportSink, SvgReportRenderer
from fiolab.integrations.reports import COLUMNS
from fiolab.integrations.storage import (
    decode_field,
    decode_mask,
    encode_field,
    encode_mask,
    export_field_csv,
    read_field,
    write_field,
)
from fiolab.lab import Relation, ReportRow, ScalingReport
from fiolab.lattice import Field, GridSpec, make_grid, plane_wave, zeros

HEADER_SIZE = 32


def _report(relation: Relation = "le") -> ScalingReport:
    rows = [
        ReportRow.measured(k, 2.0**k, 0.1 * 2.0 ** (0.05 * k), 1.0, 1e-12)
        for k in range(3, 8)
    ]
    return ScalingReport.fitted(
        "upper_bound_sweep_sphere_packet",
        2,
        "4/3",
        0.6,
        rows,
        0.0,
        relation,
        0.2,
    )


def test_csv_sink_round_trips_reports(tmp_path: Path) -> None:
    sink = CsvReportSink()
    report = _report()

    path = sink.write(report, tmp_path / "reports")

    assert path.parent == tmp_path / "reports"
    assert path.name == "upper_bound_sweep_sphere_packet_2_4-over-3_0.6.csv"
    assert sink.read(path) == report


def test_csv_sink_writes_one_line_per_row(tmp_path: Path) -> None:
    path = CsvReportSink().write(_report(), tmp_path)

    with path.open(encoding="utf-8", newline="") as stream:
        records = list(csv.reader(stream))

    assert tuple(records[0]) == COLUMNS
    assert len(records) == 6
    assert {record[-1] for record in records[1:]} == {"pass"}
    assert {record[14] for record in records[1:]} == {"le"}


def test_csv_sink_rejects_missing_columns(tmp_path: Path) -> None:
    path = tmp_path / "partial.csv"
    path.write_text("experiment,n\ndemo,2\n", encoding="utf-8")

    with pytest.raises(ReportFormatError) as err:
        CsvReportSink().read(path)

    assert "missing columns" in str(err.value)
    assert "ratio" in str(err.value)


def test_csv_sink_rejects_empty_report(tmp_path: Path) -> None:
    path = tmp_path / "empty.csv"
    path.write_text(",".join(COLUMNS) + "\n", encoding="utf-8")

    with pytest.raises(ReportFormatError) as err:
        CsvReportSink().read(path)

    assert "no rows" in str(err.value)


def test_csv_sink_rejects_malformed_values(tmp_path: Path) -> None:
    sink = CsvReportSink()
    path = sink.write(_report(), tmp_path)
    text = path.read_text(encoding="utf-8")

    path.write_text(text.replace(",le,", ",less,"), encoding="utf-8")
    with pytest.raises(ReportFormatError) as relation_error:
        sink.read(path)
    assert "unknown relation" in str(relation_error.value)

    path.write_text(text.replace("0.2,pass", "wide,pass"), encoding="utf-8")
    with pytest.raises(ReportFormatError) as value_error:
        sink.read(path)
    assert "malformed value" in str(value_error.value)


def test_svg_renderer_is_byte_stable(tmp_path: Path) -> None:
    renderer = SvgReportRenderer()
    report = _report()

    first = renderer.render(report, tmp_path / "a" / "report.svg")
    second = renderer.render(report, tmp_path / "b" / "report.svg")

    content = first.read_bytes()
    assert content.startswith(b"<?xml")
    assert b"upper_bound_sweep_sphere_packet" in content
    assert content == second.read_bytes()


def test_svg_renderer_draws_ratio_rules(tmp_path: Path) -> None:
    rows = [ReportRow.measured(t, t, 1e-9 * t, 1.0) for t in (0.5, 1.0, 1.5, 2.0)]
    report = ScalingReport.fitted(
        "mean_oracle_sphere", 2, "inf", 0.0, rows, 0.0, "max", 1e-4
    )

    path = SvgReportRenderer().render(report, tmp_path / "oracle.svg")

    assert path.stat().st_size > 0


def test_field_codec_round_trips_samples(small_grid: GridSpec) -> None:
    field = plane_wave(small_grid, (3, -5), amplitude=0.5 - 2j)

    data = encode_field(field)
    decoded = decode_field(data)

    assert len(data) == HEADER_SIZE + 16 * small_grid.point_count
    assert data[:4] == b"FLD1"
    assert decoded.grid == small_grid
    assert decoded.domain == "space"
    np.testing.assert_array_equal(decoded.samples, field.samples)


def test_field_codec_keeps_frequency_tag(cube_grid: GridSpec, tmp_path: Path) -> None:
    field = Field(cube_grid, np.arange(cube_grid.point_count) * 1j, "frequency")

    decoded = read_field(write_field(field, tmp_path / "nested" / "field.bin"))

    assert decoded.domain == "frequency"
    np.testing.assert_array_equal(decoded.samples, field.samples)


def test_mask_codec_round_trips_bits(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    mask = rng.random(small_grid.shape) > 0.5

    grid, decoded = decode_mask(encode_mask(small_grid, mask))

    assert grid == small_grid
    np.testing.assert_array_equal(decoded, mask)


def test_field_and_mask_payloads_are_not_interchangeable(small_grid: GridSpec) -> None:
    mask = np.zeros(small_grid.shape, dtype=bool)

    with pytest.raises(ReportFormatError):
        decode_field(encode_mask(small_grid, mask))
    with pytest.raises(ReportFormatError):
        decode_mask(encode_field(zeros(small_grid)))
    with pytest.raises(InvalidGridError):
        encode_mask(small_grid, np.zeros((3, 3), dtype=bool))


def test_field_codec_rejects_bad_payloads(small_grid: GridSpec) -> None:
    data = encode_field(zeros(small_grid))

    with pytest.raises(ReportFormatError) as magic_error:
        decode_field(b"XXXX" + data[4:])
    assert "header" in str(magic_error.value)

    with pytest.raises(ReportFormatError) as short_error:
        decode_field(data[:-1])
    assert "truncated" in str(short_error.value)

    with pytest.raises(ReportFormatError):
        decode_field(data[:10])


def test_export_field_csv_writes_one_row_per_point(tmp_path: Path) -> None:
    grid = make_grid(2, 8, 8.0)
    field = plane_wave(grid, (1, 0))

    path = export_field_csv(field, tmp_path / "field.csv")

    with path.open(encoding="utf-8", newline="") as stream:
        records = list(csv.reader(stream))
    assert records[0] == ["j0", "j1", "x0", "x1", "re", "im"]
    assert len(records) == grid.point_count + 1
    assert records[1] == ["0", "0", "0.0", "0.0", "1.0", "0.0"]
    assert float(records[-1][3]) == pytest.approx(7.0)


def test_export_field_csv_refuses_large_grids(tmp_path: Path) -> None:
    grid = make_grid(2, 512, 16.0)

    with pytest.raises(InvalidGridError) as err:
        export_field_csv(zeros(grid), tmp_path / "big.csv")

    assert "262144" in str(err.value)
    assert not (tmp_path / "big.csv").exists()
