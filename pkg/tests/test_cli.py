import json
from pathlib import Path

import pytest

from fiolab.lab.cli import SUBCOMMANDS, build_parser, main

ORACLE_DOCUMENT = {
    "grid": {"dim": 2, "points_per_axis": 64, "box_length": 16.0},
    "k_min": 1,
    "k_max": 4,
    "oracle_fields": 1,
}


def _document(tmp_path: Path, **overrides: object) -> Path:
    path = tmp_path / "oracle.json"
    path.write_text(json.dumps(ORACLE_DOCUMENT | overrides), encoding="utf-8")
    return path


def test_parser_registers_every_experiment() -> None:
    parser = build_parser()

    for name in SUBCOMMANDS:
        args = parser.parse_args([name, "--seed", "3"])
        assert args.command == name
        assert args.seed == 3


def test_parser_rejects_out_of_range_seed() -> None:
    with pytest.raises(SystemExit):
        build_parser().parse_args(["oracle", "--seed", str(2**64)])


def test_oracle_run_writes_reports(
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    out = tmp_path / "reports"

    code = main(["oracle", "--config", str(_document(tmp_path)), "--out", str(out)])

    assert code == 0
    assert sorted(path.name for path in out.iterdir()) == [
        "mean_oracle_ball_2_inf_0.csv",
        "mean_oracle_ball_2_inf_0.svg",
        "mean_oracle_sphere_2_inf_0.csv",
        "mean_oracle_sphere_2_inf_0.svg",
    ]
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        f"{out / 'mean_oracle_sphere_2_inf_0.csv'} pass",
        f"{out / 'mean_oracle_ball_2_inf_0.csv'} pass",
    ]


def test_fit_and_plot_reuse_written_reports(
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    out = tmp_path / "reports"
    main(["oracle", "--quiet", "--config", str(_document(tmp_path)), "--out", str(out)])
    reports = sorted(str(path) for path in out.glob("*.csv"))
    for svg in out.glob("*.svg"):
        svg.unlink()
    capsys.readouterr()

    assert main(["fit", *reports]) == 0
    fitted = capsys.readouterr().out.splitlines()
    assert len(fitted) == 2
    assert all(line.endswith("verdict=pass") for line in fitted)

    assert main(["plot", *reports]) == 0
    assert len(list(out.glob("*.svg"))) == 2


def test_kind_mismatch_is_an_error(tmp_path: Path) -> None:
    document = _document(tmp_path, kind="embedding")

    code = main(["oracle", "--config", str(document), "--out", str(tmp_path)])

    assert code == 2
    assert not list(tmp_path.glob("*.csv"))


def test_unreadable_report_is_an_error(tmp_path: Path) -> None:
    broken = tmp_path / "broken.csv"
    broken.write_text("experiment\n", encoding="utf-8")

    assert main(["fit", str(broken)]) == 2
