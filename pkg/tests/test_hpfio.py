import math

import numpy as np
import pytest
from scipy.spatial import cKDTree

from fiolab.exceptions import (
    InvalidExponentError,
    SupportViolationError,
    UnderResolvedFrameError,
)
from fiolab.hpfio import (
    Witness,
    build_frame,
    conic_family,
    direction_quadrature,
    embedding_report,
    frame_cutoffs,
    frame_table,
    hpfio_norm_packet,
    hpfio_norm_quadrature,
    norm_records,
    reproduce,
    sobolev_norm,
    sup_norm_proxy,
)
from fiolab.lattice import (
    Field,
    GridSpec,
    filter_field,
    frequency_norm,
    lp_norm,
    make_grid,
    nyquist_mask,
    plane_wave,
)
from fiolab.symbols import shell_symbol, sphere_area

EXPECTED_CIRCLE_COUNT_K4 = 25
MONTE_CARLO_POINTS = 10_000


def _shell_field(grid: GridSpec, rng: np.random.Generator, k: int) -> Field:
    noise = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    return filter_field(Field(grid, noise), shell_symbol(grid, k))


@pytest.fixture
def fine_grid() -> GridSpec:
    return make_grid(2, 128, 16.0)


@pytest.fixture
def shell_grid() -> GridSpec:
    return make_grid(2, 512, 16.0)


def test_circle_frame_has_rounded_count() -> None:
    frame = build_frame(2, 4)

    assert frame.count == EXPECTED_CIRCLE_COUNT_K4
    assert frame.covering_radius <= frame.separation


@pytest.mark.parametrize("k", range(1, 13))
def test_circle_frame_is_separated(k: int) -> None:
    frame = build_frame(2, k)

    assert frame.min_separation() >= frame.separation * (1 - 1e-9)


def test_sphere_frame_covers_random_points(rng: np.random.Generator) -> None:
    frame = build_frame(3, 6)
    points = rng.standard_normal((MONTE_CARLO_POINTS, 3))
    points /= np.linalg.norm(points, axis=1, keepdims=True)

    distances, _ = cKDTree(frame.directions).query(points)

    assert distances.max() <= 2.0**-3
    assert frame.min_separation() >= frame.separation * (1 - 1e-9)


@pytest.mark.parametrize(("dim", "k"), [(2, 5), (3, 4), (3, 6)])
def test_frame_weights_sum_to_sphere_area(dim: int, k: int) -> None:
    frame = build_frame(dim, k)

    assert frame.weights.sum() == pytest.approx(sphere_area(dim), abs=1e-6)


@pytest.mark.parametrize(
    ("dim", "k"),
    [(2, k) for k in range(2, 11)] + [(3, k) for k in range(2, 8)],
)
def test_frame_count_follows_power_law(dim: int, k: int) -> None:
    frame = build_frame(dim, k)
    expected = sphere_area(dim) * 2.0 ** (k * (dim - 1) / 2)

    assert expected / 4 <= frame.count <= 4 * expected


@pytest.mark.parametrize(("dim", "k"), [(2, 0), (2, 13), (3, 9)])
def test_frame_rejects_unsupported_shell(dim: int, k: int) -> None:
    with pytest.raises(UnderResolvedFrameError) as err:
        build_frame(dim, k)

    assert f"k={k}" in str(err.value)


def test_frame_table_lists_every_direction() -> None:
    frame = build_frame(2, 3)

    rows = frame_table(frame)

    assert len(rows) == frame.count
    assert rows[0].k == 3
    assert rows[0].direction == pytest.approx((1.0, 0.0))
    assert math.fsum(row.weight for row in rows) == pytest.approx(2 * math.pi)


def test_nearest_direction_picks_closest() -> None:
    frame = build_frame(2, 4)
    target = frame.directions[7] + 1e-3 * frame.directions[8]

    assert frame.nearest(target / np.linalg.norm(target)) == 7


def test_frame_cutoffs_sum_to_one(small_grid: GridSpec) -> None:
    frame = build_frame(2, 4)
    cutoffs = frame_cutoffs(frame, small_grid)
    kept = ~nyquist_mask(small_grid) & (frequency_norm(small_grid) > 0)

    total = sum(cutoffs.cutoff(index) for index in range(frame.count))

    np.testing.assert_allclose(np.asarray(total)[kept], 1.0, atol=1e-10)
    assert np.asarray(total)[~kept].max() == 0.0


def test_frame_reproduces_shell_field(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)

    result = reproduce(field, build_frame(2, 4))

    np.testing.assert_allclose(result.samples, field.samples, atol=1e-10)


def test_conic_family_respects_support() -> None:
    angles = np.linspace(0.0, 2 * math.pi, 181)
    radii = np.array([0.1, 0.2, 0.3, 1.0, 4.0, 16.0, 64.0])
    rho, theta = np.meshgrid(radii, angles, indexing="ij")
    quadrature = direction_quadrature(2, 2.0**-5)
    family = conic_family((rho * np.cos(theta), rho * np.sin(theta)), quadrature)

    for index in (0, 40, 100):
        omega = quadrature.directions[index]
        distance = np.hypot(np.cos(theta) - omega[0], np.sin(theta) - omega[1])
        outside = (rho < 0.25) | (distance > rho**-0.5)
        assert np.all(family.value(index)[outside] == 0.0)


def test_conic_family_is_normalized() -> None:
    radii = np.geomspace(1.0, 2.0**9, 40)
    angles = np.linspace(0.1, 6.0, 40)
    quadrature = direction_quadrature(2, 2.0**-8 / 4)
    family = conic_family((radii * np.cos(angles), radii * np.sin(angles)), quadrature)

    squares = sum(
        weight * family.value(index) ** 2
        for index, weight in enumerate(quadrature.weights)
    )

    np.testing.assert_allclose(squares, 1.0, atol=1e-3)


def test_conic_family_peak_grows_like_quarter_power_on_circle() -> None:
    shells = np.arange(3, 9)
    radii = 2.0**shells
    rule = direction_quadrature(2, 2.0**-7)
    family = conic_family((radii, np.zeros_like(radii)), rule)

    slope = np.polyfit(shells, np.log2(family.peak()), 1)[0]

    assert slope == pytest.approx(0.25, abs=0.1)


def test_conic_family_peak_grows_like_half_power_on_sphere() -> None:
    shells = np.arange(3, 7)
    radii = 2.0**shells
    axis = np.array([1.0, 2.0, 2.0]) / 3.0
    components = tuple(radii * component for component in axis)
    family = conic_family(components, direction_quadrature(3, 2.0**-5))

    slope = np.polyfit(shells, np.log2(family.peak()), 1)[0]

    assert slope == pytest.approx(0.5, abs=0.1)


def test_quadrature_norm_of_low_frequency_field_is_sobolev_norm() -> None:
    grid = make_grid(2, 64, 64.0)
    field = plane_wave(grid, (1, 0)).add(plane_wave(grid, (0, 2), 0.5j))
    field = field.add(plane_wave(grid, (1, 1), -0.25))

    value = hpfio_norm_quadrature(field, 1.0, 3)

    assert value == pytest.approx(sobolev_norm(field, 1.0, 3), rel=1e-9)


def test_quadrature_norm_matches_l2_at_p_two(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(fine_grid, rng, 3)

    value = hpfio_norm_quadrature(field, 0.0, 2)

    assert value == pytest.approx(lp_norm(field, 2), rel=1e-9)


def test_quadrature_norm_rejects_coarse_rule(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(fine_grid, rng, 3)

    with pytest.raises(UnderResolvedFrameError) as err:
        hpfio_norm_quadrature(field, 0.0, 2, quadrature=direction_quadrature(2, 0.5))

    assert "exceeds" in str(err.value)


def test_packet_norm_is_near_parseval_at_p_two(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(fine_grid, rng, 3)

    ratio = hpfio_norm_packet(field, 0.0, 2, 3) / lp_norm(field, 2)

    assert 0.8 <= ratio <= 1.2


@pytest.mark.parametrize("k", [3, 4, 5])
@pytest.mark.parametrize("p", [1.5, 2, 4])
def test_estimators_agree_on_random_shell_field(
    shell_grid: GridSpec,
    rng: np.random.Generator,
    k: int,
    p: float,
) -> None:
    field = _shell_field(shell_grid, rng, k)

    packet = hpfio_norm_packet(field, 0.0, p, k)
    quadrature = hpfio_norm_quadrature(field, 0.0, p)

    assert 0.25 <= packet / quadrature <= 4


def test_packet_norm_is_monotone_in_s(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(fine_grid, rng, 3)

    values = [hpfio_norm_packet(field, s, 3, 3) for s in (-0.5, 0.0, 0.5, 1.0)]

    assert values == sorted(values)


def test_packet_norm_runs_directions_concurrently(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(fine_grid, rng, 3)

    serial = hpfio_norm_packet(field, 0.0, 3, 3)
    threaded = hpfio_norm_packet(field, 0.0, 3, 3, max_workers=4)

    assert threaded == serial


def test_packet_norm_rejects_field_outside_shell(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(fine_grid, rng, 2)

    with pytest.raises(SupportViolationError) as err:
        hpfio_norm_packet(field, 0.0, 2, 4)

    assert "outside shell k=4" in str(err.value)


@pytest.mark.parametrize("p", [1, "inf"])
def test_estimators_reject_endpoint_exponents(small_grid: GridSpec, p: object) -> None:
    field = plane_wave(small_grid, (3, 1))

    with pytest.raises(InvalidExponentError) as err:
        hpfio_norm_quadrature(field, 0.0, p)

    assert "open range" in str(err.value)


def test_sobolev_norm_without_smoothness_is_lp_norm(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)

    assert sobolev_norm(field, 0.0, 3) == pytest.approx(lp_norm(field, 3), rel=1e-12)


def test_sobolev_norm_of_plane_wave(small_grid: GridSpec) -> None:
    wave = plane_wave(small_grid, (3, -2))
    radius = small_grid.frequency_step * math.hypot(3, -2)

    value = sobolev_norm(wave, 1.0, 2)

    expected = math.sqrt(1 + radius**2) * lp_norm(wave, 2)
    assert value == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("s", [-1.0, 0.5, 1.0])
def test_sobolev_norm_scales_with_shell(
    fine_grid: GridSpec,
    rng: np.random.Generator,
    s: float,
) -> None:
    k = 3
    field = _shell_field(fine_grid, rng, k)

    ratio = sobolev_norm(field, s, 2) / lp_norm(field, 2)
    bounds = sorted((2.0 ** ((k - 1) * s), 2.0 ** ((k + 1) * s)))

    assert bounds[0] * 0.95 <= ratio <= bounds[1] * 1.05


def test_sobolev_norm_rejects_infinity(small_grid: GridSpec) -> None:
    with pytest.raises(InvalidExponentError):
        sobolev_norm(plane_wave(small_grid, (1, 0)), 0.0, "inf")


def test_sup_norm_proxy_of_plane_wave(small_grid: GridSpec) -> None:
    wave = plane_wave(small_grid, (4, 0), 2.0)
    radius = 4 * small_grid.frequency_step

    assert sup_norm_proxy(wave, 2.0) == pytest.approx(2.0 * (1 + radius**2), rel=1e-12)


def test_embedding_ratios_are_one_at_p_two(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    witness = Witness("random-0", "random", 3, _shell_field(fine_grid, rng, 3))

    rows = embedding_report([witness], 2, estimator="quadrature")

    assert len(rows) == 1
    assert rows[0].field_id == "random-0"
    assert rows[0].forward == pytest.approx(1.0, rel=1e-9)
    assert rows[0].backward == pytest.approx(1.0, rel=1e-9)


def test_embedding_ratios_are_bounded_at_p_four(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    witnesses = [
        Witness(f"random-{k}", "random", k, _shell_field(fine_grid, rng, k))
        for k in (2, 3)
    ]

    rows = embedding_report(witnesses, 4)

    assert [row.k for row in rows] == [2, 3]
    assert all(row.forward > 0.1 for row in rows)
    assert all(row.backward > 0.1 for row in rows)


def test_norm_records_cover_every_estimator(
    fine_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    witness = Witness("random-0", "random", 3, _shell_field(fine_grid, rng, 3))

    records = norm_records([witness], 0.0, "3/2")

    assert [record.estimator for record in records] == ["packet", "quadrature"]
    assert {record.p for record in records} == {"1.5"}
    assert all(record.value > 0 for record in records)
