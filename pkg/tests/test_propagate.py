import math

import numpy as np
import pytest
from scipy.special import j0

from fiolab.exceptions import InvalidGridError, UnderResolvedTimeGridError
from fiolab.lattice import (
    Field,
    GridSpec,
    constant_field,
    filter_field,
    from_function,
    lp_norm,
    make_grid,
    plane_wave,
)
from fiolab.propagate import (
    ComplexMeanFamily,
    HalfWaveFamily,
    SphericalFamily,
    TimeGrid,
    apply_multiplier,
    ball_average,
    complex_mean,
    convergence_profile,
    evaluate_on_points,
    half_wave,
    local_smoothing_norm,
    maximal_function,
    spherical_mean,
    split_half_waves,
)
from fiolab.symbols import (
    PhaseSpec,
    conic_cutoff,
    identity_multiplier,
    shell_symbol,
    sphere_profile,
)

EXPECTED_PROBE_INDICES = ((32, 32), (36, 30), (28, 40))


def _shell_field(grid: GridSpec, rng: np.random.Generator, k: int) -> Field:
    noise = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    return filter_field(Field(grid, noise), shell_symbol(grid, k))


def _gaussian(grid: GridSpec, width: float = 1.0) -> Field:
    cx, cy = grid.center
    return from_function(
        grid,
        lambda x, y: np.exp(-((x - cx) ** 2 + (y - cy) ** 2) / width),
    )


def _point(grid: GridSpec, index: tuple[int, int]) -> np.ndarray:
    return grid.spacing * np.asarray(index, dtype=np.float64)


def test_identity_multiplier_keeps_field(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)

    result = apply_multiplier(field, identity_multiplier(small_grid))

    np.testing.assert_allclose(result.samples, field.samples, atol=1e-12)


def test_apply_multiplier_rejects_foreign_grid(small_grid: GridSpec) -> None:
    other = make_grid(2, 32, 16.0)

    with pytest.raises(InvalidGridError) as err:
        apply_multiplier(constant_field(small_grid, 1.0), identity_multiplier(other))

    assert "different grids" in str(err.value)


def test_plane_wave_is_half_wave_eigenfunction(small_grid: GridSpec) -> None:
    wave = plane_wave(small_grid, (3, -2))
    radius = small_grid.frequency_step * math.hypot(3, -2)

    result = half_wave(wave, PhaseSpec.euclidean(), t=0.7)

    expected = np.exp(0.7j * radius) * wave.samples
    np.testing.assert_allclose(result.samples, expected, atol=1e-12)


def test_half_wave_at_time_zero_is_identity(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)

    result = half_wave(field, PhaseSpec.anisotropic([[1.0, 0.0], [0.0, 1.3]]), t=0.0)

    np.testing.assert_allclose(result.samples, field.samples, atol=1e-12)


def test_half_waves_are_isometries(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    real, imaginary = rng.standard_normal((2, *small_grid.shape))
    noise = real + 1j * imaginary
    field = Field(small_grid, noise)

    phases = (PhaseSpec.euclidean(), PhaseSpec.diagonal([1.0, 1.3]), PhaseSpec.zero())
    for phase in phases:
        result = half_wave(field, phase, t=0.7)
        assert lp_norm(result, 2) == pytest.approx(lp_norm(field, 2), rel=1e-12)


def test_half_waves_form_a_group(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)
    phase = PhaseSpec.diagonal([1.0, 1.3])

    twice = half_wave(half_wave(field, phase, t=0.4), phase, t=-1.1)
    once = half_wave(field, phase, t=-0.7)

    np.testing.assert_allclose(twice.samples, once.samples, atol=1e-10)


def test_multipliers_are_linear(small_grid: GridSpec, rng: np.random.Generator) -> None:
    first = _shell_field(small_grid, rng, 1)
    second = _shell_field(small_grid, rng, 2)
    a, b = 0.5 - 2j, 1.5

    combined = spherical_mean(first.scale(a).add(second.scale(b)), 1.0)
    left = spherical_mean(first, 1.0).scale(a)
    separate = left.add(spherical_mean(second, 1.0).scale(b))

    np.testing.assert_allclose(combined.samples, separate.samples, atol=1e-12)


def test_spherical_mean_of_cosine_is_bessel_scaled(small_grid: GridSpec) -> None:
    frequency = 2 * math.pi * 4 / small_grid.box_length
    wave = from_function(small_grid, lambda x, y: np.cos(frequency * x) + 0 * y)

    result = spherical_mean(wave, 1.0)

    np.testing.assert_allclose(result.samples, j0(frequency) * wave.samples, atol=1e-10)


def test_spherical_mean_keeps_constants(small_grid: GridSpec) -> None:
    result = spherical_mean(constant_field(small_grid, 2.5), 1.7)

    np.testing.assert_allclose(result.samples, 2.5, atol=1e-12)


def test_weighted_spherical_mean_scales(small_grid: GridSpec) -> None:
    result = spherical_mean(constant_field(small_grid, 1.0), 1.0, weight=3.0)

    np.testing.assert_allclose(result.samples, 3.0, atol=1e-12)


def test_spherical_mean_matches_angular_quadrature(small_grid: GridSpec) -> None:
    cx, cy = small_grid.center
    angles = 2 * math.pi * np.arange(512) / 512
    result = spherical_mean(_gaussian(small_grid), 1.0)

    for index in EXPECTED_PROBE_INDICES:
        x, y = _point(small_grid, index)
        shifted = (x - np.cos(angles) - cx) ** 2 + (y - np.sin(angles) - cy) ** 2
        oracle = float(np.mean(np.exp(-shifted)))
        assert result.samples[index].real == pytest.approx(oracle, abs=1e-5)


def test_ball_average_matches_disc_quadrature(small_grid: GridSpec) -> None:
    cx, cy = small_grid.center
    nodes, weights = np.polynomial.legendre.leggauss(64)
    radii = (nodes + 1) / 2
    angles = 2 * math.pi * np.arange(256) / 256
    unit = complex_mean(_gaussian(small_grid), 1.0, 1.0)
    averaged = ball_average(_gaussian(small_grid), 1.0)

    for index in EXPECTED_PROBE_INDICES:
        x, y = _point(small_grid, index)
        px = x - radii[:, None] * np.cos(angles)[None, :] - cx
        py = y - radii[:, None] * np.sin(angles)[None, :] - cy
        ring = np.mean(np.exp(-(px**2 + py**2)), axis=1) * 2 * math.pi
        oracle = float(np.sum(weights / 2 * radii * ring))
        assert unit.samples[index].real == pytest.approx(oracle, rel=1e-6)
        assert averaged.samples[index].real == pytest.approx(oracle / math.pi, rel=1e-6)


def test_time_grid_resolution_rule() -> None:
    grid = TimeGrid.for_shell(2, 1.0, 2.0)

    assert grid.count == 17
    assert grid.spacing == pytest.approx(1 / 16)
    assert grid.refined(2).count == 33
    assert TimeGrid.single(0.3).spacing == 0.0


def test_time_grid_rejects_reversed_bounds() -> None:
    with pytest.raises(UnderResolvedTimeGridError) as err:
        TimeGrid(2.0, 1.0, 4)

    assert "t_min <= t_max" in str(err.value)


def test_maximal_function_rejects_coarse_grid(small_grid: GridSpec) -> None:
    with pytest.raises(UnderResolvedTimeGridError) as err:
        maximal_function(
            _gaussian(small_grid, 2.0),
            SphericalFamily(),
            TimeGrid(1.0, 2.0, 3),
        )

    assert "exceeds" in str(err.value)


def test_maximal_function_of_plane_wave_is_flat(small_grid: GridSpec) -> None:
    wave = plane_wave(small_grid, (3, 1), amplitude=0.5j)
    times = TimeGrid.for_field(wave, 0.0, 1.0)

    result = maximal_function(wave, HalfWaveFamily(PhaseSpec.euclidean()), times)

    np.testing.assert_allclose(result.values, 0.5, atol=1e-12)


def test_spherical_maximal_of_radial_bump_peaks_at_smallest_radius(
    small_grid: GridSpec,
) -> None:
    bump = _gaussian(small_grid, 2.0)
    times = TimeGrid.for_field(bump, 1.0, 2.0)

    result = maximal_function(bump, SphericalFamily(), times, max_workers=3)

    assert result.argmax_t[32, 32] == pytest.approx(1.0)
    assert result.values[32, 32] == pytest.approx(math.exp(-0.5), abs=1e-8)


def test_maximal_function_dominates_every_slice(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)
    family = HalfWaveFamily(PhaseSpec.euclidean())
    times = TimeGrid.for_field(field, 0.0, 1.0)

    result = maximal_function(field, family, times)

    for t in times.samples:
        slice_ = apply_multiplier(field, family.symbol(small_grid, float(t)))
        assert np.all(result.values >= slice_.magnitude() - 1e-12)
        assert result.norm(4) >= lp_norm(slice_, 4)


def test_maximal_function_is_stable_under_refinement(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)
    family = HalfWaveFamily(PhaseSpec.euclidean())
    times = TimeGrid.for_field(field, 0.0, 1.0)

    coarse = maximal_function(field, family, times).norm(2)
    fine = maximal_function(field, family, times.refined(2), max_workers=2).norm(2)

    assert fine >= coarse * (1 - 1e-12)
    assert fine / coarse - 1 <= 0.01


def test_convergence_profile_of_plane_wave(small_grid: GridSpec) -> None:
    wave = plane_wave(small_grid, (3, 0))
    radius = 3 * small_grid.frequency_step

    profile = convergence_profile(wave, PhaseSpec.euclidean(), [0.5, 0.25], p=2)

    for point in profile:
        expected = abs(np.exp(1j * point.delta * radius) - 1) * small_grid.box_length
        assert point.value == pytest.approx(expected, rel=1e-10)


def test_convergence_profile_is_linear_for_small_windows(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)

    wide, narrow = convergence_profile(field, PhaseSpec.euclidean(), [0.02, 0.01])

    assert wide.value > narrow.value
    assert 1.8 <= wide.value / narrow.value <= 2.2


def test_local_smoothing_norm_of_isometry(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)
    family = HalfWaveFamily(PhaseSpec.euclidean())

    value = local_smoothing_norm(field, family, TimeGrid.for_field(field, 0.0, 1.0), 2)

    assert value == pytest.approx(lp_norm(field, 2), rel=1e-10)
    single = local_smoothing_norm(field, family, TimeGrid.single(0.4), 4)
    evolved = half_wave(field, PhaseSpec.euclidean(), t=0.4)
    assert single == pytest.approx(lp_norm(evolved, 4))


def test_point_evaluation_matches_lattice_propagation(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    field = _shell_field(small_grid, rng, 2)
    phase = PhaseSpec.diagonal([1.0, 1.3])
    amplitude = conic_cutoff([1.0, 0.0], math.pi / 3)
    points = np.array([_point(small_grid, index) for index in EXPECTED_PROBE_INDICES])
    times = [-0.3, 0.0, 0.5]

    values = evaluate_on_points(field, phase, points, times, amplitude)

    for row, t in zip(values, times, strict=True):
        expected = half_wave(field, phase, amplitude, t).samples
        for value, index in zip(row, EXPECTED_PROBE_INDICES, strict=True):
            assert abs(value - expected[index]) <= 1e-10 * np.abs(expected).max()


def test_sphere_splits_into_decaying_half_waves() -> None:
    radii = np.linspace(100.0, 1000.0, 200)

    outgoing, incoming = split_half_waves(lambda r: sphere_profile(2, r), radii)

    expected = math.sqrt(2 * math.pi)
    np.testing.assert_allclose(np.abs(outgoing) * np.sqrt(radii), expected, rtol=0.03)
    np.testing.assert_allclose(np.abs(incoming) * np.sqrt(radii), expected, rtol=0.03)
    recombined = np.exp(1j * radii) * outgoing + np.exp(-1j * radii) * incoming
    np.testing.assert_allclose(recombined.real, sphere_profile(2, radii), atol=1e-12)


def test_family_labels() -> None:
    assert HalfWaveFamily(PhaseSpec.euclidean()).label == "half_wave_euclidean_norm_one"
    assert SphericalFamily().label == "sphere"
    assert ComplexMeanFamily(1.0, averaged=True).label == "ball_average"
    assert ComplexMeanFamily(0.5).label == "complex_0.5"

