import math

import numpy as np
import pytest
from scipy.integrate import quad

from fiolab.exceptions import InvalidSymbolError
from fiolab.lattice import (
    GridSpec,
    frequency_axes,
    frequency_norm,
    make_grid,
    nyquist_mask,
)
from fiolab.symbols import (
    AmplitudeSpec,
    ConeSpec,
    PhaseSpec,
    ball_average_profile,
    ball_volume,
    complex_mean_multiplier,
    complex_mean_profile,
    conic_cutoff,
    half_wave_multiplier,
    littlewood_paley,
    plateau,
    sphere_profile,
    sphere_ratio,
    spherical_multiplier,
    symbol_bound_constant,
)

EXPECTED_DECAY_TOLERANCE = 0.1


def _ring_maxima(
    values: np.ndarray,
    radii: np.ndarray,
    width: float,
) -> tuple[np.ndarray, np.ndarray]:
    edges = np.arange(radii[0], radii[-1], width)
    centers, maxima = [], []
    for start in edges:
        window = (radii >= start) & (radii < start + width)
        if window.any():
            centers.append(start + width / 2)
            maxima.append(np.abs(values[window]).max())
    return np.array(centers), np.array(maxima)


def test_normalized_sphere_in_three_dimensions_is_sinc() -> None:
    radii = np.array([1.0, math.pi, 10.0])

    values = sphere_profile(3, radii, normalized=True)
    np.testing.assert_allclose(values, np.sin(radii) / radii, atol=1e-12)
    assert sphere_profile(3, [0.0], normalized=True)[0] == pytest.approx(1.0)


def test_sphere_in_two_dimensions_matches_circle_quadrature() -> None:
    angles = 2 * math.pi * np.arange(512) / 512
    oracle = np.mean(np.exp(1j * 5.0 * np.cos(angles))) * 2 * math.pi

    assert sphere_profile(2, [5.0])[0] == pytest.approx(oracle.real, abs=1e-8)
    assert abs(oracle.imag) < 1e-12


def test_complex_mean_at_origin_is_ball_volume() -> None:
    for n in (2, 3):
        expected = math.pi ** (n / 2) / math.gamma(n / 2 + 1)
        assert complex_mean_profile(n, 1.0, [0.0])[0] == pytest.approx(expected)
        assert ball_volume(n) == pytest.approx(expected)


def test_ball_average_matches_direct_quadrature() -> None:
    for radius in (0.5, 3.0, 10.0):

        def integrand(y: float, r: float = radius) -> float:
            return math.cos(r * y) * 2 * math.sqrt(1 - y * y)

        oracle = quad(integrand, -1.0, 1.0, limit=200, epsabs=1e-13, epsrel=1e-13)[0]
        oracle /= math.pi
        assert ball_average_profile(2, [radius])[0] == pytest.approx(oracle, abs=1e-10)


def test_order_zero_mean_is_scaled_sphere_mean(
    small_grid: GridSpec,
    rng: np.random.Generator,
) -> None:
    sphere = spherical_multiplier(small_grid, 1.0).values
    mean = complex_mean_multiplier(small_grid, 1.0, 0.0).values
    rows = rng.integers(0, small_grid.points_per_axis, size=20)
    cols = rng.integers(0, small_grid.points_per_axis, size=20)

    expected = sphere_ratio(2) * sphere[rows, cols]
    np.testing.assert_allclose(mean[rows, cols], expected, atol=1e-10)
    assert sphere_ratio(2) == pytest.approx(math.pi)


def test_normalized_sphere_maps_constants_to_constants(small_grid: GridSpec) -> None:
    table = spherical_multiplier(small_grid, 2.0)

    assert table.values[0, 0] == pytest.approx(1.0)
    assert table.radial


def test_radial_tables_are_invariant_under_lattice_symmetries(
    small_grid: GridSpec,
) -> None:
    negate = (-np.arange(small_grid.points_per_axis)) % small_grid.points_per_axis
    for table in (
        spherical_multiplier(small_grid, 1.5).values,
        complex_mean_multiplier(small_grid, 1.0, 1.0).values,
    ):
        np.testing.assert_array_equal(table, table.T)
        np.testing.assert_array_equal(table, table[negate, :])
        np.testing.assert_array_equal(table, table[:, negate])


def test_sphere_profile_decay_slope() -> None:
    radii = np.linspace(10.0, 1000.0, 200_000)
    for n in (2, 3):
        centers, maxima = _ring_maxima(sphere_profile(n, radii), radii, 2 * math.pi)
        slope = np.polyfit(np.log(centers), np.log(maxima), 1)[0]
        assert abs(slope + (n - 1) / 2) <= EXPECTED_DECAY_TOLERANCE


def test_dilation_and_order_validation(small_grid: GridSpec) -> None:
    with pytest.raises(InvalidSymbolError) as err:
        spherical_multiplier(small_grid, 5.0)
    assert "dilation" in str(err.value)

    with pytest.raises(InvalidSymbolError):
        spherical_multiplier(small_grid, 0.0)

    with pytest.raises(InvalidSymbolError):
        complex_mean_multiplier(small_grid, 1.0, 1 + 1j)

    with pytest.raises(InvalidSymbolError):
        complex_mean_multiplier(small_grid, 1.0, -1.0)


def test_littlewood_paley_partition(small_grid: GridSpec) -> None:
    bank = littlewood_paley(small_grid)
    radius = frequency_norm(small_grid)

    assert bank.partition_residual() <= 1e-12
    assert 2.0**bank.top_index >= radius.max()
    np.testing.assert_allclose(bank.low_pass.values[radius <= 2], 1.0)
    np.testing.assert_allclose(bank.low_pass.values[radius >= 4], 0.0)

    shells = range(2, bank.top_index + 1)
    rest = bank.low_pass.values.real + sum(bank.shell(k).values.real for k in shells)
    np.testing.assert_allclose(rest, 1.0, atol=1e-12)

    for k in range(bank.top_index + 1):
        outside = (radius < 2.0 ** (k - 1)) | (radius > 2.0 ** (k + 1))
        assert np.all(bank.shell(k).values[outside] == 0)
        for j in range(k + 2, bank.top_index + 1):
            assert np.all(bank.shell(k).values * bank.shell(j).values == 0)

    assert plateau(1.0) - plateau(2.0) == 1.0


def test_conic_cutoff_values_and_smoothness() -> None:
    aperture = math.pi / 3
    amplitude = conic_cutoff((1.0, 0.0), aperture)
    grid = make_grid(2, 1024, 8)

    axis_value = amplitude.evaluate_points(np.array([[3.0, 0.0]]))
    edge = np.array([[math.cos(aperture), math.sin(aperture)]])
    outside = amplitude.evaluate_points(edge * 10)
    assert axis_value[0] == pytest.approx(1.0)
    assert outside[0] == 0.0
    assert amplitude.evaluate_points(np.array([[0.0, 0.0]]))[0] == 0.0

    components = [
        np.fft.fftshift(np.broadcast_to(c, grid.shape)) for c in frequency_axes(grid)
    ]
    values = amplitude.evaluate(components).real
    gradient = np.hypot(*np.gradient(values, grid.frequency_step))
    radius = np.hypot(*components)
    for k in range(4, 9):
        ring = np.abs(radius - 2.0**k) <= 0.05 * 2.0**k
        constant = float((gradient[ring] * aperture * radius[ring]).max())
        assert constant <= 6.0


def test_conic_cutoff_rejects_invalid_aperture() -> None:
    with pytest.raises(InvalidSymbolError) as err:
        conic_cutoff((1.0, 0.0), math.pi)
    assert "aperture" in str(err.value)

    with pytest.raises(InvalidSymbolError):
        conic_cutoff((0.0, 0.0), 0.5)


def test_symbol_bound_constants(rng: np.random.Generator) -> None:
    samples = rng.uniform(-100, 100, size=(200, 2))
    samples = samples[np.linalg.norm(samples, axis=1) >= 1]

    decaying = symbol_bound_constant(AmplitudeSpec.polyhomogeneous(-1.0), samples)
    cone = symbol_bound_constant(conic_cutoff((1.0, 0.0), math.pi / 3), samples)

    assert 1.0 <= decaying <= 3.0
    assert 1.0 <= cone < 200.0


def test_phase_homogeneity_and_curvature(rng: np.random.Generator) -> None:
    points = rng.standard_normal((50, 3))
    scales = (0.5, 2.0, 7.5)

    for phase in (PhaseSpec.euclidean(), PhaseSpec.diagonal((1.0, 1.3, 0.8))):
        assert phase.homogeneity_defect(points, scales) <= 1e-12
        assert phase.curvature_rank((0.3, -0.2, 0.9)) == 2
        assert phase.has_full_curvature(3)

    assert PhaseSpec.diagonal((1.0, 1.3)).curvature_rank((1.0, 0.0)) == 1
    assert PhaseSpec.zero().curvature_rank((1.0, 0.0)) == 0
    assert not PhaseSpec.zero().has_full_curvature(2)
    gradient = PhaseSpec.diagonal((1.0, 1.3)).gradient((1.0, 0.0))
    np.testing.assert_allclose(gradient, [1.0, 0.0])


def test_phase_rejects_invalid_matrices() -> None:
    with pytest.raises(InvalidSymbolError) as err:
        PhaseSpec.anisotropic([[1.0, 2.0], [2.0, 1.0]])
    assert "positive definite" in str(err.value)

    with pytest.raises(InvalidSymbolError):
        PhaseSpec(kind="anisotropic_quadratic")

    with pytest.raises(InvalidSymbolError):
        PhaseSpec.diagonal((1.0, 1.3)).evaluate_points(np.ones((2, 3)))


def test_half_wave_symbol_is_unimodular_times_amplitude(small_grid: GridSpec) -> None:
    amplitude = conic_cutoff((1.0, 0.0), math.pi / 4)
    table = half_wave_multiplier(small_grid, PhaseSpec.euclidean(), amplitude, 0.7)
    values = amplitude.evaluate(frequency_axes(small_grid))
    weight = np.broadcast_to(values, small_grid.shape)

    expected = np.where(nyquist_mask(small_grid), 0.0, np.abs(weight))
    np.testing.assert_allclose(table.magnitude(), expected, atol=1e-14)
    assert not table.radial

    euclidean = PhaseSpec.euclidean()
    unit = half_wave_multiplier(small_grid, euclidean, AmplitudeSpec.one(), -1.3)
    np.testing.assert_allclose(unit.magnitude(), 1.0, atol=1e-14)
    assert unit.radial


def test_half_wave_symbol_drops_nyquist_for_coned_phase(small_grid: GridSpec) -> None:
    cone = ConeSpec.about((1.0, 0.0), math.pi / 3)
    phase = PhaseSpec.euclidean(cone)

    table = half_wave_multiplier(small_grid, phase, AmplitudeSpec.one(), 0.9)

    expected = np.where(nyquist_mask(small_grid), 0.0, 1.0)
    np.testing.assert_allclose(table.magnitude(), expected, atol=1e-14)
    assert not phase.is_even()
    assert PhaseSpec.diagonal([1.0, 1.3]).is_even()
    assert not table.radial
