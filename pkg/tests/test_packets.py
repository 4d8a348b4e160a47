import math

import numpy as np
import pytest

from fiolab.exceptions import PacketConstructionError
from fiolab.lattice import (
    GridSpec,
    boundary_leakage,
    energy_outside,
    frequency_axes,
    frequency_norm,
    lp_norm,
    make_grid,
)
from fiolab.packets import (
    KnappSpec,
    WavePacketSpec,
    calibrate_theta,
    constant_spread,
    envelope_l1,
    envelope_peak,
    flow_residual,
    knapp_directions,
    make_knapp_sum,
    make_packet,
    make_tube,
    random_shell_field,
    tube_lower_bound,
)
from fiolab.propagate import TimeGrid
from fiolab.symbols import PhaseSpec, shell_mask, sphere_area

ENVELOPE = 0.125
WIDE_ENVELOPE = 0.25
EXPECTED_TUBE_POINTS_K4 = 33 * 129


@pytest.fixture
def packet_grid() -> GridSpec:
    return make_grid(2, 1024, 64.0)


@pytest.fixture
def tube_grid() -> GridSpec:
    return make_grid(2, 1024, 8.0)


def _east(k: int) -> WavePacketSpec:
    return WavePacketSpec(k=k, direction=(1.0, 0.0))


def _declared_support(grid: GridSpec, k: int) -> np.ndarray:
    along = np.broadcast_to(frequency_axes(grid)[0], grid.shape)
    radius = frequency_norm(grid)
    safe = np.where(radius > 0, radius, 1.0)
    chord = np.sqrt(np.maximum(2.0 - 2.0 * along / safe, 0.0))
    return shell_mask(grid, k) & (chord <= 2.0 ** (-k / 2 - 1))


def test_envelope_l1_matches_closed_form_in_the_plane() -> None:
    assert envelope_l1(2, ENVELOPE) == pytest.approx(math.pi * ENVELOPE**2 / 2)
    assert envelope_l1(3, 2 * ENVELOPE) == pytest.approx(8 * envelope_l1(3, ENVELOPE))


def test_packet_peaks_at_its_center(packet_grid: GridSpec) -> None:
    packet = make_packet(_east(5), packet_grid)
    middle = (packet_grid.points_per_axis // 2,) * 2

    peak = float(np.abs(packet.samples).max())

    assert abs(packet.samples[middle]) == pytest.approx(peak, rel=1e-12)
    assert peak == pytest.approx(envelope_peak(2, ENVELOPE), rel=1e-3)


def test_packet_spectrum_stays_in_declared_support(packet_grid: GridSpec) -> None:
    for k in (3, 4, 5):
        packet = make_packet(_east(k), packet_grid)

        assert energy_outside(packet, _declared_support(packet_grid, k)) <= 1e-10


def _shell_box(k: int) -> GridSpec:
    return make_grid(2, 1024, 2.0 ** (11 - k))


@pytest.mark.parametrize(
    ("p", "expected"),
    [(1.25, -1.2), (2, -0.75), (4, -0.375), (6, -0.25), ("inf", 0.0)],
)
def test_packet_norm_follows_scaling_law(p: object, expected: float) -> None:
    shells = list(range(3, 9))
    norms = [lp_norm(make_packet(_east(k), _shell_box(k)), p) for k in shells]

    slope = np.polyfit(shells, np.log2(norms), 1)[0]

    assert slope == pytest.approx(expected, abs=0.05)


def test_packet_matches_its_periodization_on_a_larger_box() -> None:
    box = make_grid(2, 512, 32.0)
    larger = make_grid(2, 1024, 64.0)
    packet = make_packet(_east(5), box)
    reference = make_packet(_east(5), larger)
    block = np.s_[240:272, 240:272]
    shifted = np.s_[496:528, 496:528]

    difference = np.abs(packet.samples[block] - reference.samples[shifted]).max()

    peak = float(np.abs(packet.samples).max())
    assert difference <= 4 * boundary_leakage(packet) * peak + 1e-12
    assert boundary_leakage(reference) < boundary_leakage(packet)


def test_packet_rejects_shell_beyond_nyquist(small_grid: GridSpec) -> None:
    with pytest.raises(PacketConstructionError) as err:
        make_packet(_east(4), small_grid)

    assert "beyond Nyquist" in str(err.value)


def test_packet_rejects_wrong_direction_size(small_grid: GridSpec) -> None:
    with pytest.raises(PacketConstructionError) as err:
        make_packet(WavePacketSpec(k=2, direction=(1.0, 0.0, 0.0)), small_grid)

    assert "2 components" in str(err.value)


@pytest.mark.parametrize("envelope", [0.0, 0.5])
def test_packet_spec_rejects_envelope_out_of_range(envelope: float) -> None:
    with pytest.raises(PacketConstructionError) as err:
        WavePacketSpec(k=3, direction=(1.0, 0.0), envelope=envelope)

    assert "(0, 1/3]" in str(err.value)


def test_packet_spec_normalizes_direction() -> None:
    spec = WavePacketSpec(k=3, direction=(3.0, 4.0))

    assert spec.direction == pytest.approx((0.6, 0.8))

    with pytest.raises(PacketConstructionError):
        WavePacketSpec(k=3, direction=(0.0, 0.0))


def test_degenerate_cone_gives_single_packet(packet_grid: GridSpec) -> None:
    knapp = make_knapp_sum(KnappSpec(k=4, axis=(1.0, 0.0), aperture=1e-3), packet_grid)

    assert knapp.count == 1
    single = make_packet(_east(4), packet_grid)
    np.testing.assert_array_equal(knapp.field.samples, single.samples)


@pytest.mark.parametrize("k", range(4, 9))
def test_knapp_cone_count_follows_power_law(k: int) -> None:
    spec = KnappSpec(k=k, axis=(1.0, 0.0))
    expected = sphere_area(2) * 2.0 ** (k / 2) * (2 * spec.aperture) / (2 * math.pi)

    count = len(knapp_directions(spec, 2))

    assert expected / 4 <= count <= 4 * expected


def test_knapp_sum_is_orthogonal_in_l2(packet_grid: GridSpec) -> None:
    knapp = make_knapp_sum(KnappSpec(k=5, axis=(1.0, 0.0)), packet_grid, exponents=(2,))

    energy = math.fsum(dict(record.norms)["2"] ** 2 for record in knapp.records)

    assert knapp.count > 1
    assert lp_norm(knapp.field, 2) ** 2 == pytest.approx(energy, rel=1e-9)
    assert [record.index for record in knapp.records] == sorted(
        record.index for record in knapp.records
    )


def test_knapp_sum_is_reproducible_across_workers(packet_grid: GridSpec) -> None:
    spec = KnappSpec(k=5, axis=(0.0, 1.0))

    serial = make_knapp_sum(spec, packet_grid)
    threaded = make_knapp_sum(spec, packet_grid, max_workers=4)

    np.testing.assert_array_equal(serial.field.samples, threaded.field.samples)


def test_knapp_sum_rejects_empty_cone(packet_grid: GridSpec) -> None:
    between = (math.cos(math.pi / 25), math.sin(math.pi / 25))

    with pytest.raises(PacketConstructionError) as err:
        make_knapp_sum(KnappSpec(k=4, axis=between, aperture=0.01), packet_grid)

    assert "shell k=4" in str(err.value)


def test_random_shell_field_is_normalized_and_seeded(packet_grid: GridSpec) -> None:
    first = random_shell_field(packet_grid, 3, seed=7)
    second = random_shell_field(packet_grid, 3, seed=7)

    assert lp_norm(first, 2) == pytest.approx(1.0)
    assert energy_outside(first, shell_mask(packet_grid, 3)) <= 1e-12
    np.testing.assert_array_equal(first.samples, second.samples)


def test_random_shell_field_rejects_shell_beyond_nyquist(small_grid: GridSpec) -> None:
    with pytest.raises(PacketConstructionError):
        random_shell_field(small_grid, 3, seed=1)


def test_flow_residual_vanishes_at_time_zero(packet_grid: GridSpec) -> None:
    spec = _east(4)

    packet = make_packet(spec, packet_grid)
    report = flow_residual(packet, spec, PhaseSpec.euclidean(), [0.0])

    assert report.residuals[0] <= 1e-10 * envelope_peak(2, ENVELOPE)
    assert report.constant == 0.0


@pytest.mark.parametrize(
    "phase",
    [PhaseSpec.euclidean(), PhaseSpec.diagonal([1.0, 1.3])],
)
def test_flow_constant_is_uniform_in_shell(
    packet_grid: GridSpec,
    phase: PhaseSpec,
) -> None:
    times = [0.0, 0.05, 0.1, 0.2]
    reports = []
    for k in (3, 4, 5):
        spec = _east(k)
        packet = make_packet(spec, packet_grid)
        reports.append(flow_residual(packet, spec, phase, times))

    assert all(report.certified() for report in reports)
    assert all(report.gamma <= 4 * ENVELOPE**2 for report in reports)
    assert constant_spread(reports) <= 2.0


def test_calibration_accepts_largest_theta() -> None:
    grid = make_grid(2, 256, 16.0)

    assert calibrate_theta(grid, PhaseSpec.euclidean()) == pytest.approx(0.5)


def test_euclidean_tube_is_a_rectangle(tube_grid: GridSpec) -> None:
    tube = make_tube(tube_grid, 4, PhaseSpec.euclidean(), 0.5)

    assert tube.point_count == EXPECTED_TUBE_POINTS_K4
    assert tube.measure == pytest.approx(4 * 0.5**2 * 2.0**-2, rel=0.1)
    assert tube.velocity == pytest.approx((1.0, 0.0))


def test_tube_mask_is_symmetric_across_flow(tube_grid: GridSpec) -> None:
    tube = make_tube(tube_grid, 6, PhaseSpec.diagonal([1.0, 1.3]), 0.5)

    reflected = np.roll(tube.mask[:, ::-1], 1, axis=1)

    np.testing.assert_array_equal(reflected, tube.mask)


def test_tube_measure_follows_scaling_law(tube_grid: GridSpec) -> None:
    shells = np.arange(4, 9)
    phase = PhaseSpec.euclidean()
    measures = [make_tube(tube_grid, int(k), phase, 0.5).measure for k in shells]

    slope = np.polyfit(shells, np.log2(measures), 1)[0]

    assert slope == pytest.approx(-0.5, abs=0.15)


def test_tube_rejects_theta_out_of_range(tube_grid: GridSpec) -> None:
    with pytest.raises(PacketConstructionError) as err:
        make_tube(tube_grid, 4, PhaseSpec.euclidean(), 0.75)

    assert "(0, 0.5]" in str(err.value)


def test_tube_lower_bound_stays_near_envelope_peak() -> None:
    grid = make_grid(2, 256, 8.0)
    phase = PhaseSpec.euclidean()
    spec = WavePacketSpec(k=4, direction=(1.0, 0.0), envelope=WIDE_ENVELOPE)
    packet = make_packet(spec, grid)
    tube = make_tube(grid, 4, phase, 0.5)
    times = TimeGrid.for_shell(4, -0.5, 0.5)
    peak = envelope_peak(2, WIDE_ENVELOPE)

    coarse = tube_lower_bound(packet, phase, tube, times)
    fine = tube_lower_bound(packet, phase, tube, times.refined(2))
    frozen = tube_lower_bound(packet, phase, tube, TimeGrid.single(0.0))

    assert coarse >= 0.5 * peak
    assert coarse - 1e-12 * peak <= fine <= coarse * 1.02
    assert frozen < 0.0
