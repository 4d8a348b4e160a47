"""Witness ensembles drawn at one shell."""

import numpy as np

from fiolab.hpfio.models import Witness
from fiolab.lattice.grid import GridSpec
from fiolab.packets.models import KnappSpec, WavePacketSpec
from fiolab.packets.synthesis import make_knapp_sum, make_packet, random_shell_field

from .config import PacketsConfig
from .types import WitnessKind


def shell_seed(seed: int, k: int, index: int = 0) -> int:
    """
    Derive the generator seed of one witness from the run seed.

    Args:
        seed: Run seed.
        k: Shell index.
        index: Position of the witness among those drawn at the same shell.

    Returns:
        int: Seed independent of the evaluation order of shells.

    """
    return int(np.random.SeedSequence([seed, k, index]).generate_state(1, np.uint64)[0])


def make_witness(
    kind: WitnessKind,
    grid: GridSpec,
    k: int,
    packets: PacketsConfig,
    seed: int,
    workers: int = 1,
) -> Witness:
    """
    Build one member of the witness ensemble.

    Args:
        kind: ``packet``, ``knapp`` or ``random``.
        grid: Lattice description.
        k: Shell index.
        packets: Envelope, cone and axis settings.
        seed: Run seed, used by random witnesses.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Witness: Shell-localized field.

    Raises:
        PacketConstructionError: If the shell cannot be represented on the grid.

    """
    axis = packets.direction(grid.dim)
    if kind == "packet":
        spec = WavePacketSpec(k=k, direction=axis, envelope=packets.envelope)
        field = make_packet(spec, grid, workers)
    elif kind == "knapp":
        cone = KnappSpec(
            k=k,
            axis=axis,
            aperture=packets.aperture,
            envelope=packets.envelope,
        )
        field = make_knapp_sum(cone, grid, workers=workers).field
    else:
        field = random_shell_field(grid, k, shell_seed(seed, k), workers)
    return Witness(field_id=f"{kind}_k{k}", kind=kind, k=k, field=field)
