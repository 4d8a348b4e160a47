"""Protocol contract for time-indexed operator families."""

from typing import Protocol

from fiolab.lattice.grid import GridSpec
from fiolab.symbols.multipliers import MultiplierSpec


class TimeFamily(Protocol):
    """Contract for a family t -> T_t of Fourier multipliers."""

    @property
    def label(self) -> str:
        """Short family name used in logs and reports."""
        ...

    def symbol(self, grid: GridSpec, t: float) -> MultiplierSpec:
        """
        Tabulate the symbol of T_t on a lattice.

        Args:
            grid: Lattice description.
            t: Time or dilation parameter.

        Returns:
            MultiplierSpec: Tabulated symbol of T_t.

        """
        ...
