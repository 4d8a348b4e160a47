"""Runtime settings for fiolab numerics and experiment execution."""

from dataclasses import dataclass

from .exceptions import FioLabConfigurationError

MAX_TIME_RESOLUTION = 0.25
MIN_QUADRATURE_OVERSAMPLING = 2.0


@dataclass(frozen=True, slots=True)
class LabSettings:
    """
    Configuration container for fiolab runtime behavior.

    Attributes:
        time_resolution: Constant c0 in the time-grid rule dt <= c0 * 2^-k.
        fft_workers: Worker count handed to ``scipy.fft`` transforms.
        max_workers: Thread-pool size used to evaluate shells of a sweep.
        quadrature_oversampling: Direction-grid refinement for the quadrature
            estimator; spacing is 2^(-k_max/2) divided by this factor.
        boundary_tolerance: Boundary-to-peak ratio above which a witness field
            is reported as leaking through the torus boundary.
        support_tolerance: Spectral energy fraction allowed outside a shell
            before the shell estimator refuses the field.

    """

    time_resolution: float = MAX_TIME_RESOLUTION
    fft_workers: int = 1
    max_workers: int = 4
    quadrature_oversampling: float = 4.0
    boundary_tolerance: float = 1e-8
    support_tolerance: float = 1e-8

    def __post_init__(self) -> None:
        """
        Validate settings values after dataclass initialization.

        Raises:
            FioLabConfigurationError: If any numeric setting is out of valid range.

        """
        if not 0 < self.time_resolution <= MAX_TIME_RESOLUTION:
            raise FioLabConfigurationError.invalid_time_resolution()
        if self.fft_workers <= 0:
            raise FioLabConfigurationError.invalid_fft_workers()
        if self.max_workers <= 0:
            raise FioLabConfigurationError.invalid_max_workers()
        if self.quadrature_oversampling < MIN_QUADRATURE_OVERSAMPLING:
            raise FioLabConfigurationError.invalid_quadrature_oversampling()
        if self.boundary_tolerance <= 0:
            raise FioLabConfigurationError.invalid_tolerance("boundary_tolerance")
        if self.support_tolerance <= 0:
            raise FioLabConfigurationError.invalid_tolerance("support_tolerance")
