"""Spectra and numerical-range enclosures of memory-damped wave symbols."""

from .boxmodes import BoxDomain, Mode, enumerate_modes, min_stiffness, mode_alpha
from .enclosure import (
    EnclosureRegion,
    EssentialSpectrum,
    OnePoleStrips,
    boundary_cloud,
    enclosure_interval,
    essential_spectrum,
    one_pole_region,
)
from .errors import (
    ConfigError,
    HypothesisError,
    MemspecError,
    PoleProximityError,
    RootFindingError,
    SingularDenominatorError,
)
from .kernel import ExponentialKernel
from .pencil import (
    ModePencil,
    dense_eigenvalues,
    discretize_1d,
    nonlinear_eigenvalues_fd,
)
from .polyroots import RealPolynomial, all_roots, real_roots_in_interval
from .records import EigenvalueRecord
from .scalar import (
    DampingBound,
    ModeCoefficients,
    cleared_mode_polynomial,
    fredholm_factor,
    fredholm_factor_zeros,
    jordan_condition,
    mode_eigenvalues,
    rational_symbol,
    real_imag_residual,
    spectral_map,
)

__all__ = [
    "BoxDomain",
    "ConfigError",
    "DampingBound",
    "EigenvalueRecord",
    "EnclosureRegion",
    "EssentialSpectrum",
    "ExponentialKernel",
    "HypothesisError",
    "MemspecError",
    "Mode",
    "ModeCoefficients",
    "ModePencil",
    "OnePoleStrips",
    "PoleProximityError",
    "RealPolynomial",
    "RootFindingError",
    "SingularDenominatorError",
    "all_roots",
    "boundary_cloud",
    "cleared_mode_polynomial",
    "dense_eigenvalues",
    "discretize_1d",
    "enclosure_interval",
    "enumerate_modes",
    "essential_spectrum",
    "fredholm_factor",
    "fredholm_factor_zeros",
    "jordan_condition",
    "min_stiffness",
    "mode_alpha",
    "mode_eigenvalues",
    "nonlinear_eigenvalues_fd",
    "one_pole_region",
    "rational_symbol",
    "real_imag_residual",
    "real_roots_in_interval",
    "spectral_map",
]

__version__ = "0.1.0"
