"""Spectra of a point interaction (delta / delta-prime at the origin) on
exactly solvable one-dimensional backgrounds.

The library evaluates the secular determinant built from Green-function
boundary coefficients and locates bound states, quasibound states,
resonances, and the parameter thresholds where the spectrum changes
character.  Units are hbar = 2m = 1 throughout.
"""

from .models import Coupling, Free, Harmonic, LinearField, SquareWell
from .greens import GreenCoefficients, PoleOfBackgroundError, coefficients
from .secular import SecularForm, SecularValue, full_determinant, reduced
from .solver import (
    EnergyRoot,
    RootKind,
    ScanWindow,
    SweepResult,
    default_window,
    find_real_roots,
    find_resonances,
    ionization_field,
    oscillator_threshold,
    squarewell_negative_root,
    squarewell_negative_window,
    sweep,
)
from .specfun import AiryQuartet, AiryRangeError, PoleError, airy, gamma_ratio, log_gamma

__version__ = "0.1.0"

__all__ = [
    "AiryQuartet",
    "AiryRangeError",
    "Coupling",
    "EnergyRoot",
    "Free",
    "GreenCoefficients",
    "Harmonic",
    "LinearField",
    "PoleError",
    "PoleOfBackgroundError",
    "RootKind",
    "ScanWindow",
    "SecularForm",
    "SecularValue",
    "SquareWell",
    "SweepResult",
    "airy",
    "coefficients",
    "default_window",
    "find_real_roots",
    "find_resonances",
    "full_determinant",
    "gamma_ratio",
    "ionization_field",
    "log_gamma",
    "oscillator_threshold",
    "reduced",
    "squarewell_negative_root",
    "squarewell_negative_window",
    "sweep",
    "__version__",
]
