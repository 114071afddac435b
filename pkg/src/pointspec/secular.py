"""Secular condition for the point interaction over a solvable background.

Matching the wave function and its derivative across the origin, with the
delta and delta-prime strengths (a, b) folded in, gives a linear system for
the three matching constants.  Its 3x3 determinant,

    | 2                    -1 - s (b/2)(B - C)    0                  |
    | -1                   1 + (a/2) A + (b/2) C  (b/2) A            |
    | 0                    (a/2)(B + C) + b D     1 + (b/2)(B + C)   |

vanishes exactly at the discrete energies of the full Hamiltonian.  A, B,
C, D are the Green coefficients of the background at energy E.

The factor s multiplying (b/2)(B - C) in the (1, 2) entry could not be
fixed from the backgrounds with B = C = 0, where it drops out.  The free
background pins s = -1 there through the exact bound state
E = -4 a^2 / (4 + b^2)^2; the uniform field pins s = +1 through the known
ionization threshold at a = b = 1.  The sign is therefore carried per
model by ``orientation_sign``.

When couplings or backgrounds degenerate the determinant collapses to a
scalar condition; ``reduced`` evaluates those closed forms:

    b = 0 (any model):      1 + a A
    free:                   1 + a A - b^2 A D
    harmonic (alpha = gamma_ratio(E/k)):
                            b^2 alpha^2 + 2 (a/sqrt(k)) alpha + 4
    square well (a != 0):   tan(c sqrt(E))/sqrt(E) - (b^2 - q)/(2 a),
                            q = 4 pi (paper) or 4 (spectral)

The harmonic quadratic equals 4 times the full determinant; the other
reduced forms share roots with it but not scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .greens import PoleOfBackgroundError, coefficients
from .models import Coupling, Free, Harmonic, LinearField, PotentialModel, SquareWell
from .specfun import PoleError, gamma_ratio

__all__ = [
    "SecularForm",
    "SecularValue",
    "full_determinant",
    "orientation_sign",
    "reduced",
]

_NAN = complex(float("nan"), 0.0)


class SecularForm(Enum):
    FULL_DETERMINANT = "full"
    REDUCED_B_ZERO = "b_zero"
    REDUCED_BC_ZERO = "bc_zero"
    REDUCED_FREE = "free"
    REDUCED_SQUARE_WELL = "square_well"


@dataclass(frozen=True)
class SecularValue:
    """One evaluation of a secular function.

    ``pole_flag`` set means E sat on a background eigenvalue and ``value``
    is NaN; callers scanning a grid treat such samples as masked.
    """

    value: complex
    form: SecularForm
    pole_flag: bool = False


def orientation_sign(model: PotentialModel) -> float:
    """Sign s of the (b/2)(B - C) term in the (1, 2) matrix entry."""
    return -1.0 if isinstance(model, Free) else 1.0


def full_determinant(
    model: PotentialModel, coupling: Coupling, E: complex, convention: str = "paper"
) -> SecularValue:
    """Evaluate the 3x3 matching determinant at energy E.

    Expanded along the first column; the (1, 3) and (3, 1) entries vanish,
    so det = 2 (m22 m33 - m23 m32) + m12 m33.
    """
    try:
        g = coefficients(model, E, convention=convention)
    except PoleOfBackgroundError:
        return SecularValue(_NAN, SecularForm.FULL_DETERMINANT, True)
    a, b = coupling.a, coupling.b
    s = orientation_sign(model)
    m12 = -1.0 - s * 0.5 * b * (g.B - g.C)
    m22 = 1.0 + 0.5 * a * g.A + 0.5 * b * g.C
    m23 = 0.5 * b * g.A
    m32 = 0.5 * a * (g.B + g.C) + b * g.D
    m33 = 1.0 + 0.5 * b * (g.B + g.C)
    det = 2.0 * (m22 * m33 - m23 * m32) + m12 * m33
    return SecularValue(det, SecularForm.FULL_DETERMINANT, False)


def reduced(
    model: PotentialModel, coupling: Coupling, E: complex, convention: str = "paper"
) -> SecularValue:
    """Evaluate the collapsed scalar secular condition where one exists.

    Raises
    ------
    ValueError
        LinearField with b != 0 (no collapse there), or the square-well
        form with a = 0.
    """
    a, b = coupling.a, coupling.b
    if b == 0.0:
        form = SecularForm.REDUCED_B_ZERO
        try:
            g = coefficients(model, E, convention=convention)
        except PoleOfBackgroundError:
            return SecularValue(_NAN, form, True)
        return SecularValue(1.0 + a * g.A, form)
    if isinstance(model, Free):
        form = SecularForm.REDUCED_FREE
        try:
            g = coefficients(model, E, convention=convention)
        except PoleOfBackgroundError:
            return SecularValue(_NAN, form, True)
        return SecularValue(1.0 + a * g.A - b * b * g.A * g.D, form)
    if isinstance(model, Harmonic):
        form = SecularForm.REDUCED_BC_ZERO
        try:
            alpha = gamma_ratio(E / model.k)
        except PoleError:
            return SecularValue(_NAN, form, True)
        value = b * b * alpha * alpha + 2.0 * (a / math.sqrt(model.k)) * alpha + 4.0
        return SecularValue(value, form)
    if isinstance(model, SquareWell):
        form = SecularForm.REDUCED_SQUARE_WELL
        if a == 0.0:
            raise ValueError("square-well reduced form needs a != 0")
        try:
            g = coefficients(model, E, convention=convention)
        except PoleOfBackgroundError:
            return SecularValue(_NAN, form, True)
        if convention == "spectral":
            tan_over_root = 2.0 * g.A
            q = 4.0
        else:
            tan_over_root = 2.0 * math.pi * g.A
            q = 4.0 * math.pi
        return SecularValue(tan_over_root - (b * b - q) / (2.0 * a), form)
    raise ValueError(f"no reduced secular form for {model.label()} with b != 0")
