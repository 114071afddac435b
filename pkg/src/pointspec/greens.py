"""Green-function boundary coefficients at the origin.

For each background the four numbers

    A = G0(0+, 0) = G0(0-, 0)      (G0 continuous at the origin)
    B = dG0/dx' (0+, 0)
    C = dG0/dx' (0-, 0)
    D = d^2 G0/dx dx' (0+, 0)

determine the secular determinant.  Closed forms:

LinearField (z = -E/F^(2/3)):
    A = -(pi/F^(1/3)) Ai(z) Bi(z)      B = -pi Ai(z) Bi'(z)
    C = -pi Ai'(z) Bi(z)               D = -pi F^(1/3) Ai'(z) Bi'(z)
Free (branch Im sqrt(E) > 0):
    A = 1/(2 i sqrt(E))   B = 1/2   C = -1/2   D = -i sqrt(E)/2
Harmonic:
    A = gamma_ratio(E/k) / (2 sqrt(k))   B = C = 0   D = -k A
SquareWell (half-width c; E < 0 continues via tan(ix) = i tanh(x)):
    A = tan(c sqrt(E)) / (2 pi sqrt(E))  B = C = 0
    D = sqrt(E) / (2 tan(c sqrt(E)))

The square-well normalization follows the closed form above by default
("paper" convention, A D = 1/(4 pi)); the spectral-sum oracle measures a
constant ratio of pi between that A and the eigenfunction expansion, and
``convention="spectral"`` selects the rescaled form A -> pi A with D kept,
restoring A D = 1/4.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .models import Free, Harmonic, LinearField, PotentialModel, SquareWell
from .specfun import PoleError, airy, gamma_ratio

__all__ = [
    "CONVENTIONS",
    "GreenCoefficients",
    "PoleOfBackgroundError",
    "background_poles",
    "coefficients",
]

CONVENTIONS = ("paper", "spectral")

# |E - E_pole| < 1e-9 * max(1, |E|) counts as sitting on the pole.
_POLE_TOL = 1e-9


class PoleOfBackgroundError(ValueError):
    """E coincides with an unperturbed eigenvalue of the background.

    Attributes
    ----------
    e_pole : float
        The offending eigenvalue.
    """

    def __init__(self, model: PotentialModel, E: complex, e_pole: float):
        self.e_pole = e_pole
        super().__init__(
            f"{model.label()}: E = {E} sits on the background eigenvalue {e_pole!r}"
        )


@dataclass(frozen=True)
class GreenCoefficients:
    A: complex
    B: complex
    C: complex
    D: complex


def _sqrt_upper(E: complex) -> complex:
    """sqrt(E) on the branch with Im >= 0 (decaying Green function).

    The principal square root already lands in the closed upper half-plane
    except on the negative-imaginary side; flipping the sign there keeps
    conjugate energies mapping to conjugate-reflected roots.
    """
    s = cmath.sqrt(E)
    if s.imag < 0.0:
        s = -s
    return s


def _near(E: complex, pole: float) -> bool:
    return abs(E - pole) < _POLE_TOL * max(1.0, abs(E))


def background_poles(model: PotentialModel, e_min: float, e_max: float) -> list[float]:
    """Unperturbed eigenvalues (coefficient poles) inside [e_min, e_max].

    Free has the branch point E = 0 listed as its single "pole"; the
    LinearField coefficients are entire in E, so the list is empty.
    SquareWell lists every level: odd n are poles of tan (A diverges),
    even n are zeros of tan (D diverges).
    """
    poles: list[float] = []
    if isinstance(model, Harmonic):
        n = 0
        while True:
            p = model.k * (n + 0.25)  # numerator poles of gamma_ratio(E/k)
            if p > e_max:
                break
            if p >= e_min:
                poles.append(p)
            n += 1
    elif isinstance(model, SquareWell):
        n = 1
        while True:
            p = (n * math.pi / (2.0 * model.c)) ** 2
            if p > e_max:
                break
            if p >= e_min:
                poles.append(p)
            n += 1
    elif isinstance(model, Free):
        if e_min <= 0.0 <= e_max:
            poles.append(0.0)
    return poles


def _linear_field(model: LinearField, E: complex) -> GreenCoefficients:
    if E.imag != 0.0:
        raise ValueError("LinearField coefficients are defined for real E")
    f13 = model.F ** (1.0 / 3.0)
    z = -E.real / (f13 * f13)
    q = airy(z)  # AiryRangeError propagates to the caller
    return GreenCoefficients(
        A=complex(-(math.pi / f13) * q.ai * q.bi),
        B=complex(-math.pi * q.ai * q.bi_prime),
        C=complex(-math.pi * q.ai_prime * q.bi),
        D=complex(-math.pi * f13 * q.ai_prime * q.bi_prime),
    )


def _free(model: Free, E: complex) -> GreenCoefficients:
    if _near(E, 0.0):
        raise PoleOfBackgroundError(model, E, 0.0)
    s = _sqrt_upper(E)
    return GreenCoefficients(
        A=1.0 / (2j * s),
        B=complex(0.5),
        C=complex(-0.5),
        D=-0.5j * s,
    )


def _harmonic(model: Harmonic, E: complex) -> GreenCoefficients:
    k = model.k
    try:
        ratio = gamma_ratio(E / k)
    except PoleError as exc:
        raise PoleOfBackgroundError(model, E, k * (exc.index + 0.25)) from exc
    A = ratio / (2.0 * math.sqrt(k))
    return GreenCoefficients(A=A, B=complex(0.0), C=complex(0.0), D=-k * A)


def _square_well(model: SquareWell, E: complex, convention: str) -> GreenCoefficients:
    if E.imag != 0.0:
        raise ValueError("SquareWell coefficients are defined for real E")
    e = E.real
    c = model.c
    level = math.pi / (2.0 * c)
    if e > 0.0:
        n = round(math.sqrt(e) / level)
        if n >= 1 and _near(e, (n * level) ** 2):
            raise PoleOfBackgroundError(model, E, (n * level) ** 2)
    x2 = c * c * e  # (c sqrt(E))^2, sign carries the continuation
    if abs(x2) < 1e-12:
        # tan(x)/x -> 1 and x/tan(x) -> 1; both limits are regular.
        tan_over = c * (1.0 + x2 / 3.0)
        over_tan = (1.0 - x2 / 3.0) / c
    elif e > 0.0:
        x = c * math.sqrt(e)
        t = math.tan(x)
        tan_over = t / math.sqrt(e)
        over_tan = math.sqrt(e) / t
    else:
        kappa = math.sqrt(-e)
        th = math.tanh(c * kappa)
        tan_over = th / kappa
        over_tan = kappa / th
    A = tan_over / (2.0 * math.pi)
    D = over_tan / 2.0
    if convention == "spectral":
        A *= math.pi
    return GreenCoefficients(A=complex(A), B=complex(0.0), C=complex(0.0), D=complex(D))


def coefficients(
    model: PotentialModel, E: complex, convention: str = "paper"
) -> GreenCoefficients:
    """Evaluate (A, B, C, D) for the given background at energy E.

    Parameters
    ----------
    model : PotentialModel
    E : complex
        Real for LinearField and SquareWell; real or complex for Harmonic
        and Free.
    convention : {"paper", "spectral"}
        SquareWell normalization switch; see module docstring.  Ignored by
        the other backgrounds.

    Raises
    ------
    PoleOfBackgroundError
        E within 1e-9 * max(1, |E|) of an unperturbed eigenvalue.
    AiryRangeError
        LinearField with z = -E/F^(2/3) outside the Airy range.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown green convention {convention!r}")
    E = complex(E)
    if isinstance(model, LinearField):
        return _linear_field(model, E)
    if isinstance(model, Free):
        return _free(model, E)
    if isinstance(model, Harmonic):
        return _harmonic(model, E)
    if isinstance(model, SquareWell):
        return _square_well(model, E, convention)
    raise TypeError(f"unknown potential model {model!r}")
