"""Green-function contact coefficients for each background."""

import cmath
import math
import random

import pytest

import _frozen as fz
from pointspec.greens import (
    PoleOfBackgroundError,
    background_poles,
    coefficients,
)
from pointspec.models import Free, Harmonic, LinearField, SquareWell
from pointspec.specfun import AiryRangeError


# -------------------------------------------------------- linear field


def test_linear_field_frozen_value():
    got = coefficients(LinearField(1.0), 0.0).A
    assert abs(got - fz.LINEAR_A_F1_E0) < 1e-14 * abs(fz.LINEAR_A_F1_E0)


def test_linear_field_wronskian_identity():
    # B - C = -1 for every field strength and energy
    rng = random.Random(40)
    for _ in range(60):
        field = 10.0 ** rng.uniform(-2.0, 2.0)
        e = rng.uniform(-5.0, 5.0) * field ** (2.0 / 3.0)
        g = coefficients(LinearField(field), e)
        assert abs(g.B - g.C + 1.0) < 1e-12


def test_linear_field_all_components_real_and_finite():
    g = coefficients(LinearField(0.5), -1.3)
    for part in (g.A, g.B, g.C, g.D):
        assert part.imag == 0.0
        assert math.isfinite(part.real)


def test_linear_field_rejects_complex_energy():
    with pytest.raises(ValueError):
        coefficients(LinearField(1.0), 1.0 + 0.5j)


def test_linear_field_propagates_airy_range():
    # weak field pushes z = -E/F^(2/3) past the Bi overflow edge
    with pytest.raises(AiryRangeError):
        coefficients(LinearField(1.0e-6), -1.0)


# ---------------------------------------------------------------- free


def test_free_closed_forms_negative_energy():
    rng = random.Random(41)
    for _ in range(60):
        e = -(10.0 ** rng.uniform(-6.0, 3.0))
        g = coefficients(Free(), e)
        kappa = math.sqrt(-e)
        assert abs(g.A + 1.0 / (2.0 * kappa)) < 1e-15 / kappa
        assert g.B == 0.5
        assert g.C == -0.5
        assert abs(g.D - kappa / 2.0) < 1e-15 * kappa
        assert abs(g.A * g.D + 0.25) < 1e-14


def test_free_positive_energy_outgoing_branch():
    g = coefficients(Free(), 4.0)
    # sqrt(E) = 2 on the upper branch: A = 1/(4i), D = -i
    assert abs(g.A - complex(0.0, -0.25)) < 1e-15
    assert abs(g.D - complex(0.0, -1.0)) < 1e-15
    assert abs(g.A * g.D + 0.25) < 1e-14


def test_free_complex_energy_keeps_product():
    rng = random.Random(42)
    for _ in range(40):
        e = complex(rng.uniform(-4.0, 4.0), rng.uniform(-3.0, 3.0))
        if abs(e) < 1e-3:
            continue
        g = coefficients(Free(), e)
        assert abs(g.A * g.D + 0.25) < 1e-12
        root = -2.0 * g.D  # i sqrt(E) recovered from D
        assert abs(root * root + e) < 1e-10 * max(1.0, abs(e))


# ------------------------------------------------------------ harmonic


def test_harmonic_frozen_grid():
    for (k, e), want in fz.HARMONIC_A_REFERENCE.items():
        got = coefficients(Harmonic(k), e).A
        assert abs(got - want) < 1e-13 * abs(want), (k, e)


def test_harmonic_structure():
    rng = random.Random(43)
    for _ in range(50):
        k = 10.0 ** rng.uniform(-1.0, 1.0)
        e = rng.uniform(-6.0, 6.0) * k
        if min(abs(e / k - (n + 0.25)) for n in range(0, 8)) < 1e-2:
            continue
        g = coefficients(Harmonic(k), e)
        assert g.B == 0.0
        assert g.C == 0.0
        assert abs(g.D + k * g.A) <= 1e-12 * max(1.0, k * abs(g.A))


def test_harmonic_pole_translation():
    with pytest.raises(PoleOfBackgroundError) as err:
        coefficients(Harmonic(2.0), 2.0 * 3.25)
    assert abs(err.value.e_pole - 6.5) < 1e-9


# --------------------------------------------------------- square well


def test_square_well_product_paper_convention():
    rng = random.Random(44)
    c = 1.0
    for _ in range(60):
        e = rng.uniform(0.01, 30.0)
        if min(abs(e - p) for p in background_poles(SquareWell(c), 0.0, 40.0)) < 5e-2:
            continue
        g = coefficients(SquareWell(c), e)
        assert abs(g.A * g.D - 1.0 / (4.0 * math.pi)) < 1e-12


def test_square_well_small_energy_limit():
    for c in (0.5, 1.0, 3.0):
        g = coefficients(SquareWell(c), 1e-14)
        assert abs(g.A - c / (2.0 * math.pi)) < 1e-12
        gneg = coefficients(SquareWell(c), -1e-14)
        assert abs(gneg.A - g.A) < 1e-12


def test_square_well_negative_energy_tanh_form():
    c = 1.0
    for kappa in (0.3, 1.0, 2.0, 7.0):
        g = coefficients(SquareWell(c), -kappa * kappa)
        want = math.tanh(c * kappa) / (2.0 * math.pi * kappa)
        assert abs(g.A - want) < 1e-13 * max(abs(want), 1e-6)
        assert abs(g.D - kappa / (2.0 * math.tanh(c * kappa))) < 1e-12


def test_square_well_spectral_convention_scales_a_only():
    e = 2.2
    paper = coefficients(SquareWell(1.0), e, convention="paper")
    spec = coefficients(SquareWell(1.0), e, convention="spectral")
    assert abs(spec.A - math.pi * paper.A) < 1e-14
    assert spec.D == paper.D
    assert abs(spec.A * spec.D - 0.25) < 1e-12


def test_square_well_poles_both_parities():
    c = 1.0
    lvl = (math.pi / 2.0) ** 2
    for n in (1, 2, 3, 6):
        with pytest.raises(PoleOfBackgroundError) as err:
            coefficients(SquareWell(c), n * n * lvl)
        assert abs(err.value.e_pole - n * n * lvl) < 1e-9 * n * n * lvl


def test_unknown_convention_rejected():
    with pytest.raises(ValueError):
        coefficients(SquareWell(1.0), 1.0, convention="other")


# ------------------------------------------------------------ pole lists


def test_background_pole_lists():
    assert background_poles(LinearField(2.0), -100.0, 100.0) == []
    assert background_poles(Free(), -1.0, 1.0) == [0.0]
    assert background_poles(Free(), 0.5, 1.0) == []

    harm = background_poles(Harmonic(2.0), 0.0, 10.0)
    assert harm == [0.5, 2.5, 4.5, 6.5, 8.5]

    lvl = (math.pi / 2.0) ** 2
    well = background_poles(SquareWell(1.0), 0.0, 10.0 * lvl)
    assert well == [lvl, 4.0 * lvl, 9.0 * lvl]


def test_pole_error_carries_context():
    try:
        coefficients(Harmonic(1.0), 0.25)
    except PoleOfBackgroundError as err:
        assert err.e_pole == pytest.approx(0.25)
        assert isinstance(err, ValueError)
    else:
        raise AssertionError("expected a pole error at E = k/4")
