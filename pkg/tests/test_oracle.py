"""Eigenfunction-sum cross-check of the contact coefficient A.

These tests close the loop between the closed-form coefficients and an
independent sum over the background spectrum, which is what pins down
the normalization convention.
"""

import json
import math
import random

import pytest

import _frozen as fz
from pointspec.models import Free, Harmonic, SquareWell
from pointspec.oracle import SpectralSumReport, spectral_A


def test_harmonic_ratio_is_one():
    for (k, e), closed in fz.HARMONIC_A_REFERENCE.items():
        rep = spectral_A(Harmonic(k), e, n_terms=4000)
        assert abs(rep.ratio - 1.0) < 1e-6, (k, e)
        assert abs(rep.closed_form - closed) < 1e-12 * abs(closed)
        assert abs(rep.spectral_sum - closed) <= 10.0 * rep.tail_estimate + 1e-9


def test_harmonic_frozen_sum_value():
    rep = spectral_A(Harmonic(1.0), 0.0, n_terms=4000)
    assert abs(rep.spectral_sum - fz.HARMONIC_A_K1_E0) <= (
        10.0 * rep.tail_estimate + 1e-9
    )


def test_square_well_paper_ratio_is_one_over_pi():
    # the constant gap between sum and closed form is the convention factor
    want = 1.0 / math.pi
    ratios = []
    for e in (-2.0, -0.4, 0.7, 3.3, 5.9):
        rep = spectral_A(SquareWell(1.0), e, n_terms=2000)
        ratios.append(rep.ratio)
        assert abs(rep.ratio - want) < 1e-6, e
    assert max(ratios) - min(ratios) < 1e-6


def test_square_well_spectral_ratio_is_one():
    rep = spectral_A(SquareWell(1.0), 0.7, n_terms=2000, convention="spectral")
    assert abs(rep.ratio - 1.0) < 1e-6


def test_pole_guard_refuses_nearby_level():
    with pytest.raises(ValueError):
        spectral_A(Harmonic(1.0), 0.2501)
    with pytest.raises(ValueError):
        spectral_A(SquareWell(1.0), (math.pi / 2.0) ** 2 + 1e-5)


def test_unsupported_background_rejected():
    with pytest.raises((TypeError, ValueError)):
        spectral_A(Free(), -1.0)


def test_short_sum_warns():
    with pytest.warns(UserWarning):
        spectral_A(Harmonic(1.0), -1.0, n_terms=10)


def test_report_serializes():
    rep = spectral_A(Harmonic(2.0), -1.5, n_terms=1500)
    blob = json.dumps(rep.as_dict())
    back = json.loads(blob)
    assert back["model"] == "harmonic"
    assert back["convention"] == "paper"
    assert back["n_terms"] == 1500
    assert isinstance(back["ratio"], float)


def test_tail_estimate_shrinks_with_terms():
    small = spectral_A(Harmonic(1.0), -1.0, n_terms=600)
    large = spectral_A(Harmonic(1.0), -1.0, n_terms=3200)
    assert large.tail_estimate < small.tail_estimate
    # error really does go down, not just the estimate
    closed = small.closed_form
    assert abs(large.spectral_sum - closed) < abs(small.spectral_sum - closed)


def test_random_energies_agree_with_closed_form():
    rng = random.Random(80)
    for _ in range(15):
        k = 10.0 ** rng.uniform(-0.5, 0.5)
        e = rng.uniform(-4.0, 4.0) * k
        if min(abs(e - k * (n + 0.25)) for n in range(0, 8)) < 5e-3 * max(1.0, abs(e)):
            continue
        rep = spectral_A(Harmonic(k), e, n_terms=3000)
        assert abs(rep.ratio - 1.0) < 1e-5, (k, e)
