"""Root finding on the secular determinant.

Real spectra come from a guarded scan-and-bisect on the full determinant:
sample a window, split it at the background eigenvalues (where the Green
coefficients blow up), bracket sign changes between clean samples, and
bisect each bracket down to machine-level width.  Complex resonance pairs
of the harmonic background come from a damped Newton iteration on the
Gamma-function ratio.  The module also carries the closed-form threshold
helpers (oscillator resonance onset, square-well negative-energy window)
and the field-strength bisection that locates the point where the last
real root of the uniform-field problem disappears.
"""

from __future__ import annotations

import bisect as _bisect_mod
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .greens import PoleOfBackgroundError, background_poles, coefficients
from .models import Coupling, Free, Harmonic, LinearField, PotentialModel, SquareWell
from .secular import full_determinant
from .specfun import AiryRangeError, PoleError, gamma_ratio

__all__ = [
    "EnergyRoot",
    "RootKind",
    "ScanWindow",
    "SweepResult",
    "default_window",
    "find_real_roots",
    "find_resonances",
    "ionization_field",
    "oscillator_threshold",
    "squarewell_negative_root",
    "squarewell_negative_window",
    "sweep",
]

log = logging.getLogger("pointspec.solver")

# relative width at which bisection on E stops
_E_TOL = 1e-12
# grid samples inserted this close on either side of a background eigenvalue
_SPLIT_EPS = 1e-6
_MAX_SAMPLES = 500_000


class RootKind(Enum):
    BOUND = "bound"
    QUASIBOUND = "quasibound"
    RESONANCE = "resonance"


@dataclass(frozen=True)
class EnergyRoot:
    energy: complex
    residual: float
    kind: RootKind

    def is_real(self) -> bool:
        return self.energy.imag == 0.0


@dataclass(frozen=True)
class ScanWindow:
    """Uniform sampling window for the real-energy scan.

    ``pole_split`` inserts extra samples just left and right of each
    background eigenvalue so that brackets never straddle a divergence.
    """

    e_min: float
    e_max: float
    step: float
    pole_split: bool = True

    def __post_init__(self):
        if not (self.e_min < self.e_max):
            raise ValueError("need e_min < e_max")
        if not (self.step > 0.0):
            raise ValueError("need step > 0")
        if (self.e_max - self.e_min) / self.step > _MAX_SAMPLES:
            raise ValueError("window step produces too many samples")


def default_window(model: PotentialModel, coupling: Coupling) -> ScanWindow:
    """Heuristic window wide enough for the low part of the spectrum.

    The free bound state never drops below -a^2/4; the delta shifts over a
    background are bounded by the same scale, so the negative side grows
    with a^2 and the positive side with the level spacing.
    """
    a = coupling.a
    if isinstance(model, LinearField):
        s = max(0.25, a * a / 4.0)
        f23 = model.F ** (2.0 / 3.0)
        # z = -E/F^(2/3) may not exceed the Airy overflow edge near +100
        lo = max(-4.0 * s, -90.0 * f23)
        hi = 16.0 * max(s, f23)
        return ScanWindow(lo, hi, (hi - lo) / 1600.0)
    if isinstance(model, Free):
        lo = -max(1.0, a * a)
        hi = -1e-8
        return ScanWindow(lo, hi, (hi - lo) / 800.0, pole_split=False)
    if isinstance(model, Harmonic):
        lo = -(model.k + a * a)
        hi = 8.0 * model.k + abs(a)
        return ScanWindow(lo, hi, (hi - lo) / 1600.0)
    if isinstance(model, SquareWell):
        lo = -(4.0 + a * a)
        hi = (3.5 * math.pi / model.c) ** 2
        return ScanWindow(lo, hi, (hi - lo) / 1600.0)
    raise TypeError(f"unknown potential model {model!r}")


def _det_real(
    model: PotentialModel, coupling: Coupling, E: float, convention: str
) -> float | None:
    """Determinant value at real E, or None for a masked sample."""
    try:
        sv = full_determinant(model, coupling, E, convention=convention)
    except AiryRangeError:
        return None
    if sv.pole_flag:
        return None
    v = sv.value
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        return None
    if abs(v.imag) > 1e-8 * max(1.0, abs(v.real)):
        # real-axis determinant should be real; a large imaginary part
        # means the branch is complex there (free background above E = 0)
        return None
    return v.real


def _grid(window: ScanWindow, poles: Sequence[float]) -> list[float]:
    n = int(math.ceil((window.e_max - window.e_min) / window.step))
    xs = [window.e_min + i * window.step for i in range(n)]
    xs.append(window.e_max)
    if window.pole_split:
        for p in poles:
            eps = _SPLIT_EPS * max(1.0, abs(p))
            for x in (p - eps, p + eps):
                if window.e_min < x < window.e_max:
                    xs.append(x)
    return sorted(set(xs))


def _has_pole_between(poles: Sequence[float], lo: float, hi: float) -> bool:
    i = _bisect_mod.bisect_right(poles, lo)
    return i < len(poles) and poles[i] < hi


def _bisect_root(
    f: Callable[[float], float | None], lo: float, hi: float, flo: float
) -> float | None:
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        # relative width so that roots deep below unit scale stay sharp
        if hi - lo < _E_TOL * abs(mid) or not (lo < mid < hi):
            return mid
        fm = f(mid)
        if fm is None:
            return None
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _polish(f: Callable[[float], float | None], e: float) -> tuple[float, float]:
    """One guarded Newton step off a numerical derivative.

    Bisection already pins the root to ~1e-12 relative; the step is kept
    only when it shrinks the residual.
    """
    fe = f(e)
    if fe is None:
        return e, math.inf
    h = 1e-7 * max(abs(e), 1e-9)
    fp, fm = f(e + h), f(e - h)
    if fp is None or fm is None or fp == fm:
        return e, abs(fe)
    trial = e - fe * (2.0 * h) / (fp - fm)
    ft = f(trial)
    if ft is not None and abs(ft) < abs(fe):
        return trial, abs(ft)
    return e, abs(fe)


def _kind_for(model: PotentialModel, e: float) -> RootKind:
    # over the uniform field every positive-energy crossing is a state
    # leaking through the triangular barrier, not a true bound state
    if isinstance(model, LinearField) and e > 0.0:
        return RootKind.QUASIBOUND
    return RootKind.BOUND


def _roots_on_grid(
    model: PotentialModel,
    coupling: Coupling,
    xs: Sequence[float],
    poles: Sequence[float],
    convention: str,
) -> list[EnergyRoot]:
    f = lambda e: _det_real(model, coupling, e, convention)
    vals = [f(x) for x in xs]
    found: list[EnergyRoot] = []
    for i in range(len(xs) - 1):
        v0, v1 = vals[i], vals[i + 1]
        if v0 is None or v1 is None:
            continue
        if v0 == 0.0:
            found.append(EnergyRoot(complex(xs[i]), 0.0, _kind_for(model, xs[i])))
            continue
        if (v0 < 0.0) == (v1 < 0.0):
            continue
        if _has_pole_between(poles, xs[i], xs[i + 1]):
            continue
        root = _bisect_root(f, xs[i], xs[i + 1], v0)
        if root is None:
            continue
        root, residual = _polish(f, root)
        found.append(EnergyRoot(complex(root), residual, _kind_for(model, root)))
    # brackets are disjoint but pole-split points can duplicate a grid hit
    deduped: list[EnergyRoot] = []
    for r in sorted(found, key=lambda r: r.energy.real):
        if deduped and abs(r.energy.real - deduped[-1].energy.real) < 1e-9 * max(
            1.0, abs(r.energy.real)
        ):
            if r.residual < deduped[-1].residual:
                deduped[-1] = r
            continue
        deduped.append(r)
    return deduped


def find_real_roots(
    model: PotentialModel,
    coupling: Coupling,
    window: ScanWindow | None = None,
    convention: str = "paper",
) -> list[EnergyRoot]:
    """All real secular roots inside the window, sorted by energy.

    Roots are bracketed between adjacent clean samples; a sample sitting
    on a background eigenvalue (or outside the Airy range) is masked and
    breaks bracket adjacency, so divergences are never mistaken for
    crossings.
    """
    if window is None:
        window = default_window(model, coupling)
    poles = background_poles(model, window.e_min, window.e_max)
    xs = _grid(window, poles)
    roots = _roots_on_grid(model, coupling, xs, poles, convention)
    log.debug(
        "%s scan [%g, %g] step %g: %d roots",
        model.label(),
        window.e_min,
        window.e_max,
        window.step,
        len(roots),
    )
    return roots


def oscillator_threshold(model: Harmonic, a: float) -> float:
    """Coupling |b| above which the harmonic secular roots leave the real axis.

    The quadratic in alpha = gamma_ratio(E/k) has real roots only while
    a^2/k >= 4 b^2; the onset is |b| = |a| / (2 sqrt(k)).
    """
    if not isinstance(model, Harmonic):
        raise TypeError("threshold is defined for the harmonic background")
    return abs(a) / (2.0 * math.sqrt(model.k))


def _resonance_alpha(model: Harmonic, coupling: Coupling) -> complex:
    a, b = coupling.a, coupling.b
    k = model.k
    if b == 0.0:
        raise ValueError("resonances need b != 0")
    disc = a * a / k - 4.0 * b * b
    if disc >= 0.0:
        raise ValueError(
            "couplings keep the secular roots real; need "
            f"|b| > {oscillator_threshold(model, a):.6g}"
        )
    return (-(a / math.sqrt(k)) + 1j * math.sqrt(-disc)) / (b * b)


def _newton_gamma(k: float, alpha: complex, e0: complex) -> complex | None:
    """Damped Newton for gamma_ratio(E/k) = alpha, seeded off the real axis."""

    def g(e: complex) -> complex | None:
        try:
            return gamma_ratio(e / k) - alpha
        except PoleError:
            return None

    e = complex(e0)
    ge = g(e)
    if ge is None:
        e += 0.05j * k
        ge = g(e)
        if ge is None:
            return None
    for _ in range(200):
        h = 1e-6 * max(1.0, abs(e))
        gp_hi, gp_lo = g(e + h), g(e - h)
        if gp_hi is None or gp_lo is None:
            return None
        deriv = (gp_hi - gp_lo) / (2.0 * h)
        if deriv == 0.0:
            return None
        step = ge / deriv
        trial, gt = e, None
        for _ in range(30):
            trial = e - step
            gt = g(trial)
            if gt is not None and abs(gt) < abs(ge):
                break
            step *= 0.5
        else:
            return e if abs(ge) < 1e-10 else None
        converged = abs(trial - e) < 1e-13 * max(1.0, abs(trial))
        e, ge = trial, gt
        if converged:
            return e
    return None


def find_resonances(
    model: Harmonic,
    coupling: Coupling,
    n_pairs: int = 3,
    convention: str = "paper",
) -> list[EnergyRoot]:
    """Lowest complex-conjugate secular pairs of the harmonic background.

    Returns 2*n_pairs roots ordered by real part, the upper-half member
    first in each pair; the partner is the exact conjugate.  The residual
    is the modulus of the full determinant at the root.
    """
    alpha = _resonance_alpha(model, coupling)
    k = model.k
    found: list[complex] = []
    n = 0
    while len(found) < n_pairs and n < n_pairs + 12:
        seed = k * (n + 0.25) + 0.1j * k
        e = _newton_gamma(k, alpha, seed)
        n += 1
        if e is None:
            continue
        if e.imag < 0.0:
            e = e.conjugate()
        if any(abs(e - prev) < 1e-8 * max(1.0, abs(e)) for prev in found):
            continue
        found.append(e)
    found.sort(key=lambda z: z.real)
    out: list[EnergyRoot] = []
    for e in found[:n_pairs]:
        residual = abs(full_determinant(model, coupling, e, convention).value)
        out.append(EnergyRoot(e, residual, RootKind.RESONANCE))
        out.append(EnergyRoot(e.conjugate(), residual, RootKind.RESONANCE))
    if len(out) < 2 * n_pairs:
        raise RuntimeError(f"located {len(out) // 2} of {n_pairs} resonance pairs")
    return out


def squarewell_negative_window(
    model: SquareWell, a: float, convention: str = "paper"
) -> tuple[float, float]:
    """Open interval of b producing one negative-energy state in the well.

    The condition tanh(c kappa)/kappa = (b^2 - q)/(2 a) with q = 4 pi
    (paper convention; q = 4 spectral) has a kappa > 0 solution exactly
    when the right side lies in (0, c).
    """
    if not isinstance(model, SquareWell):
        raise TypeError("negative-energy window is defined for the square well")
    if a <= 0.0:
        raise ValueError("window needs a > 0")
    q = 4.0 if convention == "spectral" else 4.0 * math.pi
    return math.sqrt(q), math.sqrt(q + 2.0 * a * model.c)


def squarewell_negative_root(
    model: SquareWell, coupling: Coupling, convention: str = "paper"
) -> EnergyRoot:
    """The single E < 0 root of the well for couplings inside the window.

    tanh(c kappa)/kappa falls monotonically from c to 0, so plain
    bisection on kappa is safe once the target is bracketed.
    """
    a, b = coupling.a, coupling.b
    lo_b, hi_b = squarewell_negative_window(model, a, convention)
    q = 4.0 if convention == "spectral" else 4.0 * math.pi
    target = (b * b - q) / (2.0 * a)
    c = model.c
    if not (0.0 < target < c):
        raise ValueError(
            f"b = {b:g} outside the negative-energy window ({lo_b:.9g}, {hi_b:.9g})"
        )

    def shoot(kappa: float) -> float:
        return math.tanh(c * kappa) / kappa - target

    k_lo, k_hi = 1e-9, 1.0
    while shoot(k_hi) > 0.0:
        k_hi *= 2.0
        if k_hi > 1e9:
            raise RuntimeError("failed to bracket the negative-energy root")
    for _ in range(200):
        mid = 0.5 * (k_lo + k_hi)
        if k_hi - k_lo < 1e-15 * max(1.0, mid):
            break
        if shoot(mid) > 0.0:
            k_lo = mid
        else:
            k_hi = mid
    kappa = 0.5 * (k_lo + k_hi)
    e = -kappa * kappa
    residual = abs(full_determinant(model, coupling, e, convention).value)
    return EnergyRoot(complex(e), residual, RootKind.BOUND)


def _linear_roots_near(
    coupling: Coupling,
    F: float,
    focus: float | None,
    convention: str,
) -> list[EnergyRoot]:
    """Real roots over the uniform field, on a coarse grid plus a fine
    patch around the last known root position.

    Near the fold the two surviving crossings sit a distance ~sqrt(dF)
    apart, so the fine patch is what keeps the existence test reliable
    down to the field tolerance.
    """
    model = LinearField(F)
    a = coupling.a
    s = max(0.25, a * a / 4.0)
    f23 = F ** (2.0 / 3.0)
    lo = max(-4.0 * s, -90.0 * f23)
    hi = 16.0 * max(s, f23)
    xs = set()
    coarse = (hi - lo) / 1200.0
    n = int(math.ceil((hi - lo) / coarse))
    xs.update(lo + i * coarse for i in range(n + 1))
    if focus is not None:
        f_lo = max(lo, focus - 0.3 * s)
        f_hi = min(hi, focus + 0.3 * s)
        fine = s / 3000.0
        m = int(math.ceil((f_hi - f_lo) / fine))
        xs.update(f_lo + i * fine for i in range(m + 1))
    grid = sorted(xs)
    return _roots_on_grid(model, coupling, grid, (), convention)


def ionization_field(
    coupling: Coupling,
    f_lo: float | None = None,
    f_hi: float | None = None,
    f_tol: float = 1e-7,
    convention: str = "paper",
) -> float:
    """Field strength at which the last real root of the uniform-field
    problem disappears, located by bisection on F.

    The bound branch survives at F = f_lo and must already be gone at
    F = f_hi; both endpoints are checked up front.
    """
    a = coupling.a
    if a <= 0.0:
        raise ValueError("ionization threshold needs a > 0")
    scale = max(1.0, a * a * abs(a))
    if f_lo is None:
        f_lo = 1e-3 * scale
    if f_hi is None:
        f_hi = 4.0 * scale
    if not (0.0 < f_lo < f_hi):
        raise ValueError("need 0 < f_lo < f_hi")

    roots = _linear_roots_near(coupling, f_lo, None, convention)
    if not roots:
        raise ValueError(
            f"no real root at f_lo = {f_lo:g}; widen the field range"
        )
    focus = roots[0].energy.real
    if _linear_roots_near(coupling, f_hi, focus, convention):
        raise ValueError(
            f"a real root survives at f_hi = {f_hi:g}; raise the upper field"
        )
    lo, hi = f_lo, f_hi
    while hi - lo > f_tol:
        mid = 0.5 * (lo + hi)
        roots = _linear_roots_near(coupling, mid, focus, convention)
        if roots:
            lo = mid
            # follow the branch member closest to the previous position
            focus = min((r.energy.real for r in roots), key=lambda e: abs(e - focus))
        else:
            hi = mid
    log.debug("ionization bisection: F in [%.9g, %.9g]", lo, hi)
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class BranchPoint:
    param: float
    energy: complex


@dataclass
class SweepResult:
    """Real roots organized into continuous branches along a parameter."""

    parameter: str
    branches: list[list[BranchPoint]]


def sweep(
    parameter: str,
    cases: Sequence[tuple[float, PotentialModel, Coupling]],
    window: ScanWindow | None = None,
    convention: str = "paper",
) -> SweepResult:
    """Scan each case for real roots and thread them into branches.

    Matching is greedy nearest-neighbor with linear extrapolation from
    the branch tail; a root farther than a few grid steps from every
    prediction opens a new branch.  Branches are ordered by the energy of
    their first point.
    """
    open_branches: list[list[BranchPoint]] = []
    closed: list[list[BranchPoint]] = []
    for param, model, coupling in cases:
        win = window if window is not None else default_window(model, coupling)
        roots = find_real_roots(model, coupling, win, convention)
        energies = [r.energy.real for r in roots]
        claimed = [False] * len(energies)
        still_open: list[list[BranchPoint]] = []
        for branch in open_branches:
            last = branch[-1]
            dp = param - last.param
            slope = 0.0
            if len(branch) >= 2:
                prev = branch[-2]
                if last.param != prev.param:
                    slope = (last.energy.real - prev.energy.real) / (
                        last.param - prev.param
                    )
            predicted = last.energy.real + slope * dp
            tol = 5.0 * max(win.step, abs(slope * dp))
            best, best_d = -1, tol
            for j, e in enumerate(energies):
                if claimed[j]:
                    continue
                d = abs(e - predicted)
                if d < best_d:
                    best, best_d = j, d
            if best >= 0:
                claimed[best] = True
                branch.append(BranchPoint(param, complex(energies[best])))
                still_open.append(branch)
            else:
                closed.append(branch)
        for j, e in enumerate(energies):
            if not claimed[j]:
                still_open.append([BranchPoint(param, complex(e))])
        open_branches = still_open
    closed.extend(open_branches)
    closed.sort(key=lambda b: (b[0].param, b[0].energy.real))
    return SweepResult(parameter, closed)
