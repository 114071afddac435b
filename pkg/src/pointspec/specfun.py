"""Double-precision special functions for the Green-coefficient closed forms.

Everything here is evaluated from scratch: real Airy functions with
derivatives, principal-branch log-Gamma for complex arguments, and the
Gamma ratio entering the oscillator background.  No calls into scipy or
similar; the only precomputed data are coefficient/anchor tables generated
once by the arbitrary-precision script in ``tools/`` and frozen below.

Airy strategy
-------------
The real line splits into three regimes.

* Small ``|z|`` (below 3.0 on the positive side, 3.8 on the negative):
  Maclaurin series.  Beyond that the series still converges but
  cancellation eats into the 1e-12 budget (the partial sums grow like
  ``exp((2/3)|z|^{3/2})`` while Ai decays), so we stop early.
* From there to ``|z| = 8.8``: Taylor re-expansion around the nearest
  anchor node (spacing 1.0, values frozen to 22 digits).  The coefficients
  follow from the ODE w'' = z w, so only function and derivative values
  are tabulated.  Neither the Maclaurin series nor the asymptotic series
  reaches 1e-12 in double precision anywhere in this band; the anchored
  expansion does.
* ``|z| > 8.8``: Poincare asymptotic expansions; the first neglected term
  is below ``exp(-2 zeta) ~ 7e-16`` at the boundary, shrinking outward.

``bi``/``bi_prime`` overflow shortly above z = 102; arguments beyond +100
raise :class:`AiryRangeError` as out of the supported range.  The negative
axis has no overflow and stays available well below -100 (the oscillatory
expansion only gains accuracy there), which the field-sweep scanner relies
on; we cut off at -1e8 where the phase has lost double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "AiryQuartet",
    "AiryRangeError",
    "PoleError",
    "airy",
    "log_gamma",
    "gamma_ratio",
]


class AiryRangeError(ValueError):
    """Argument outside the supported Airy range.

    Attributes
    ----------
    z : float
        Offending argument.
    threshold : float
        Boundary that was crossed.
    """

    def __init__(self, z: float, threshold: float, reason: str):
        self.z = z
        self.threshold = threshold
        super().__init__(f"airy({z:g}): {reason} (supported up to {threshold:g})")


class PoleError(ValueError):
    """Argument sits on (or within tolerance of) a pole.

    Attributes
    ----------
    index : int
        Pole index n: z = -n for log_gamma, w = 1/4 + n for gamma_ratio.
    """

    def __init__(self, index: int, what: str):
        self.index = index
        super().__init__(f"{what} (pole index n = {index})")


@dataclass(frozen=True)
class AiryQuartet:
    """Ai, Bi and first derivatives at a common real argument."""

    ai: float
    ai_prime: float
    bi: float
    bi_prime: float

    def wronskian(self) -> float:
        """ai*bi' - ai'*bi; equals 1/pi identically."""
        return self.ai * self.bi_prime - self.ai_prime * self.bi


# Ai(0), -Ai'(0); Bi(0) = sqrt(3)*Ai(0), Bi'(0) = sqrt(3)*(-Ai'(0)).
_AI0 = 0.3550280538878172392600631860041831764
_AIP0 = -0.2588194037928067984051835601892039634
_SQRT3 = math.sqrt(3.0)
_SQRT_PI = math.sqrt(math.pi)

# The positive edge sits lower than the negative one: for z > 0 the series
# suffers e^{2 zeta} cancellation against the tiny Ai, measurably past
# 1e-12 already at z = 3.2; the oscillatory side only loses ~2 digits by 3.8.
_SERIES_EDGE_POS = 3.0
_SERIES_EDGE_NEG = 3.8
_ASYMPTOTIC_EDGE = 8.8
_OVERFLOW_EDGE = 100.0
_PHASE_EDGE = -1.0e8

# (ai, ai', bi, bi') at the Taylor anchor nodes, from
# tools/freeze_reference_values.py (mpmath, 40 dps).
_ANCHORS = {
    3.5: (0.002584098786989634963277, -0.00500441396795258283203,
          33.05550675461147941426, 59.16431958136098703457),
    4.5: (3.302503235143089836587e-4, -7.178665675575088886936e-4,
          227.5880818355997184614, 469.1350773279663979509),
    5.5: (3.368531190859981442529e-5, -8.046339130556514337967e-5,
          2016.580038659531394441, 4632.553733139042420454),
    6.5: (2.795882343204913585460e-6, -7.231931466601792559814e-6,
          22340.60771839699815794, 56062.49584252286074822),
    7.5: (1.917256067513430751645e-7, -5.312713959720544684790e-7,
          303229.6151125334022938, 819987.8353587996209321),
    8.5: (1.099700975519550650949e-8, -3.237725440447602255894e-8,
          4965319.541471301981064, 14326301.03066205833417),
    -4.5: (0.2921527810559594668816, -0.5233625323157477007085,
           0.2538726576969326368005, 0.6347447677736637097333),
    -5.5: (0.01778154127657497560302, 0.8641972177713983907721,
           -0.3678134539157119910947, 0.02511158307363092598876),
    -6.5: (-0.2380203019971158035944, -0.6749524925132021729989,
           0.2610126576364839518174, -0.5971706662916220169763),
    -7.5: (0.3217757163806478752673, 0.3188095066985545962101,
           -0.1124634850764908063843, 0.8778022815457609223676),
    -8.5: (-0.3302902376302088790217, -0.03231334828463913587288,
           0.007754436447658404431949, -0.9629691651201747981359),
}


def _airy_maclaurin(z: float) -> AiryQuartet:
    # Ai = c1 f - c2 g, Bi = sqrt(3) (c1 f + c2 g) with
    # f = sum z^{3k} prod(3j-2)/(3k)!, g = sum z^{3k+1} prod(3j-1)/(3k+1)!.
    z3 = z * z * z
    f = 1.0
    fp = 0.0
    g = z
    gp = 1.0
    t = 1.0
    u = z
    for k in range(1, 120):
        t *= z3 / ((3 * k) * (3 * k - 1))
        u *= z3 / ((3 * k) * (3 * k + 1))
        f += t
        g += u
        if z != 0.0:
            fp += 3 * k * t / z
            gp += (3 * k + 1) * u / z
        if abs(t) + abs(u) < 1e-18 * (abs(f) + abs(g)):
            break
    c1, c2 = _AI0, -_AIP0
    ai = c1 * f - c2 * g
    aip = c1 * fp - c2 * gp
    bi = _SQRT3 * (c1 * f + c2 * g)
    bip = _SQRT3 * (c1 * fp + c2 * gp)
    return AiryQuartet(ai, aip, bi, bip)


def _taylor_pair(z0: float, w0: float, w1: float, h: float) -> tuple[float, float]:
    # Propagate a solution of w'' = z w from z0 to z0 + h.
    # c_{n+2} = (z0 c_n + c_{n-1}) / ((n+1)(n+2)), c_{-1} = 0.
    coeffs = [w0, w1]
    val = w0 + w1 * h
    der = w1
    hn = h
    scale = abs(w0) + abs(w1) * abs(h) + 1e-300
    for n in range(0, 60):
        prev = coeffs[n - 1] if n >= 1 else 0.0
        nxt = (z0 * coeffs[n] + prev) / ((n + 1) * (n + 2))
        coeffs.append(nxt)
        hn *= h
        term = nxt * hn
        val += term
        der += (n + 2) * nxt * hn / h if h != 0.0 else 0.0
        if abs(term) < 1e-18 * scale and n > 6:
            break
    return val, der


def _airy_anchored(z: float) -> AiryQuartet:
    lo = 3.5 if z > 0 else 4.5
    node = math.copysign(min(8.5, max(lo, round(abs(z) - 0.5) + 0.5)), z)
    ai0, aip0, bi0, bip0 = _ANCHORS[node]
    h = z - node
    ai, aip = _taylor_pair(node, ai0, aip0, h)
    bi, bip = _taylor_pair(node, bi0, bip0, h)
    return AiryQuartet(ai, aip, bi, bip)


def _asymptotic_sums(zeta: float) -> tuple[float, ...]:
    # u_k, v_k of the Poincare expansions; returns the alternating and
    # same-sign sums for (u, v) plus the even/odd split needed on the
    # oscillatory side.  Terms are added until they stop decreasing.
    su_alt = sv_alt = su_pos = sv_pos = 1.0
    u_even = v_even = 1.0   # sum (-1)^k u_{2k} zeta^{-2k}
    u_odd = v_odd = 0.0     # sum (-1)^k u_{2k+1} zeta^{-2k-1}
    u = 1.0
    zk = 1.0
    prev = math.inf
    for k in range(1, 40):
        u *= (6 * k - 1) * (6 * k - 3) * (6 * k - 5) / (216.0 * k * (2 * k - 1))
        v = -u * (6 * k + 1) / (6 * k - 1)
        zk /= zeta
        tu = u * zk
        tv = v * zk
        if abs(tu) >= prev:
            break
        prev = abs(tu)
        sign = -1.0 if k % 2 else 1.0
        su_alt += sign * tu
        sv_alt += sign * tv
        su_pos += tu
        sv_pos += tv
        half = (k // 2) % 2  # sign of (-1)^{k//2}
        if k % 2 == 0:
            u_even += (-tu if half else tu)
            v_even += (-tv if half else tv)
        else:
            u_odd += (-tu if half else tu)
            v_odd += (-tv if half else tv)
    return su_alt, sv_alt, su_pos, sv_pos, u_even, v_even, u_odd, v_odd


def _airy_asymptotic_pos(z: float) -> AiryQuartet:
    zeta = (2.0 / 3.0) * z * math.sqrt(z)
    su_alt, sv_alt, su_pos, sv_pos = _asymptotic_sums(zeta)[:4]
    z14 = z ** 0.25
    # exp(-zeta) may underflow to 0.0 for z near 100; that is the graceful
    # Ai underflow allowed by the contract.
    edec = math.exp(-zeta)
    egrow = math.exp(zeta)
    ai = edec * su_alt / (2.0 * _SQRT_PI * z14)
    aip = -z14 * edec * sv_alt / (2.0 * _SQRT_PI)
    bi = egrow * su_pos / (_SQRT_PI * z14)
    bip = z14 * egrow * sv_pos / _SQRT_PI
    return AiryQuartet(ai, aip, bi, bip)


def _airy_asymptotic_neg(z: float) -> AiryQuartet:
    t = -z
    zeta = (2.0 / 3.0) * t * math.sqrt(t)
    _, _, _, _, ue, ve, uo, vo = _asymptotic_sums(zeta)
    w = zeta - 0.25 * math.pi
    cw = math.cos(w)
    sw = math.sin(w)
    t14 = t ** 0.25
    ai = (cw * ue + sw * uo) / (_SQRT_PI * t14)
    bi = (-sw * ue + cw * uo) / (_SQRT_PI * t14)
    aip = t14 * (sw * ve - cw * vo) / _SQRT_PI
    bip = t14 * (cw * ve + sw * vo) / _SQRT_PI
    return AiryQuartet(ai, aip, bi, bip)


def airy(z: float) -> AiryQuartet:
    """Evaluate Ai(z), Ai'(z), Bi(z), Bi'(z) for real z.

    Parameters
    ----------
    z : float
        Real argument.  Supported range is z <= 100 on the growing side
        (Bi overflows just beyond) and z >= -1e8 on the oscillatory side.

    Returns
    -------
    AiryQuartet

    Raises
    ------
    AiryRangeError
        If z > 100 (Bi overflow) or z < -1e8 (phase precision exhausted),
        or z is not finite.
    """
    z = float(z)
    if math.isnan(z) or math.isinf(z):
        raise AiryRangeError(z, _OVERFLOW_EDGE, "non-finite argument")
    if z > _OVERFLOW_EDGE:
        raise AiryRangeError(z, _OVERFLOW_EDGE, "bi overflow range")
    if z < _PHASE_EDGE:
        raise AiryRangeError(z, _PHASE_EDGE, "oscillatory phase underresolved")
    az = abs(z)
    if az <= (_SERIES_EDGE_POS if z > 0 else _SERIES_EDGE_NEG):
        return _airy_maclaurin(z)
    if az <= _ASYMPTOTIC_EDGE:
        return _airy_anchored(z)
    if z > 0:
        return _airy_asymptotic_pos(z)
    return _airy_asymptotic_neg(z)


# ---------------------------------------------------------------------------
# log-Gamma
# ---------------------------------------------------------------------------

# Lanczos coefficients, g = 607/128, n = 15 (Godfrey's table).  Relative
# error of the rational part is below 1e-15 across Re(z) > 0.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_LN_SQRT_2PI = 0.918938533204672741780329736406  # log(sqrt(2 pi))
_LN_PI = math.log(math.pi)
_POLE_TOL = 1e-9


def _log_sin_pi(z: complex) -> complex:
    """log(sin(pi z)) on the branch that makes the reflection principal.

    The peeled form sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) is
    analytic on the open upper half-plane (|e^{2 i pi z}| < 1 there, so the
    inner log never reaches a cut), and plugging it into the reflection
    reproduces the principal log-Gamma with no extra winding term --
    checked against the arbitrary-precision oracle over Re(z) in [-10, 1],
    Im(z) in [0.01, 20].  The principal log of sin itself would wrap every
    unit step in Re(z).  Real arguments use the plain principal log.
    """
    if z.imag == 0.0:
        return cmath.log(cmath.sin(math.pi * z))
    if z.imag < 0:
        return _log_sin_pi(z.conjugate()).conjugate()
    w = cmath.exp(2j * math.pi * z)
    return cmath.log(0.5j) - 1j * math.pi * z + cmath.log(1.0 - w)


def log_gamma(z: complex) -> complex:
    """Principal-branch log-Gamma.

    Lanczos for Re(z) >= 0.5; reflection through sin for the left
    half-plane.  Conjugate symmetry log_gamma(conj z) = conj(log_gamma(z))
    holds to rounding because every step commutes with conjugation.

    Raises
    ------
    PoleError
        If z is within 1e-9 of a nonpositive integer.
    """
    z = complex(z)
    if z.real < 0.5:
        n = round(z.real)
        if n <= 0 and abs(z - n) < _POLE_TOL:
            raise PoleError(-n, f"log_gamma({z}) at nonpositive integer")
        if z.imag < 0:
            return log_gamma(z.conjugate()).conjugate()
        return _LN_PI - _log_sin_pi(z) - log_gamma(1.0 - z)
    zz = z - 1.0
    acc = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return _LN_SQRT_2PI + (zz + 0.5) * cmath.log(t) - t + cmath.log(acc)


def _log1p_small(x: complex) -> complex:
    # log(1+x) for |x| << 1 without forming 1+x (keeps u*log1p(h/u) - h
    # cancellation-safe in the Stirling difference below).
    if isinstance(x, float) or x.imag == 0.0:
        return complex(math.log1p(x.real), 0.0)
    term = x
    acc = x
    for n in range(2, 14):
        term *= -x
        acc += term / n
        if abs(term) < 1e-18 * abs(acc):
            break
    return acc


def _stirling_tail(x: complex) -> complex:
    # S(x) of log Gamma(x) = (x-1/2) log x - x + log sqrt(2 pi) + S(x).
    x2 = x * x
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / (1680.0 * x2) / x2) / x2) / x2) / x


def _log_gamma_half_step(u: complex) -> complex:
    """log Gamma(u) - log Gamma(u + 1/2) for Re(u) >= 0.5, |u| >= 50.

    Formed from the Stirling series difference so that the two ~1e5-sized
    logs are never subtracted in floating point; with h = 1/2 the
    (u + h - 1/2) log(u) cross term cancels identically.
    """
    body = u * _log1p_small(0.5 / u) - 0.5
    return -0.5 * cmath.log(u) - body + _stirling_tail(u) - _stirling_tail(u + 0.5)


def _cot_pi(u: complex) -> complex:
    # cot(pi u); exactly periodic reduction first, so huge real parts
    # cost no precision.
    r = u - round(u.real)
    if r.imag == 0.0:
        x = r.real
        return complex(math.cos(math.pi * x) / math.sin(math.pi * x), 0.0)
    if r.imag < 0:
        return _cot_pi(r.conjugate()).conjugate()
    q = cmath.exp(2j * math.pi * r)  # |q| < 1 on the upper half-plane
    return 1j * (q + 1.0) / (q - 1.0)


def gamma_ratio(w: complex) -> complex:
    """Gamma(1/4 - w) / Gamma(3/4 - w), in log space.

    Never forms the individual Gamma values, so |w| up to 1e4 stays inside
    double range.  Exact zeros are returned at the denominator poles
    w = 3/4 + n; arguments within 1e-9 of a numerator pole w = 1/4 + n
    raise :class:`PoleError` with that n.

    For real w the result is real (the intermediate imaginary parts are
    exact multiples of pi and are projected out).
    """
    w = complex(w)
    # Numerator pole w = 1/4 + n, n >= 0.
    n_num = round(w.real - 0.25)
    if n_num >= 0 and abs(w - (0.25 + n_num)) < _POLE_TOL:
        raise PoleError(n_num, f"gamma_ratio({w}) at numerator pole")
    n_den = round(w.real - 0.75)
    if n_den >= 0 and abs(w - (0.75 + n_den)) < _POLE_TOL:
        return complex(0.0, 0.0)
    u = 0.25 - w  # ratio = Gamma(u) / Gamma(u + 1/2)
    if abs(u) >= 50.0:
        # log_gamma(u) and log_gamma(u+1/2) both reach ~1e5 here and their
        # difference would keep only ~11 digits; use the dedicated forms.
        if u.real >= 0.5:
            value = cmath.exp(_log_gamma_half_step(u))
        else:
            # Reflect both Gammas: ratio = cot(pi u) Gamma(v)/Gamma(v+1/2)
            # with v = 1/2 - u back in the Stirling region.
            value = _cot_pi(u) * cmath.exp(_log_gamma_half_step(0.5 - u))
    else:
        value = cmath.exp(log_gamma(u) - log_gamma(u + 0.5))
    if w.imag == 0.0:
        # Imaginary parts of the two logs differ by an exact multiple of
        # pi for real w, so the true ratio is real; drop the rounding dust.
        return complex(value.real, 0.0)
    return value
