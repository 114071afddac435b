"""Offline arbitrary-precision oracle.

Computes every frozen reference constant used by the test suite and the
Taylor-anchor table used by the double-precision Airy evaluator, then prints
them as Python source.  Run manually; the output is pasted into
``tests/_frozen.py`` (reference values) and ``src/pointspec/specfun.py``
(anchor table).  This script is the only place arbitrary precision is used;
the shipped library is pure double precision.

Usage:  python tools/freeze_reference_values.py > /tmp/frozen_dump.py
"""

import mpmath as mp

mp.mp.dps = 40


def fmt(x, digits=22):
    return mp.nstr(x, digits, strip_zeros=False)


def airy_quartet(z):
    z = mp.mpf(z)
    return (mp.airyai(z), mp.airyai(z, 1), mp.airybi(z), mp.airybi(z, 1))


ANCHOR_NODES = [mp.mpf(s) * mp.sign(sgn)
                for sgn in (1, -1)
                for s in ("4.5", "5.5", "6.5", "7.5", "8.5")]

AIRY_TEST_GRID = [
    "-100.0", "-75.3", "-50.0", "-30.7", "-20.0", "-15.5", "-12.1", "-10.0",
    "-9.5", "-8.9", "-8.8", "-8.3", "-7.9", "-7.2", "-6.1", "-5.0", "-4.2",
    "-3.9", "-3.8", "-3.5", "-2.7", "-1.5", "-0.7", "-0.2", "0.0", "0.3",
    "1.0", "1.7", "2.5", "3.3", "3.79", "3.81", "4.2", "4.8", "5.0", "5.7",
    "6.3", "7.1", "7.9", "8.5", "8.79", "8.81", "9.5", "10.0", "12.0",
    "15.0", "20.0", "30.0", "50.0", "75.0", "100.0",
]

LOG_GAMMA_GRID = [
    "0.25+1j", "0.25-1j", "3+4j", "0.5+0j", "7.2-3.1j", "-2.5+0.3j",
    "-5.5-2.2j", "0.001+0.002j", "9.9+9.9j", "-0.75-4j", "12.0+0j",
    "1e-3+0j",
]

GAMMA_RATIO_GRID = [
    "0.0+0j", "-1.0+0j", "-2.5+0j", "0.6+0j", "1.1+0j", "2.6+0j",
    "-10000.0+0j", "9999.6+0j", "1+2j", "0.2+0.7j", "4.3-1.9j",
]


def main():
    print("# Generated by tools/freeze_reference_values.py (mpmath, 40 dps).")
    print("# Do not edit by hand; rerun the generator instead.\n")

    print("AIRY_ANCHORS = {")
    for z in ANCHOR_NODES:
        q = airy_quartet(z)
        print(f"    {fmt(z, 6)}: ({fmt(q[0])}, {fmt(q[1])}, {fmt(q[2])}, {fmt(q[3])}),")
    print("}\n")

    print("AIRY_REFERENCE = {")
    for zs in AIRY_TEST_GRID:
        q = airy_quartet(mp.mpf(zs))
        print(f"    {zs}: ({fmt(q[0])}, {fmt(q[1])}, {fmt(q[2])}, {fmt(q[3])}),")
    print("}\n")

    print("LOG_GAMMA_REFERENCE = {")
    for zs in LOG_GAMMA_GRID:
        z = mp.mpc(complex(zs.replace(" ", "")))
        v = mp.loggamma(z)
        print(f"    complex({fmt(z.real)}, {fmt(z.imag)}): complex({fmt(v.real)}, {fmt(v.imag)}),")
    print("}\n")

    print("GAMMA_RATIO_REFERENCE = {")
    for ws in GAMMA_RATIO_GRID:
        w = mp.mpc(complex(ws.replace(" ", "")))
        v = mp.gamma(mp.mpf(1)/4 - w) / mp.gamma(mp.mpf(3)/4 - w)
        print(f"    complex({fmt(w.real)}, {fmt(w.imag)}): complex({fmt(v.real)}, {fmt(v.imag)}),")
    print("}\n")

    # Scalar spot values.
    ai0, aip0, bi0, bip0 = airy_quartet(0)
    print(f"AI_AT_5 = {fmt(mp.airyai(5))}")
    print(f"GAMMA_QUARTER_RATIO = {fmt(mp.gamma(mp.mpf(1)/4)/mp.gamma(mp.mpf(3)/4))}")
    print(f"HARMONIC_A_K1_E0 = {fmt(mp.gamma(mp.mpf(1)/4)/mp.gamma(mp.mpf(3)/4)/2)}")
    A = mp.gamma(mp.mpf(1)/4) / mp.gamma(mp.mpf(3)/4) / 2
    print(f"HARMONIC_DET_K1_A1_B1_E0 = {fmt(1 + A + A**2)}")
    print(f"LINEAR_A_F1_E0 = {fmt(-mp.pi * ai0 * bi0)}")
    # Harmonic A at assorted (k, E).
    print("HARMONIC_A_REFERENCE = {")
    for k, E in [(1, -1), (4, -2.5), (0.25, -0.1), (1, -10), (4, -10)]:
        k_, E_ = mp.mpf(k), mp.mpf(E)
        val = mp.gamma(mp.mpf(1)/4 - E_/k_) / mp.gamma(mp.mpf(3)/4 - E_/k_) / (2*mp.sqrt(k_))
        print(f"    ({fmt(mp.mpf(k), 6)}, {fmt(mp.mpf(E), 6)}): {fmt(val)},")
    print("}\n")

    # Square well: lowest positive root for c=1, a=1, b=0: tan(x)/x = -2 pi.
    x0 = mp.findroot(lambda x: mp.tan(x) + 2*mp.pi*x,
                     (mp.mpf("1.58"), mp.mpf("3.1")), solver="bisect")
    print(f"SQUAREWELL_LOWEST_ROOT_A1_B0_C1 = {fmt(x0**2)}   # E = x^2, x in (pi/2, pi)")
    # Negative-energy root for a=1, c=1, b=3.7: tanh(kappa)/kappa = (b^2-4pi)/2.
    b = mp.mpf("3.7")
    R = (b**2 - 4*mp.pi) / 2
    kap = mp.findroot(lambda t: mp.tanh(t)/t - R, mp.mpf("1.4"))
    print(f"SQUAREWELL_NEG_ROOT_A1_B37_C1 = {fmt(-kap**2)}")
    print(f"WINDOW_B_LO = {fmt(2*mp.sqrt(mp.pi))}")
    print(f"WINDOW_B_HI = {fmt(mp.sqrt(2 + 4*mp.pi))}")

    # Free-fold ionization value for b = 0 (fold sits exactly at z = 0):
    print(f"LINEAR_FC_A1_B0 = {fmt((mp.pi*ai0*bi0)**3)}")

    # Ionization field for a = b = 1 from the published determinant:
    # fold point of det(E, F) = 0, d det/dE = 0.
    def det15(E, F):
        z = -E / F**(mp.mpf(2)/3)
        ai, aip, bi, bip = airy_quartet(z)
        A = -(mp.pi / F**(mp.mpf(1)/3)) * ai * bi
        B = -mp.pi * ai * bip
        C = -mp.pi * aip * bi
        D = -mp.pi * F**(mp.mpf(1)/3) * aip * bip
        a_, b_ = mp.mpf(1), mp.mpf(1)
        m12 = -1 - (b_/2)*(B - C)
        m22 = 1 + (a_/2)*A + (b_/2)*C
        m23 = (b_/2)*A
        m32 = (a_/2)*(B + C) + b_*D
        m33 = 1 + (b_/2)*(B + C)
        return 2*(m22*m33 - m23*m32) + m12*m33

    def dDdE(E, F):
        h = mp.mpf("1e-12")
        return (det15(E + h, F) - det15(E - h, F)) / (2*h)

    E_F = mp.findroot(lambda E, F: (det15(E, F), dDdE(E, F)),
                      (mp.mpf("0.1005"), mp.mpf("0.0615")))
    print(f"LINEAR_FC_A1_B1 = {fmt(E_F[1])}   # fold of the field-sweep at E = {fmt(E_F[0], 12)}")

    # Oscillator roots, k=1 a=2 b=0: gamma_ratio(E) = -1; first three roots.
    g = lambda E: mp.gamma(mp.mpf(1)/4 - E) / mp.gamma(mp.mpf(3)/4 - E) + 1
    roots = [mp.findroot(g, s) for s in (mp.mpf("0.42"), mp.mpf("1.37"), mp.mpf("2.36"))]
    print("OSC_ROOTS_K1_A2_B0 = [")
    for r in roots:
        print(f"    {fmt(r)},")
    print("]")

    # First resonance pair, k=1 a=1 b=2: gamma_ratio(E) = alpha_plus.
    a_, b_, k_ = mp.mpf(1), mp.mpf(2), mp.mpf(1)
    alpha_p = (-a_/mp.sqrt(k_) + mp.sqrt(mp.mpc(a_**2/k_ - 4*b_**2))) / b_**2
    fr = lambda E: mp.gamma(mp.mpf(1)/4 - E) / mp.gamma(mp.mpf(3)/4 - E) - alpha_p
    E1 = mp.findroot(fr, mp.mpc("0.25", "0.10"))
    E2 = mp.findroot(fr, mp.mpc("1.25", "0.10"))
    E3 = mp.findroot(fr, mp.mpc("2.25", "0.10"))
    print("RESONANCES_K1_A1_B2 = [")
    for E in (E1, E2, E3):
        print(f"    complex({fmt(E.real)}, {fmt(E.imag)}),")
    print("]")
    print(f"ALPHA_PLUS_K1_A1_B2 = complex({fmt(alpha_p.real)}, {fmt(alpha_p.imag)})")


if __name__ == "__main__":
    main()
