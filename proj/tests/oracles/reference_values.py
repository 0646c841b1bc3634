"""High-precision reference values for the unit tests.

Regenerate with `python3 reference_values.py > reference_values.inc`;
requires mpmath.
"""
import mpmath as mp

mp.mp.dps = 40


def phi(p, q, lam, t):
    rho = mp.mpf(p + 2 * q) / 2
    a = (rho + 1j * lam) / 2
    b = (rho - 1j * lam) / 2
    c = mp.mpf(p + q + 1) / 2
    return mp.hyp2f1(a, b, c, -mp.sinh(t) ** 2)


def c_closed(p, q, lam):
    rho = mp.mpf(p + 2 * q) / 2
    c = mp.mpf(p + q + 1) / 2
    il = 1j * mp.mpc(lam)
    return (mp.power(2, rho - il) * mp.gamma(c) * mp.gamma(il)
            / (mp.gamma((rho + il) / 2) * mp.gamma(mp.mpf(p + 2) / 4 + il / 2)))


def cx(z):
    z = mp.mpc(z)
    return "cplx(%s, %s)" % (mp.nstr(z.real, 17), mp.nstr(z.imag, 17))


if __name__ == "__main__":
    print("// Generated by reference_values.py (mpmath, 40 digits). Do not edit.")
    print("inline const HypRef kHypRefs[] = {")
    for (a, b, c, z) in [(0.5, 0.5, 1, -0.25), (1, 1, 2, -1), (0.3 + 0.7j, 0.3 - 0.7j, 1.5, -0.9),
                         (0.75 + 2j, 0.75 - 2j, 1.25, -7.5), (0.25, 0.25, 1.0, -1e6),
                         (1.5, -2, 0.5, -30), (0.6 + 1j, 0.2, 2.2, -3.0),
                         (1.25 + 1e-9, 0.25, 1.5, -1e5)]:
        print("    {%s, %s, %s, %s, %s}," % (cx(a), cx(b), mp.nstr(c, 17), mp.nstr(z, 17),
                                          cx(mp.hyp2f1(a, b, c, z))))
    print("};")
    print("inline const PhiRef kPhiRefs[] = {")
    for (p, q) in [(1, 0), (2, 0), (3, 1)]:
        for lam in [0, 0.5, 1 + 0.3j, 2, 7, 40, 150, 0.3j]:
            for t in [0.01, 0.3, 1, 2.5, 6, 15, 40]:
                print("    {%d, %d, %s, %s, %s}," % (p, q, cx(lam), t, cx(phi(p, q, lam, t))))
    print("};")
    print("inline const CRef kCRefs[] = {")
    for (p, q) in [(1, 0), (2, 0), (3, 1)]:
        for lam in [0.25, 1, 3.7, 1 - 0.2j, -0.4j]:
            print("    {%d, %d, %s, %s}," % (p, q, cx(lam), cx(c_closed(p, q, lam))))
    print("};")
