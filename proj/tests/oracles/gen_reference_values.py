"""Reference values for the C++ unit tests, computed with mpmath at 40 digits.

Run once; the printed tables are pasted into reference_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 40


def pcf_table():
    nus = [-40, -17.25, -2.5, -1, -0.5, 0, 0.001, 0.3, 1, 2.7, 5, 9.9, 20.5, 39.5, 40]
    zs = [-60, -30, -12, -8.8, -7.2, -5.65, -3, -1, 0, 0.7, 2.5, 4.4, 7.2, 8.8, 12, 25, 60]
    rows = []
    for nu in nus:
        for z in zs:
            v = mp.pcfd(nu, z)
            if v == 0:
                continue
            h = mp.mpf("0.01")
            near = max(abs(mp.pcfd(nu, z - h)), abs(mp.pcfd(nu, z + h)))
            if abs(v) < mp.mpf("0.05") * near:
                continue  # too close to a zero for a relative comparison
            rows.append((nu, z, mp.log(abs(v)), 1 if v > 0 else -1))
    return rows


def vd_root_gap(alpha, n, eps, l):
    beta = mp.sqrt(alpha**2 + 2 * (n + eps))
    za, zb = -mp.sqrt(2) * alpha, -mp.sqrt(2) * beta

    def d(v, z):
        return mp.pcfd(v, z)

    def dp(v, z):
        return -z / 2 * d(v, z) + v * d(v - 1, z)

    def f(nu):
        k = nu + n + eps
        return d(nu, za) * dp(k, zb) + dp(nu, za) * d(k, zb)

    xs = [l - mp.mpf("0.45") + mp.mpf("0.9") * i / 300 for i in range(301)]
    fs = [f(x) for x in xs]
    roots = []
    for i in range(300):
        if fs[i] * fs[i + 1] < 0:
            lo, hi, flo = xs[i], xs[i + 1], fs[i]
            for _ in range(140):
                mid = (lo + hi) / 2
                fm = f(mid)
                if fm * flo > 0:
                    lo, flo = mid, fm
                else:
                    hi = mid
            roots.append((lo + hi) / 2)
    return roots


if __name__ == "__main__":
    print("// pcf: nu, z, log|D|, sign")
    for nu, z, la, s in pcf_table():
        print(f"    {{{nu}, {z}, {mp.nstr(la, 20)}, {s}}},")
    print("// g factors")
    for k in [0, 1, 2, 5, 100]:
        g = mp.sqrt(2 * mp.pi) / mp.factorial(k) * (k + mp.mpf(1) / 2) ** (k + mp.mpf(1) / 2) * mp.e ** (-(k + mp.mpf(1) / 2))
        print(k, mp.nstr(g, 20))
    print("// D_0.5(0)", mp.nstr(mp.pcfd(0.5, 0), 20), "closed", mp.nstr(2**0.25 * mp.sqrt(mp.pi) / mp.gamma(0.25), 20))
    print("// D_1(2)", mp.nstr(mp.pcfd(1, 2), 20))
    print("// V_D exact roots (alpha, n, eps, l): nu-, nu+, gap")
    for alpha, n, eps, l in [(3, 0, 0, 0), (4, 0, 0, 0), (5, 0, 0, 0), (4, 1, 0, 0), (4, 0, 0, 1), (3, 1, 0, 0)]:
        r = vd_root_gap(alpha, n, eps, l)
        print(alpha, n, eps, l, [mp.nstr(x, 20) for x in r], mp.nstr(r[1] - r[0], 15) if len(r) == 2 else "")
