#!/usr/bin/env python3
"""Independent reference for the scattering Green tensor diagonal.

scipy.quad per oscillation half-period for the propagating branch and a
t = 2bz substitution for the evanescent branch; Fresnel coefficients in plain
numpy. Prints frozen Im g_xx / Im g_zz for the unit tests plus closed-form
cross-checks.
"""
import numpy as np
from scipy import integrate

C = 2.99792458e8

def sqrt_im_pos(w):
    s = np.sqrt(complex(w))
    if s.imag < 0 or (s.imag == 0 and s.real < 0):
        s = -s
    return s

def drude(wP, g, w):
    return 1 - wP**2 / (w * (w + 1j * g))

def make_refl(om, eps, mu, d=None, eps_s=1.0, mu_s=1.0):
    k = om / C
    def r(beta):
        b1 = sqrt_im_pos(eps * mu * k * k - (k * k - beta * beta))
        rs12 = (mu * beta - b1) / (mu * beta + b1)
        rp12 = (eps * beta - b1) / (eps * beta + b1)
        if d is None:
            return rs12, rp12
        bs = sqrt_im_pos(eps_s * mu_s * k * k - (k * k - beta * beta))
        E = np.exp(2j * b1 * d)
        rs23 = (mu_s * b1 - mu * bs) / (mu_s * b1 + mu * bs)
        rp23 = (eps_s * b1 - eps * bs) / (eps_s * b1 + eps * bs)
        rs = (rs12 + rs23 * E) / (1 + rs12 * rs23 * E)
        rp = (rp12 + rp23 * E) / (1 + rp12 * rp23 * E)
        return rs, rp
    return r

def green_diag(z, om, refl):
    k = om / C

    def f_prop(beta, which):
        rs, rp = refl(beta)
        if which == "xx":
            v = 1j / (8 * np.pi) * (rs - beta**2 / k**2 * rp) * np.exp(2j * beta * z)
        else:
            v = 1j / (8 * np.pi) * 2 * (1 - beta**2 / k**2) * rp * np.exp(2j * beta * z)
        return v.imag

    def quad_prop(which):
        nseg = max(1, int(np.ceil(2 * z * k / np.pi)))  # half-period segments
        edges = np.linspace(0, k, min(nseg, 200000) + 1)
        tot = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            val, _ = integrate.quad(f_prop, a, b, args=(which,), limit=200,
                                    epsabs=1e-30, epsrel=1e-11)
            tot += val
        return tot

    def f_evan(t, which):
        b = t / (2 * z)
        rs, rp = refl(1j * b)
        if which == "xx":
            v = (rs + b**2 / k**2 * rp) * np.exp(-t) / (16 * np.pi * z)
        else:
            v = 2 * (1 + b**2 / k**2) * rp * np.exp(-t) / (16 * np.pi * z)
        return v.imag

    def quad_evan(which):
        val, _ = integrate.quad(f_evan, 0, 200, args=(which,), limit=400,
                                points=[1e-6, 1e-3, 1, 10, 60], epsabs=1e-30, epsrel=1e-11)
        return val

    return quad_prop("xx") + quad_evan("xx"), quad_prop("zz") + quad_evan("zz")

def nonret(z, om, eps):
    g = C**2 / (32 * np.pi * om**2 * z**3) * (eps - 1) / (eps + 1)
    return g.imag, 2 * g.imag

def retarded(z, om, eps, mu):
    R = (sqrt_im_pos(mu) - sqrt_im_pos(eps)) / (sqrt_im_pos(mu) + sqrt_im_pos(eps))
    g = np.exp(2j * z * om / C) / (8 * np.pi * z) * R
    return g.imag, 0.0

def main():
    cases = []
    om = 2 * np.pi * 444e9
    au = drude(1.37e16, 4.12e13, om)
    for z in (14.5e-9, 200e-9, 1e-6, 5e-6, 0.5 * C / om, 50 * C / om, 500 * C / om):
        cases.append((f"Au z={z:.6e}", z, om, make_refl(om, au, 1), au, 1))

    om2 = 2 * np.pi * 35.5e9
    ito = drude(3.33e15, 1.68e14, om2)
    for z in (10e-6, 36e-6):
        cases.append((f"ITOslab10um z={z:.6e}", z, om2, make_refl(om2, ito, 1, d=10e-6), None, None))

    om3 = 2 * np.pi * 21e9
    for z in (620e-6,):
        cases.append((f"glass z={z:.6e}", z, om3, make_refl(om3, 6.2 + 0.21j, 1), 6.2 + 0.21j, 1))

    for zf in (0.01, 1.0):
        z = zf * C / om
        cases.append((f"meta_mm z={z:.6e}", z, om, make_refl(om, -10 + 1j, -10 + 1j),
                      -10 + 1j, -10 + 1j))

    for name, z, om_i, refl, eps, mu in cases:
        gxx, gzz = green_diag(z, om_i, refl)
        extra = ""
        if eps is not None:
            zeta = z * om_i / C
            if zeta < 0.05:
                nx, nz = nonret(z, om_i, eps)
                extra = f"  [nonret dev xx={gxx/nx-1:+.2e} zz={gzz/nz-1:+.2e}]"
            elif zeta >= 50:
                rx, _ = retarded(z, om_i, eps, mu)
                extra = f"  [ret dev xx={gxx/rx-1:+.2e}]"
        print(f"{name} om={om_i:.6e}: Imgxx={gxx:.12e} Imgzz={gzz:.12e}{extra}")

if __name__ == "__main__":
    main()
