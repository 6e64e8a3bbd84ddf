#!/usr/bin/env python3
"""Independent reference for the materials module.

Implements the Drude model and the layered Fresnel coefficients directly in
numpy (classic two-interface composition, no shared algebra with the C++
rearrangement) and prints frozen values for the unit tests.
"""
import numpy as np

C = 2.99792458e8

def drude(wP, g, w):
    return 1 - wP**2 / (w * (w + 1j * g))

def sqrt_im_pos(z):
    r = np.sqrt(complex(z))
    if r.imag < 0 or (r.imag == 0 and r.real < 0):
        r = -r
    return r

def beta_in(w, q, eps, mu):
    return sqrt_im_pos(eps * mu * (w / C) ** 2 - q**2)

def half_space(w, q, eps, mu):
    b0 = beta_in(w, q, 1, 1)
    b1 = beta_in(w, q, eps, mu)
    rs = (mu * b0 - b1) / (mu * b0 + b1)
    rp = (eps * b0 - b1) / (eps * b0 + b1)
    return rs, rp

def iface(wa, ba, wb, bb):
    """a -> b interface coefficient for one polarization (w = mu or eps)."""
    return (wb * ba - wa * bb) / (wb * ba + wa * bb)

def slab(w, q, eps, mu, d, eps_s=1, mu_s=1):
    b0 = beta_in(w, q, 1, 1)
    b1 = beta_in(w, q, eps, mu)
    bs = beta_in(w, q, eps_s, mu_s)
    E = np.exp(2j * b1 * d)
    out = []
    for w12, w23 in ((mu, mu_s), (eps, eps_s)):  # (w of slab, w of substrate); vacuum w=1
        r12 = iface(1, b0, w12, b1)
        r23 = iface(w12, b1, w23, bs)
        out.append((r12 + r23 * E) / (1 + r12 * r23 * E))
    return tuple(out)

def main():
    for name, wP, g in (("Au", 1.37e16, 4.12e13), ("ITO", 3.33e15, 1.68e14)):
        for w in (2.78973e12, 2 * np.pi * 35.5e9):
            e = drude(wP, g, w)
            print(f"eps({name}, w={w:.6e}) = {e.real:.15e} {e.imag:+.15e}j")

    w = 2.78973e12
    eps = drude(1.37e16, 4.12e13, w)
    k0 = w / C
    for qf in (0.0, 0.5, 2.0, 100.0):
        rs, rp = half_space(w, qf * k0, eps, 1)
        print(f"Au half-space q={qf}k0: rs={rs.real:.15e}{rs.imag:+.15e}j "
              f"rp={rp.real:.15e}{rp.imag:+.15e}j")

    # impedance-matched metamaterial: no reflection at normal incidence
    for nm, e, m in (("meta_pp", 10 + 1j, 10 + 1j), ("meta_mm", -10 + 1j, -10 + 1j)):
        rs, rp = half_space(w, 0, e, m)
        print(f"{nm} q=0: |rs|={abs(rs):.3e} |rp|={abs(rp):.3e}")

    # ITO slab, vacuum-backed and glass-backed
    w = 2 * np.pi * 35.5e9
    eps = drude(3.33e15, 1.68e14, w)
    k0 = w / C
    for d in (10e-6, 0.5e-6):
        for q in (0.3 * k0, 20 * k0):
            rs, rp = slab(w, q, eps, 1, d)
            print(f"ITO slab d={d*1e6:g}um q={q/k0:g}k0: rs={rs.real:.15e}{rs.imag:+.15e}j "
                  f"rp={rp.real:.15e}{rp.imag:+.15e}j")
    rs, rp = slab(w, 0.3 * k0, eps, 1, 10e-6, 6.2 + 0.21j, 1)
    print(f"ITO-on-glass d=10um q=0.3k0: rs={rs.real:.15e}{rs.imag:+.15e}j "
          f"rp={rp.real:.15e}{rp.imag:+.15e}j")

if __name__ == "__main__":
    main()
