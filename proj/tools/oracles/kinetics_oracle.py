#!/usr/bin/env python3
"""Independent reference for the rate-equation kinetics.

Builds the Pauli master equation for a lumped rotor ladder with numpy/scipy
(expm, eigen-decomposition steady state) and prints frozen population vectors
for the unit tests.
"""
import numpy as np
from scipy.linalg import expm, null_space

HBAR = 1.054571817e-34
H = 6.62607015e-34
KB = 1.380649e-23
EPS0 = 8.8541878128e-12
C = 2.99792458e8
RATE_C = 3 * np.pi * HBAR * EPS0 * C**3

def nbar(w, T):
    return 1.0 / np.expm1(HBAR * w / (KB * T))

def build(energies, d2, T):
    n = len(energies)
    G = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if d2[i, j] == 0:
                continue
            w = abs(energies[i] - energies[j]) / HBAR
            base = w**3 * d2[i, j] / RATE_C
            nw = nbar(w, T)
            lo, hi = (i, j) if energies[i] < energies[j] else (j, i)
            G[hi, lo] = base * (nw + 1)
            G[lo, hi] = base * nw
    A = G.T - np.diag(G.sum(axis=1))
    return G, A

def main():
    # three lumped rotor levels, LiH-like
    B, mu = 222e9, 19.6e-30
    energies = np.array([0.0, 2 * H * B, 6 * H * B])
    d2 = np.zeros((3, 3))
    d2[0, 1] = d2[1, 0] = mu**2 * 1.0       # (N+1)/(2N+1), N=0
    d2[1, 2] = d2[2, 1] = mu**2 * 2.0 / 3.0 # N=1
    T = 293.0
    G, A = build(energies, d2, T)
    print("gamma10=%.15e gamma01=%.15e gamma21=%.15e gamma12=%.15e"
          % (G[1, 0], G[0, 1], G[2, 1], G[1, 2]))
    p0 = np.array([1.0, 0.0, 0.0])
    for t in (0.05, 0.5, 5.0):
        p = expm(A * t) @ p0
        print("p(t=%.2f) = %.15e %.15e %.15e" % (t, *p))
    ns = null_space(A)
    pss = (ns[:, 0] / ns[:, 0].sum())
    print("steady    = %.15e %.15e %.15e" % tuple(pss))
    w = (-(energies - energies.min()) / (KB * T))
    b = np.exp(w); b /= b.sum()
    print("boltzmann = %.15e %.15e %.15e" % tuple(b))
    print("|steady-boltzmann|_inf = %.3e" % np.abs(pss - b).max())

if __name__ == "__main__":
    main()
