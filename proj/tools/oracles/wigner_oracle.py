#!/usr/bin/env python3
"""Frozen oracle values for the 3j implementation.

Uses sympy's exact symbolic wigner_3j (independent implementation, exact
rational/radical arithmetic) and prints a C++ initializer table. Run once;
the emitted values are pasted into tests/test_wigner.cpp.
"""
from fractions import Fraction

import sympy
from sympy import Rational, sqrt
from sympy.physics.wigner import wigner_3j

CASES = [
    # integer arguments
    (1, 1, 0, 0, 0, 0),
    (1, 1, 2, 0, 0, 0),
    (1, 1, 2, 1, -1, 0),
    (2, 1, 1, 0, 0, 0),
    (2, 1, 1, 1, 0, -1),
    (2, 1, 2, 1, 0, -1),
    (3, 2, 1, 0, 0, 0),
    (4, 4, 4, 0, 0, 0),
    (10, 10, 10, 5, -3, -2),
    (20, 20, 20, 10, -10, 0),
    (5, 4, 3, 2, -1, -1),
    # half-integer arguments (fine-structure machinery)
    (Rational(1, 2), Rational(1, 2), 1, Rational(1, 2), Rational(-1, 2), 0),
    (Rational(3, 2), Rational(1, 2), 1, Rational(1, 2), Rational(-1, 2), 0),
    (Rational(3, 2), Rational(1, 2), 1, Rational(3, 2), Rational(-1, 2), -1),
    (Rational(3, 2), 1, Rational(5, 2), Rational(-1, 2), 0, Rational(1, 2)),
    (Rational(3, 2), 1, Rational(5, 2), Rational(-3, 2), 0, Rational(3, 2)),
    (Rational(3, 2), 1, Rational(3, 2), Rational(-1, 2), 1, Rational(-1, 2)),
    (Rational(5, 2), 1, Rational(3, 2), Rational(1, 2), -1, Rational(1, 2)),
    (Rational(5, 2), Rational(1, 2), 2, Rational(3, 2), Rational(-1, 2), -1),
    (Rational(7, 2), 2, Rational(3, 2), Rational(1, 2), 1, Rational(-3, 2)),
    (Rational(9, 2), Rational(9, 2), 1, Rational(1, 2), Rational(1, 2), -1),
]


def fmt(x):
    if isinstance(x, Rational):
        return f"{Fraction(int(x.p), int(x.q))}"
    return str(x)


def main():
    print("// generated by tools/oracles/wigner_oracle.py (sympy %s)" % sympy.__version__)
    for (j1, j2, j3, m1, m2, m3) in CASES:
        v = wigner_3j(j1, j2, j3, m1, m2, m3)
        vf = float(sympy.N(v, 25))
        args = ", ".join(
            f"{float(a):.1f}" if not isinstance(a, int) else f"{a}.0"
            for a in (j1, j2, j3, m1, m2, m3)
        )
        print(f"    {{{args}, {vf!r}}},  // exact {sympy.nsimplify(v)}")


if __name__ == "__main__":
    main()
