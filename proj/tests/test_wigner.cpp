#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "molheat/wigner.hpp"

using molheat::wigner3j;

namespace {
struct Case {
    double j1, j2, j3, m1, m2, m3, value;
};
// generated by tools/oracles/wigner_oracle.py (sympy 1.14.0, exact arithmetic)
const std::vector<Case> kFrozen = {
    {1.0, 1.0, 0.0, 0.0, 0.0, 0.0, -0.5773502691896257},
    {1.0, 1.0, 2.0, 0.0, 0.0, 0.0, 0.3651483716701107},
    {1.0, 1.0, 2.0, 1.0, -1.0, 0.0, 0.18257418583505536},
    {2.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.3651483716701107},
    {2.0, 1.0, 1.0, 1.0, 0.0, -1.0, -0.31622776601683794},
    {2.0, 1.0, 2.0, 1.0, 0.0, -1.0, 0.18257418583505536},
    {3.0, 2.0, 1.0, 0.0, 0.0, 0.0, -0.29277002188455997},
    {4.0, 4.0, 4.0, 0.0, 0.0, 0.0, 0.13409704688030227},
    {10.0, 10.0, 10.0, 5.0, -3.0, -2.0, 0.02789666093836111},
    {20.0, 20.0, 20.0, 10.0, -10.0, 0.0, -6.624096460212324e-05},
    {5.0, 4.0, 3.0, 2.0, -1.0, -1.0, 0.14103623609278534},
    {0.5, 0.5, 1.0, 0.5, -0.5, 0.0, 0.408248290463863},
    {1.5, 0.5, 1.0, 0.5, -0.5, 0.0, -0.408248290463863},
    {1.5, 0.5, 1.0, 1.5, -0.5, -1.0, 0.5},
    {1.5, 1.0, 2.5, -0.5, 0.0, 0.5, 0.31622776601683794},
    {1.5, 1.0, 2.5, -1.5, 0.0, 1.5, -0.25819888974716115},
    {1.5, 1.0, 1.5, -0.5, 1.0, -0.5, 0.3651483716701107},
    {2.5, 1.0, 1.5, 0.5, -1.0, 0.5, -0.22360679774997896},
    {2.5, 0.5, 2.0, 1.5, -0.5, -1.0, -0.3651483716701107},
    {3.5, 2.0, 1.5, 0.5, 1.0, -1.5, 0.11952286093343936},
    {4.5, 4.5, 1.0, 0.5, 0.5, -1.0, -0.22473328748774737},
};
} // namespace

TEST_CASE("3j matches exact reference values") {
    for (const auto& c : kFrozen) {
        CAPTURE(c.j1);
        CAPTURE(c.j2);
        CAPTURE(c.j3);
        CAPTURE(c.m1);
        CHECK(wigner3j(c.j1, c.j2, c.j3, c.m1, c.m2, c.m3) ==
              doctest::Approx(c.value).epsilon(1e-12));
    }
}

TEST_CASE("selection rules give exact zero") {
    CHECK(wigner3j(1, 1, 3, 0, 0, 0) == 0.0);   // triangle violated
    CHECK(wigner3j(1, 1, 1, 1, 1, 1) == 0.0);   // m-sum != 0
    CHECK(wigner3j(1, 1, 2, 2, -2, 0) == 0.0);  // |m| > j
    CHECK(wigner3j(1, 1, 1, 0, 0, 0) == 0.0);   // odd perimeter with zero m's
    CHECK(wigner3j(0.5, 0.5, 0.0, 0.5, -0.5, 0.5) == 0.0);
}

TEST_CASE("invalid half-integer patterns throw") {
    CHECK_THROWS_AS(wigner3j(0.3, 1, 1, 0, 0, 0), std::domain_error);
    CHECK(wigner3j(1, 1, 1, 0.5, -0.5, 0) == 0.0); // j - m not integral: no such state
    CHECK_THROWS_AS(wigner3j(-1, 1, 1, 0, 0, 0), std::domain_error);
}

TEST_CASE("orthogonality over all j <= 4 (integer and half-integer)") {
    // sum_{m1,m2} (2j3+1) * 3j(...m3) * 3j(...m3') = delta(j3,j3') delta(m3,m3')
    for (double twoj1 = 0; twoj1 <= 8; ++twoj1) {
        for (double twoj2 = 0; twoj2 <= 8; ++twoj2) {
            const double j1 = twoj1 / 2, j2 = twoj2 / 2;
            for (double j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 1.0) {
                for (double j3p = std::abs(j1 - j2); j3p <= j1 + j2; j3p += 1.0) {
                    const double m3 = (std::fmod(2 * j3, 2.0) == 0.0) ? 0.0 : 0.5;
                    if (m3 > j3 || m3 > j3p) continue;
                    double acc = 0;
                    for (double m1 = -j1; m1 <= j1; m1 += 1.0)
                        for (double m2 = -j2; m2 <= j2; m2 += 1.0)
                            acc += (2 * j3 + 1) * wigner3j(j1, j2, j3, m1, m2, -m3) *
                                   wigner3j(j1, j2, j3p, m1, m2, -m3);
                    const double expect = (j3 == j3p) ? 1.0 : 0.0;
                    CHECK(acc == doctest::Approx(expect).epsilon(1e-12).scale(1.0));
                }
            }
        }
    }
}

TEST_CASE("permutation symmetries") {
    const double v = wigner3j(3, 2, 1, 1, -2, 1);
    // even (cyclic) permutation invariant
    CHECK(wigner3j(2, 1, 3, -2, 1, 1) == doctest::Approx(v).epsilon(1e-13));
    // odd permutation and m -> -m both give (-1)^(j1+j2+j3)
    const double phase = std::pow(-1.0, 3 + 2 + 1);
    CHECK(wigner3j(2, 3, 1, -2, 1, 1) == doctest::Approx(phase * v).epsilon(1e-13));
    CHECK(wigner3j(3, 2, 1, -1, 2, -1) == doctest::Approx(phase * v).epsilon(1e-13));
}
