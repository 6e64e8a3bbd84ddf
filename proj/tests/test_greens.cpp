#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "molheat/constants.hpp"
#include "molheat/greens.hpp"

using namespace molheat;
using doctest::Approx;

namespace {
constexpr double kC = constants::c_light;
constexpr double kPi = constants::pi;
const MaterialModel kAu = MaterialModel::drude("Au", 1.37e16, 4.12e13);
const MaterialModel kITO = MaterialModel::drude("ITO", 3.33e15, 1.68e14);
const MaterialModel kGlass = MaterialModel::constant("borosilicate_rot", {6.2, 0.21});
const MaterialModel kMetaMM = MaterialModel::constant("meta_mm", {-10, 1}, {-10, 1});
const MaterialModel kVac = MaterialModel::constant("vacuum", {1, 0});

// frozen scipy reference: z, Im g_xx, Im g_zz
struct Ref {
    double z, gxx, gzz;
};
} // namespace

TEST_CASE("free-space trace") {
    CHECK(im_trace_G0(2.78973e12) == Approx(2.78973e12 / (2 * kPi * kC)).epsilon(1e-14));
}

TEST_CASE("gold half-space against the reference integrator") {
    const double w = 2 * kPi * 444e9;
    const Ref refs[] = {
        {14.5e-9, 4.641512670219e7, 9.256497323933e7},
        {200e-9, 4.798990079053e4, 6.656902659293e4},
        {1e-6, 1.667268260488e3, 2.799298079041e3},
        {5e-6, -4.020058728551e2, 5.878706031344e2}, // xx already retardation-suppressed
        {0.5 * kC / w, -3.987512066162e2, 4.476505864934e2},
        {50 * kC / w, 3.674180327162e0, -1.284128703018e-1},
        {500 * kC / w, -6.125502308148e-1, -8.293806775085e-4},
    };
    const auto r = Reflector::half_space_of(kAu);
    for (const auto& ref : refs) {
        const auto g = scattering_green(ref.z, w, r);
        CHECK(g.g_xx.imag() == Approx(ref.gxx).epsilon(1e-6));
        CHECK(g.g_zz.imag() == Approx(ref.gzz).epsilon(1e-6));
        CHECK(g.z == ref.z);
        CHECK(g.omega == w);
        CHECK(g.err_xx >= 0);
        CHECK(g.err_zz >= 0);
    }
}

TEST_CASE("ITO slab and glass against the reference integrator") {
    const double w_slab = 2 * kPi * 35.5e9;
    const auto slab = Reflector::slab_of(kITO, 10e-6);
    auto g = scattering_green(10e-6, w_slab, slab);
    CHECK(g.g_xx.imag() == Approx(5.671346350179e2).epsilon(1e-6));
    CHECK(g.g_zz.imag() == Approx(7.689896666676e2).epsilon(1e-6));
    g = scattering_green(36e-6, w_slab, slab);
    CHECK(g.g_xx.imag() == Approx(1.188017652335e1).epsilon(1e-6));
    CHECK(g.g_zz.imag() == Approx(9.403708457632e1).epsilon(1e-6));

    const double w_glass = 2 * kPi * 21e9;
    g = scattering_green(620e-6, w_glass, Reflector::half_space_of(kGlass));
    CHECK(g.g_xx.imag() == Approx(1.178855019366e1).epsilon(1e-6));
    CHECK(g.g_zz.imag() == Approx(4.731924125954e1).epsilon(1e-6));
}

TEST_CASE("left-handed medium against the reference integrator") {
    const double w = 2 * kPi * 444e9;
    const auto r = Reflector::half_space_of(kMetaMM);
    auto g = scattering_green(0.01 * kC / w, w, r);
    CHECK(g.g_xx.imag() == Approx(2.296549591886e6).epsilon(1e-6));
    CHECK(g.g_zz.imag() == Approx(4.593099183771e6).epsilon(1e-6));
    g = scattering_green(1.0 * kC / w, w, r);
    CHECK(g.g_xx.imag() == Approx(8.421344112659e1).epsilon(1e-6));
    CHECK(g.g_zz.imag() == Approx(1.684268822532e2).epsilon(1e-6));
}

TEST_CASE("vacuum scatters nothing") {
    const double w = 2 * kPi * 444e9;
    for (double z : {1e-8, 1e-6, 1e-4}) {
        const auto g = scattering_green(z, w, Reflector::half_space_of(kVac));
        CHECK(g.g_xx == cplx(0, 0));
        CHECK(g.g_zz == cplx(0, 0));
    }
}

TEST_CASE("near-zone closed form matches the quadrature") {
    const double w = 2 * kPi * 444e9;
    const auto [eps, mu] = eval_material(kAu, w);
    const double z = 14.5e-9; // well inside the non-retarded zone
    const auto gn = scattering_green(z, w, Reflector::half_space_of(kAu));
    const auto gc = nonretarded_green(z, w, eps);
    const double tr_n = 2 * gn.g_xx.imag() + gn.g_zz.imag();
    const double tr_c = 2 * gc.g_xx.imag() + gc.g_zz.imag();
    CHECK(tr_n == Approx(tr_c).epsilon(0.02));
    CHECK(gc.g_zz.imag() == Approx(2 * gc.g_xx.imag()).epsilon(1e-14));
}

TEST_CASE("far-zone closed form matches the quadrature") {
    const double w = 2 * kPi * 444e9;
    const auto [eps, mu] = eval_material(kAu, w);
    const double z = 500 * kC / w;
    const auto gn = scattering_green(z, w, Reflector::half_space_of(kAu));
    const auto gc = retarded_green(z, w, eps, mu);
    CHECK(gn.g_xx.imag() == Approx(gc.g_xx.imag()).epsilon(2e-3));
    CHECK(gc.g_zz == cplx(0, 0));                             // drops one power of 1/z
    CHECK(std::abs(gn.g_zz.imag()) < 0.01 * std::abs(gn.g_xx.imag()));
}

TEST_CASE("tolerance knobs are validated") {
    const double w = 2 * kPi * 444e9;
    const auto r = Reflector::half_space_of(kAu);
    QuadratureSpec s;
    s.rel_tol = 0;
    CHECK_THROWS_AS(scattering_green(1e-6, w, r, s), std::domain_error);
    s.rel_tol = 0.5;
    CHECK_THROWS_AS(scattering_green(1e-6, w, r, s), std::domain_error);
    s = {};
    s.max_subdivisions = 5;
    CHECK_THROWS_AS(scattering_green(1e-6, w, r, s), std::domain_error);
    CHECK_THROWS_AS(scattering_green(0.0, w, r), std::domain_error);
    CHECK_THROWS_AS(scattering_green(1e-6, -w, r), std::domain_error);
}

TEST_CASE("non-convergence reports the partial result") {
    // far beyond the oscillation budget: the pre-split caps out and the
    // refinement allowance is too small to recover
    const double w = 1e15;
    QuadratureSpec s;
    s.max_subdivisions = 10;
    try {
        scattering_green(1.0, w, Reflector::half_space_of(kAu), s);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.achieved.omega == w);
        CHECK(e.achieved.z == 1.0);
        CHECK(e.achieved.err_xx + e.achieved.err_zz > 0);
    }
}

TEST_CASE("tighter tolerance tightens the error estimate") {
    const double w = 2 * kPi * 444e9;
    const auto r = Reflector::half_space_of(kAu);
    QuadratureSpec tight;
    tight.rel_tol = 1e-10;
    const auto g1 = scattering_green(1e-6, w, r);
    const auto g2 = scattering_green(1e-6, w, r, tight);
    CHECK(g2.g_xx.imag() == Approx(g1.g_xx.imag()).epsilon(1e-7));
    CHECK(g2.err_xx <= g1.err_xx + 1e-30);
}
