#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "molheat/constants.hpp"
#include "molheat/materials.hpp"

using namespace molheat;
using doctest::Approx;

namespace {
constexpr double kC = constants::c_light;
const MaterialModel kAu = MaterialModel::drude("Au", 1.37e16, 4.12e13);
const MaterialModel kITO = MaterialModel::drude("ITO", 3.33e15, 1.68e14);
const MaterialModel kGlass = MaterialModel::constant("borosilicate_rot", {6.2, 0.21});
const MaterialModel kVac = MaterialModel::constant("vacuum", {1, 0});

void check_cplx(cplx got, double re, double im, double rel = 1e-12) {
    CHECK(got.real() == Approx(re).epsilon(rel));
    CHECK(got.imag() == Approx(im).epsilon(rel));
}
} // namespace

TEST_CASE("Drude permittivity") {
    auto [eps, mu] = eval_material(kAu, 2.78973e12);
    check_cplx(eps, -1.100667417238214e5, 1.625530412986719e6);
    CHECK(mu == cplx(1, 0));

    eps = eval_material(kAu, 2 * constants::pi * 35.5e9).first;
    check_cplx(eps, -1.105681505378107e5, 2.042316131539313e7);

    eps = eval_material(kITO, 2.78973e12).first;
    check_cplx(eps, -3.917807237564843e2, 2.365360145644538e4);

    CHECK_THROWS_AS(eval_material(kAu, 0.0), std::domain_error);
    CHECK_THROWS_AS(MaterialModel::drude("bad", -1, 1), std::domain_error);
}

TEST_CASE("constant and tabulated materials") {
    auto [eps, mu] = eval_material(kGlass, 1e12);
    CHECK(eps == cplx(6.2, 0.21));
    CHECK(mu == cplx(1, 0));
    CHECK_THROWS_AS(MaterialModel::constant("gainy", {2, -0.1}), std::domain_error);

    MaterialModel tab;
    tab.name = "tab";
    tab.kind = MaterialModel::Kind::Table;
    tab.table = {{1e12, {2, 0.1}, {1, 0}}, {1e14, {4, 0.3}, {1, 0}}};
    check_cplx(eval_material(tab, 1e13).first, 3.0, 0.2); // log-frequency midpoint
    CHECK(eval_material(tab, 1e12).first == cplx(2, 0.1));
    CHECK(eval_material(tab, 1e14).first == cplx(4, 0.3));
    CHECK_THROWS_AS(eval_material(tab, 0.9e12), std::range_error);
    CHECK_THROWS_AS(eval_material(tab, 1.1e14), std::range_error);
}

TEST_CASE("square root branch") {
    CHECK(sqrt_im_pos({4, 0}) == cplx(2, 0));
    CHECK(sqrt_im_pos({-4, 0}) == cplx(0, 2));
    const cplx a = sqrt_im_pos({0, 2});
    CHECK(a.real() == Approx(1.0));
    CHECK(a.imag() == Approx(1.0));
    const cplx b = sqrt_im_pos({0, -2});
    CHECK(b.real() == Approx(-1.0));
    CHECK(b.imag() == Approx(1.0));
    for (double re : {-3.0, -0.5, 0.0, 0.5, 3.0})
        for (double im : {-2.0, -0.1, 0.0, 0.1, 2.0}) {
            const cplx w{re, im};
            const cplx r = sqrt_im_pos(w);
            CHECK(r.imag() >= 0);
            CHECK(std::abs(r * r - w) <= 1e-14 * std::max(1.0, std::abs(w)));
        }
}

TEST_CASE("wave vectors") {
    const double w = 2.78973e12, k0 = w / kC;
    auto wv = wave_vectors(w, 0, {1, 0}, {1, 0});
    CHECK(wv.beta.real() == Approx(k0).epsilon(1e-14));
    CHECK(wv.beta.imag() == 0);
    wv = wave_vectors(w, 2 * k0, {1, 0}, {1, 0});
    CHECK(wv.beta.real() == 0);
    CHECK(wv.beta.imag() == Approx(std::sqrt(3.0) * k0).epsilon(1e-14));
}

TEST_CASE("half-space Fresnel coefficients, gold") {
    const double w = 2.78973e12, k0 = w / kC;
    auto r = reflection_half_space(w, 0, kAu);
    check_cplx(r.rs, -9.989300452817669e-1, -1.143540605556184e-3, 1e-11);
    check_cplx(r.rp, 9.989300452817670e-1, 1.143540605556221e-3, 1e-11);
    r = reflection_half_space(w, 0.5 * k0, kAu);
    check_cplx(r.rs, -9.990734015744412e-1, -9.904772512613063e-4, 1e-11);
    check_cplx(r.rp, 9.987645080759743e-1, 1.320228318174996e-3, 1e-11);
    r = reflection_half_space(w, 2.0 * k0, kAu); // evanescent
    check_cplx(r.rs, -9.980174591335188e-1, 1.849400619613902e-3, 1e-11);
    check_cplx(r.rp, 1.000660957060086e0, 6.181004502007066e-4, 1e-11);
    r = reflection_half_space(w, 100.0 * k0, kAu); // deep near field
    check_cplx(r.rs, -8.866616380763600e-1, 9.510863189869732e-2, 1e-11);
    check_cplx(r.rp, 1.000011417901429e0, 1.073669666005438e-5, 1e-11);
}

TEST_CASE("vacuum does not reflect") {
    const double w = 1e12, k0 = w / kC;
    for (double q : {0.0, 0.3 * k0, 5 * k0}) {
        const auto r = reflection_half_space(w, q, kVac);
        CHECK(std::abs(r.rs) == 0.0);
        CHECK(std::abs(r.rp) == 0.0);
    }
}

TEST_CASE("impedance-matched media do not reflect at normal incidence") {
    for (cplx em : {cplx(10, 1), cplx(-10, 1)}) {
        const auto m = MaterialModel::constant("meta", em, em);
        const auto r = reflection_half_space(2.78973e12, 0, m);
        CHECK(std::abs(r.rs) < 1e-14);
        CHECK(std::abs(r.rp) < 1e-14);
    }
}

TEST_CASE("propagating reflection is passive") {
    const double w = 2.78973e12, k0 = w / kC;
    for (const MaterialModel* m : {&kAu, &kITO, &kGlass}) {
        for (double f : {0.0, 0.2, 0.5, 0.9, 0.99}) {
            const auto r = reflection_half_space(w, f * k0, *m);
            CHECK(std::abs(r.rs) <= 1 + 1e-12);
            CHECK(std::abs(r.rp) <= 1 + 1e-12);
        }
    }
}

TEST_CASE("slab against the two-interface reference") {
    const double w = 2 * constants::pi * 35.5e9, k0 = w / kC;
    auto r = reflection_slab(w, 0.3 * k0, kITO, 10e-6, kVac);
    check_cplx(r.rs, -9.975165709256401e-1, -2.497698720294535e-3, 1e-11);
    check_cplx(r.rp, 9.972709478066208e-1, 2.744041617041856e-3, 1e-11);
    r = reflection_slab(w, 20 * k0, kITO, 10e-6, kVac);
    check_cplx(r.rs, -9.476468614251480e-1, 4.928208298800767e-2, 1e-11);
    check_cplx(r.rp, 1.000131317159631e0, 1.304262798863580e-4, 1e-11);
    r = reflection_slab(w, 0.3 * k0, kITO, 0.5e-6, kVac);
    check_cplx(r.rs, -9.829636187188993e-1, -2.567646693022340e-4, 1e-11);
    check_cplx(r.rp, 9.813101861126042e-1, 2.818603601202036e-4, 1e-11);
    r = reflection_slab(w, 20 * k0, kITO, 0.5e-6, kVac);
    check_cplx(r.rs, -8.784317092682387e-1, 3.194327242174142e-1, 1e-11);
    check_cplx(r.rp, 1.000012793047063e0, 9.095836534053682e-4, 1e-11);
    r = reflection_slab(w, 0.3 * k0, kITO, 10e-6, kGlass);
    check_cplx(r.rs, -9.975165062365768e-1, -2.497589080696603e-3, 1e-11);
    check_cplx(r.rp, 9.972708795877008e-1, 2.743925703437486e-3, 1e-11);
}

TEST_CASE("slab composition identity in vacuum") {
    // r = r12 (1 - E) / (1 - r12^2 E) for a vacuum-backed slab
    const double w = 2 * constants::pi * 35.5e9, k0 = w / kC;
    const auto [eps, mu] = eval_material(kITO, w);
    for (double qf : {0.0, 0.4, 0.95, 3.0, 40.0}) {
        const double q = qf * k0;
        for (double d : {0.2e-6, 2e-6, 30e-6}) {
            const auto wv = wave_vectors(w, q, eps, mu);
            const cplx E = std::exp(cplx(0, 2) * wv.beta1 * d);
            const auto r1 = reflection_half_space(w, q, kITO);
            const auto rsl = reflection_slab(w, q, kITO, d, kVac);
            const cplx ref_s = r1.rs * (1.0 - E) / (1.0 - r1.rs * r1.rs * E);
            const cplx ref_p = r1.rp * (1.0 - E) / (1.0 - r1.rp * r1.rp * E);
            CHECK(std::abs(rsl.rs - ref_s) < 1e-10);
            CHECK(std::abs(rsl.rp - ref_p) < 1e-10);
        }
    }
}

TEST_CASE("slab limits") {
    const double w = 2.78973e12, k0 = w / kC;

    // zero thickness exposes the substrate
    for (double q : {0.0, 0.6 * k0, 8 * k0}) {
        const auto r0 = reflection_slab(w, q, kAu, 0.0, kGlass);
        const auto rg = reflection_half_space(w, q, kGlass);
        CHECK(std::abs(r0.rs - rg.rs) < 1e-12);
        CHECK(std::abs(r0.rp - rg.rp) < 1e-12);
    }

    // opaque thickness reproduces the half-space, with no overflow
    for (double q : {0.0, 0.6 * k0, 8 * k0, 100 * k0}) {
        const auto rthick = reflection_slab(w, q, kAu, 1.0, kVac);
        const auto rhalf = reflection_half_space(w, q, kAu);
        CHECK(std::isfinite(rthick.rs.real()));
        CHECK(std::isfinite(rthick.rp.real()));
        CHECK(std::abs(rthick.rs - rhalf.rs) < 1e-12);
        CHECK(std::abs(rthick.rp - rhalf.rp) < 1e-12);
    }

    // vacuum slab on vacuum is invisible
    const auto rv = reflection_slab(w, 0.3 * k0, kVac, 5e-6, kVac);
    CHECK(std::abs(rv.rs) < 1e-14);
    CHECK(std::abs(rv.rp) < 1e-14);
}

TEST_CASE("thin conductor slab near-field enhancement is monotone in 1/d") {
    // quasistatic r_p grows as the slab thins (coth(qd) term)
    const double w = 2 * constants::pi * 35.5e9, k0 = w / kC;
    const double q = 50 * k0;
    double prev = 0;
    for (double d : {100e-6, 10e-6, 1e-6, 0.1e-6}) {
        const double im_rp = reflection_slab(w, q, kITO, d, kVac).rp.imag();
        CHECK(im_rp >= prev);
        prev = im_rp;
    }
}

TEST_CASE("reflector constructors") {
    const auto h = Reflector::half_space_of(kAu);
    CHECK(h.half_space());
    const auto s = Reflector::slab_of(kITO, 10e-6, kGlass);
    CHECK(!s.half_space());
    CHECK(s.thickness == 10e-6);
    CHECK(s.substrate.has_value());
    const auto sv = Reflector::slab_of(kITO, 10e-6);
    CHECK(!sv.substrate.has_value()); // vacuum backing by default
}
