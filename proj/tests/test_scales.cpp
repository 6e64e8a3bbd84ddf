#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "molheat/constants.hpp"
#include "molheat/scales.hpp"

using namespace molheat;

namespace {

const MaterialModel kGold = MaterialModel::drude("Au", 1.37e16, 4.12e13);
const MaterialModel kITO = MaterialModel::drude("ITO", 3.33e15, 1.68e14);
const MaterialModel kSilver = MaterialModel::drude("Ag", 5.77e15, 1.15e13);
const MaterialModel kPlatinum = MaterialModel::drude("Pt", 7.75e15, 1.04e14);

double w_ghz(double f) { return 2 * constants::pi * f * 1e9; }

} // namespace

TEST_CASE("non-retarded crossover length: frozen values") {
    auto eps_at = [](const MaterialModel& m, double w) { return eval_material(m, w).first; };
    CHECK(z_nonretarded(w_ghz(444), eps_at(kGold, w_ghz(444))) ==
          doctest::Approx(7.243039661301552e-07).epsilon(1e-12));
    CHECK(z_nonretarded(w_ghz(21.0), eps_at(kGold, w_ghz(21.0))) ==
          doctest::Approx(5.538131831313197e-06).epsilon(1e-12));
    CHECK(z_nonretarded(w_ghz(35.5), eps_at(kGold, w_ghz(35.5))) ==
          doctest::Approx(3.902628850874065e-06).epsilon(1e-12));
    CHECK(z_nonretarded(w_ghz(2.30), eps_at(kGold, w_ghz(2.30))) ==
          doctest::Approx(2.419306702938492e-05).epsilon(1e-12));
    CHECK(z_nonretarded(w_ghz(21.0), {6.2, 0.21}) ==
          doctest::Approx(2.873910309299389e-04).epsilon(1e-12));

    // conductor limit agrees with the full expression for good metals
    CHECK(z_nonretarded_drude(w_ghz(21.0), 1.37e16, 4.12e13) ==
          doctest::Approx(5.538131830628261e-06).epsilon(1e-12));
    CHECK(z_nonretarded_drude(w_ghz(21.0), 1.37e16, 4.12e13) ==
          doctest::Approx(z_nonretarded(w_ghz(21.0), eps_at(kGold, w_ghz(21.0))))
              .epsilon(1e-9));

    CHECK_THROWS_AS(z_nonretarded(0.0, {2, 1}), std::domain_error);
    CHECK_THROWS_AS(z_nonretarded(w_ghz(21.0), {2, 0}), std::domain_error); // lossless
    CHECK_THROWS_AS(z_nonretarded_drude(w_ghz(21.0), 0, 1), std::domain_error);
}

TEST_CASE("fitted critical distance: frozen values and scaling") {
    CHECK(empirical_zc(w_ghz(21.0), 1.37e16, 4.12e13) ==
          doctest::Approx(1.869343514215249e-05).epsilon(1e-12));
    CHECK(empirical_zc(w_ghz(35.5), 1.37e16, 4.12e13) ==
          doctest::Approx(1.260904869034456e-05).epsilon(1e-12));
    CHECK(empirical_zc(w_ghz(2.30), 1.37e16, 4.12e13) ==
          doctest::Approx(9.818784074875336e-05).epsilon(1e-12));
    CHECK(empirical_zc(w_ghz(0.995), 1.37e16, 4.12e13) ==
          doctest::Approx(1.840713832769814e-04).epsilon(1e-12));
    // w^(-3/4) frequency scaling
    CHECK(empirical_zc(w_ghz(10), 1.37e16, 4.12e13) /
              empirical_zc(w_ghz(160), 1.37e16, 4.12e13) ==
          doctest::Approx(std::pow(16.0, 0.75)).epsilon(1e-12));
    CHECK_THROWS_AS(empirical_zc(w_ghz(21.0), 1.37e16, 0), std::domain_error);
}

TEST_CASE("two-power-law model algebra") {
    double zc = 1.869343514215249e-05, znr = 5.538131831313197e-06;
    CHECK(empirical_factor(1e-6, zc, znr) == doctest::Approx(520.304028153839).epsilon(1e-12));
    CHECK(empirical_factor(1.0, zc, znr) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(empirical_factor(zc, zc, znr) > 2.0); // z^-3 term still adds on top
    CHECK(empirical_rate(1e-6, 0.5, zc, znr) ==
          doctest::Approx(0.5 * empirical_factor(1e-6, zc, znr)).epsilon(1e-14));
    CHECK_THROWS_AS(empirical_factor(0.0, zc, znr), std::domain_error);
}

TEST_CASE("critical distance: frozen numeric references") {
    // Independent scipy scan + root polish, 5 significant digits.
    struct Ref {
        double f_ghz;
        const MaterialModel* m;
        double zc_um;
    };
    const Ref refs[] = {
        {35.5, &kGold, 12.529},  {21.0, &kGold, 18.595},    {0.995, &kGold, 183.664},
        {35.5, &kITO, 35.903},   {186.0, &kSilver, 3.94202}, {21.0, &kPlatinum, 31.099},
    };
    for (const auto& r : refs) {
        CAPTURE(r.f_ghz);
        CAPTURE(r.m->name);
        auto res = critical_distance(w_ghz(r.f_ghz), 1.0 / 3.0,
                                     Reflector::half_space_of(*r.m));
        CHECK(res.z_c * 1e6 == doctest::Approx(r.zc_um).epsilon(1e-3));
        CHECK(std::abs(res.residual) < 1e-6);
        CHECK(res.z_lo <= res.z_c);
        CHECK(res.z_c <= res.z_hi);
        CHECK(res.iterations > 0);
    }
}

TEST_CASE("critical distance: dielectric half-space") {
    auto glass = Reflector::half_space_of(MaterialModel::constant("glass", {6.2, 0.21}));
    auto res = critical_distance(w_ghz(21.0), 1.0 / 3.0, glass);
    CHECK(res.z_c * 1e6 == doctest::Approx(620.0).epsilon(2e-2));
    CHECK(std::abs(res.residual) < 1e-6);
}

TEST_CASE("critical distance: closed-form modes") {
    auto gold = Reflector::half_space_of(kGold);
    // Empirical mode solves z^3 - zc^2 z - znr^3 = 0; numpy root for CaF/Au.
    auto emp = critical_distance(w_ghz(21.0), 1.0 / 3.0, gold, {}, RateMode::Empirical);
    CHECK(emp.z_c == doctest::Approx(1.893189509788747e-05).epsilon(1e-9));
    CHECK(std::abs(empirical_factor(emp.z_c, 1.869343514215249e-05,
                                    5.538131831313197e-06) -
                   2.0) < 1e-6);
    // Non-retarded mode: correction (znr/z)^3 = 1 exactly at znr.
    auto nr = critical_distance(w_ghz(21.0), 1.0 / 3.0, gold, {}, RateMode::NonRetarded);
    CHECK(nr.z_c == doctest::Approx(5.538131831313197e-06).epsilon(1e-9));
}

TEST_CASE("critical distance: no root and bad input") {
    auto vacuum = Reflector::half_space_of(MaterialModel::constant("vacuum", {1, 0}));
    CHECK_THROWS_AS(critical_distance(w_ghz(21.0), 1.0 / 3.0, vacuum), RootNotFoundError);
    auto gold = Reflector::half_space_of(kGold);
    CHECK_THROWS_AS(critical_distance(0.0, 1.0 / 3.0, gold), std::domain_error);
    CHECK_THROWS_AS(critical_distance(w_ghz(21.0), 1.5, gold), std::domain_error);
    CHECK_THROWS_AS(critical_distance(w_ghz(21.0), -0.1, gold), std::domain_error);
}

TEST_CASE("critical distance: slab converges to the half-space limit") {
    // 10 um of ITO is already indistinguishable from bulk at the 36 um crossing.
    auto bulk = critical_distance(w_ghz(35.5), 1.0 / 3.0, Reflector::half_space_of(kITO));
    auto slab10 = critical_distance(w_ghz(35.5), 1.0 / 3.0, Reflector::slab_of(kITO, 10e-6));
    CHECK(std::abs(slab10.z_c / bulk.z_c - 1) < 1e-3);
    // a much thinner film absorbs more in the near field (current crowding
    // boosts Im r_p), pushing the doubling distance outward
    auto slab01 = critical_distance(w_ghz(35.5), 1.0 / 3.0, Reflector::slab_of(kITO, 0.1e-6));
    CHECK(slab01.z_c > 1.5 * bulk.z_c);
}
