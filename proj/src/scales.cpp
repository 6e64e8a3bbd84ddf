#include "molheat/scales.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "molheat/constants.hpp"

namespace molheat {

using constants::c_light;

double z_nonretarded(double omega, cplx eps) {
    if (omega <= 0) throw std::domain_error("z_nonretarded: need omega > 0");
    const double num = eps.imag();
    const double den = 2 * std::norm(eps + 1.0);
    if (num <= 0 || den == 0) throw std::domain_error("z_nonretarded: need Im eps > 0");
    return c_light / omega * std::cbrt(num / den);
}

double z_nonretarded_drude(double omega, double omega_P, double gamma) {
    if (omega <= 0 || omega_P <= 0 || gamma <= 0)
        throw std::domain_error("z_nonretarded_drude: need positive parameters");
    return c_light * std::cbrt(gamma / (2 * omega_P * omega_P * omega * omega));
}

double empirical_zc(double omega, double omega_P, double gamma) {
    if (omega <= 0 || omega_P <= 0 || gamma <= 0)
        throw std::domain_error("empirical_zc: need positive parameters");
    return 0.75 * c_light *
           std::pow(gamma / (2 * omega_P * omega_P * omega * omega * omega), 0.25);
}

double empirical_factor(double z, double z_c, double z_nr) {
    if (z <= 0) throw std::domain_error("empirical_factor: need z > 0");
    const double a = z_c / z, b = z_nr / z;
    return 1.0 + a * a + b * b * b;
}

double empirical_rate(double z, double gamma0, double z_c, double z_nr) {
    return gamma0 * empirical_factor(z, z_c, z_nr);
}

namespace {
constexpr double kZFloor = 1e-9; // m
constexpr double kZCeil = 1.0;   // m
} // namespace

CriticalDistanceResult critical_distance(double omega, double fz, const Reflector& r,
                                         const QuadratureSpec& spec, RateMode mode) {
    if (omega <= 0) throw std::domain_error("critical_distance: need omega > 0");
    if (!(fz >= 0 && fz <= 1)) throw std::domain_error("critical_distance: fz outside [0,1]");

    int evals = 0;
    auto h = [&](double z) {
        ++evals;
        return surface_ratio(omega, fz, z, r, spec, mode) - 2.0;
    };

    const double step = std::pow(10.0, -1.0 / 40.0); // 40 points per decade
    double z_lo = 0, h_lo = 0, z_hi = 0, h_hi = 0;
    bool bracketed = false;

    double z = std::min(5 * c_light / omega, kZCeil);
    double hz = h(z);
    if (hz >= 0) {
        // Start point is already inside the doubled region: walk outward.
        while (z < kZCeil && !bracketed) {
            const double zn = std::min(z / step, kZCeil);
            const double hn = h(zn);
            if (hn < 0) {
                z_lo = z;
                h_lo = hz;
                z_hi = zn;
                h_hi = hn;
                bracketed = true;
            } else {
                z = zn;
                hz = hn;
            }
        }
        if (!bracketed)
            throw RootNotFoundError("critical_distance: ratio still >= 2 at the 1 m ceiling");
    } else {
        while (z > kZFloor && !bracketed) {
            const double zn = std::max(z * step, kZFloor);
            const double hn = h(zn);
            if (hn >= 0) {
                z_lo = zn;
                h_lo = hn;
                z_hi = z;
                h_hi = hz;
                bracketed = true;
            } else {
                z = zn;
                hz = hn;
            }
        }
        if (!bracketed)
            throw RootNotFoundError("critical_distance: no doubling found in [1 nm, 1 m]");
    }

    CriticalDistanceResult res;
    if (h_lo == 0) {
        res.z_c = res.z_lo = res.z_hi = z_lo;
    } else {
        boost::uintmax_t it = 100;
        const auto bracket = boost::math::tools::toms748_solve(
            h, z_lo, z_hi, h_lo, h_hi, boost::math::tools::eps_tolerance<double>(30), it);
        res.z_lo = bracket.first;
        res.z_hi = bracket.second;
        res.z_c = 0.5 * (bracket.first + bracket.second);
    }
    res.residual = h(res.z_c);
    res.iterations = evals;
    return res;
}

} // namespace molheat
