#pragma once

#include <complex>
#include <stdexcept>

#include "molheat/rates.hpp"

namespace molheat {

// Thrown when the enhancement never crosses the target inside the scan range.
struct RootNotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Distance below which the z^-3 absorption term overtakes the free-space rate:
// (c/w) * [Im eps / (2 |eps+1|^2)]^(1/3).
double z_nonretarded(double omega, cplx eps);

// Same length for a Drude conductor in the |eps| >> 1 limit:
// c * [gamma / (2 wP^2 w^2)]^(1/3).
double z_nonretarded_drude(double omega, double omega_P, double gamma);

// Fitted critical distance for Drude conductors:
// (3c/4) * [gamma / (2 wP^2 w^3)]^(1/4).
double empirical_zc(double omega, double omega_P, double gamma);

// Two-power-law surface model: 1 + z_c^2/z^2 + z_nr^3/z^3.
double empirical_factor(double z, double z_c, double z_nr);
double empirical_rate(double z, double gamma0, double z_c, double z_nr);

struct CriticalDistanceResult {
    double z_c = 0;            // m
    double z_lo = 0, z_hi = 0; // final bracket
    int iterations = 0;        // enhancement-ratio evaluations (scan + refine)
    double residual = 0;       // ratio(z_c) - 2
};

// Outermost distance where the surface doubles the free-space rate. Scans
// inward from min(5c/w, 1 m) on a 40-points/decade log grid down to 1 nm,
// then polishes the bracket with TOMS 748. Throws RootNotFoundError when the
// ratio stays below 2 over the whole range.
CriticalDistanceResult critical_distance(double omega, double fz, const Reflector& r,
                                         const QuadratureSpec& spec = {},
                                         RateMode mode = RateMode::Numeric);

} // namespace molheat
