#pragma once

#include <stdexcept>

#include "molheat/materials.hpp"

namespace molheat {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = -1;         // m^-1; negative means 1e-20 * omega/c
    int max_subdivisions = 2000; // adaptive refinements on top of the pre-split
    double evanescent_cutoff_factor = 40;
};

// Diagonal scattering Green tensor at coincident points, height z.
struct GreenDiag {
    cplx g_xx{0, 0}, g_zz{0, 0}; // m^-1; g_yy = g_xx by symmetry
    double z = 0, omega = 0;
    // Absolute quadrature error estimates for Im g_xx / Im g_zz. Tolerances
    // target the imaginary parts (the rate-determining quantity); real parts
    // come out of the same rule untargeted.
    double err_xx = 0, err_zz = 0;
};

// Thrown when the adaptive quadrature cannot reach the requested tolerance.
struct QuadratureError : std::runtime_error {
    GreenDiag achieved;
    explicit QuadratureError(GreenDiag g)
        : std::runtime_error("scattering_green: tolerance not reached within max_subdivisions"),
          achieved(g) {}
};

double im_trace_G0(double omega); // omega/(2 pi c)

GreenDiag scattering_green(double z, double omega, const Reflector& r,
                           const QuadratureSpec& spec = {});

// Closed forms: near-zone z^-3 law and far-zone z^-1 oscillation.
GreenDiag nonretarded_green(double z, double omega, cplx eps);
GreenDiag retarded_green(double z, double omega, cplx eps, cplx mu);

} // namespace molheat
