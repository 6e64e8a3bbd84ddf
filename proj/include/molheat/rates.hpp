#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "molheat/greens.hpp"
#include "molheat/spectro.hpp"

namespace molheat {

enum class RateMode { Numeric, NonRetarded, Retarded, Empirical };

double thermal_n(double omega, double T);

// Ground-state absorption rate in free space: w^3 |d|^2 n / (3 pi hbar eps0 c^3).
double freespace_rate(const Transition& t, double T);

// Surface enhancement factor Gamma/Gamma0 for a channel at omega with
// z-dipole fraction fz; mode selects the full quadrature or a closed form.
double surface_ratio(double omega, double fz, double z, const Reflector& r,
                     const QuadratureSpec& spec = {}, RateMode mode = RateMode::Numeric);

struct SurfaceRate {
    double gamma; // s^-1
    double ratio; // Gamma / Gamma0
};
SurfaceRate surface_rate(const Transition& t, double T, double z, const Reflector& r,
                         const QuadratureSpec& spec = {}, RateMode mode = RateMode::Numeric);

struct SurfaceContext {
    Reflector reflector;
    double z = 0;
    QuadratureSpec spec{};
    RateMode mode = RateMode::Numeric;
};

// N-level rate-equation system. gamma(n,k) is the n->k transition rate.
struct RateMatrix {
    std::vector<std::string> labels;
    Eigen::VectorXd energies;  // J
    Eigen::MatrixXd gamma;     // s^-1, zero diagonal
    Eigen::VectorXd populations; // current state (starts in the lowest level)

    Eigen::MatrixXd generator() const; // A with dp/dt = A p
};

// d2 is the symmetric matrix of squared dipole elements (C^2 m^2); zero means
// uncoupled. Energies must be pairwise distinct wherever d2 is nonzero.
RateMatrix build_rate_matrix(const std::vector<std::string>& labels,
                             const Eigen::VectorXd& energies_J, const Eigen::MatrixXd& d2,
                             double T, const std::optional<SurfaceContext>& surface = {});

Eigen::VectorXd evolve_populations(const RateMatrix& rm, const Eigen::VectorXd& p0, double t);
Eigen::VectorXd steady_state(const RateMatrix& rm);
Eigen::VectorXd boltzmann(const Eigen::VectorXd& energies_J, double T);

} // namespace molheat
