#include "molheat/rates.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "molheat/constants.hpp"
#include "molheat/scales.hpp"

namespace molheat {

using constants::c_light;
using constants::eps0;
using constants::hbar;
using constants::k_B;
using constants::pi;

double thermal_n(double omega, double T) {
    if (omega <= 0 || T < 0) throw std::domain_error("thermal_n: need omega > 0, T >= 0");
    if (T == 0) return 0.0;
    const double x = hbar * omega / (k_B * T);
    if (x > 700) return 0.0; // below double underflow anyway
    return 1.0 / std::expm1(x);
}

double freespace_rate(const Transition& t, double T) {
    const double w = t.omega;
    return w * w * w * t.d2_total * thermal_n(w, T) / (3 * pi * hbar * eps0 * c_light * c_light * c_light);
}

double surface_ratio(double omega, double fz, double z, const Reflector& r,
                     const QuadratureSpec& spec, RateMode mode) {
    if (z <= 0) throw std::domain_error("surface_ratio: need z > 0");
    const double pref = 6 * pi * c_light / omega;
    switch (mode) {
        case RateMode::Numeric: {
            const GreenDiag g = scattering_green(z, omega, r, spec);
            return 1.0 + pref * ((1 - fz) * g.g_xx.imag() + fz * g.g_zz.imag());
        }
        case RateMode::NonRetarded: {
            if (!r.half_space())
                throw std::domain_error("surface_ratio: closed-form modes require a half-space");
            const auto [eps, mu] = eval_material(r.material, omega);
            (void)mu;
            const GreenDiag g = nonretarded_green(z, omega, eps);
            return 1.0 + pref * ((1 - fz) * g.g_xx.imag() + fz * g.g_zz.imag());
        }
        case RateMode::Retarded: {
            if (!r.half_space())
                throw std::domain_error("surface_ratio: closed-form modes require a half-space");
            const auto [eps, mu] = eval_material(r.material, omega);
            const GreenDiag g = retarded_green(z, omega, eps, mu);
            return 1.0 + pref * (1 - fz) * g.g_xx.imag();
        }
        case RateMode::Empirical: {
            if (!r.half_space() || r.material.kind != MaterialModel::Kind::Drude)
                throw std::domain_error("surface_ratio: empirical mode requires a Drude half-space");
            const auto [eps, mu] = eval_material(r.material, omega);
            (void)mu;
            const double z_nr = z_nonretarded(omega, eps);
            const double z_c = empirical_zc(omega, r.material.omega_P, r.material.gamma);
            return empirical_factor(z, z_c, z_nr);
        }
    }
    throw std::logic_error("surface_ratio: unknown mode");
}

SurfaceRate surface_rate(const Transition& t, double T, double z, const Reflector& r,
                         const QuadratureSpec& spec, RateMode mode) {
    const double ratio = surface_ratio(t.omega, t.d2_z_fraction, z, r, spec, mode);
    return {ratio * freespace_rate(t, T), ratio};
}

Eigen::MatrixXd RateMatrix::generator() const {
    Eigen::MatrixXd A = gamma.transpose();
    A.diagonal() -= gamma.rowwise().sum();
    return A;
}

RateMatrix build_rate_matrix(const std::vector<std::string>& labels,
                             const Eigen::VectorXd& energies_J, const Eigen::MatrixXd& d2,
                             double T, const std::optional<SurfaceContext>& surface) {
    const auto n = energies_J.size();
    if (static_cast<Eigen::Index>(labels.size()) != n || d2.rows() != n || d2.cols() != n)
        throw std::domain_error("build_rate_matrix: inconsistent dimensions");
    if (T < 0) throw std::domain_error("build_rate_matrix: negative temperature");

    RateMatrix rm;
    rm.labels = labels;
    rm.energies = energies_J;
    rm.gamma = Eigen::MatrixXd::Zero(n, n);

    const double C = 3 * pi * hbar * eps0 * std::pow(c_light, 3);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d2ij = 0.5 * (d2(i, j) + d2(j, i));
            if (d2ij < 0) throw std::domain_error("build_rate_matrix: negative |d|^2");
            if (d2ij == 0) continue;
            const double dE = energies_J(i) - energies_J(j);
            if (dE == 0)
                throw std::domain_error("build_rate_matrix: degenerate coupled levels");
            const double w = std::abs(dE) / hbar;
            // one Green-tensor evaluation per pair, shared by both directions
            double ratio = 1.0;
            if (surface)
                ratio = surface_ratio(w, 1.0 / 3.0, surface->z, surface->reflector,
                                      surface->spec, surface->mode);
            const double base = w * w * w * d2ij * ratio / C;
            const double nw = thermal_n(w, T);
            const Eigen::Index up = dE < 0 ? i : j;   // lower level
            const Eigen::Index dn = dE < 0 ? j : i;   // upper level
            rm.gamma(dn, up) = base * (nw + 1);
            rm.gamma(up, dn) = base * nw;
        }
    }
    rm.populations = Eigen::VectorXd::Zero(n);
    Eigen::Index ground;
    energies_J.minCoeff(&ground);
    rm.populations(ground) = 1.0;
    return rm;
}

Eigen::VectorXd evolve_populations(const RateMatrix& rm, const Eigen::VectorXd& p0, double t) {
    if (t < 0) throw std::domain_error("evolve_populations: negative time");
    const Eigen::MatrixXd At = rm.generator() * t;
    const Eigen::VectorXd p = At.exp() * p0;
    if (!p.allFinite()) throw std::runtime_error("evolve_populations: matrix exponential failed");
    return p;
}

Eigen::VectorXd steady_state(const RateMatrix& rm) {
    const auto n = rm.energies.size();
    Eigen::MatrixXd M = rm.generator();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    M.row(n - 1).setOnes(); // normalization replaces one redundant balance row
    rhs(n - 1) = 1.0;
    const Eigen::VectorXd p = M.fullPivLu().solve(rhs);
    if (!p.allFinite()) throw std::runtime_error("steady_state: singular rate matrix");
    return p;
}

Eigen::VectorXd boltzmann(const Eigen::VectorXd& energies_J, double T) {
    if (T <= 0) throw std::domain_error("boltzmann: need T > 0");
    const Eigen::VectorXd x = (energies_J.array() - energies_J.minCoeff()) / (k_B * T);
    const Eigen::VectorXd w = (-x.array()).exp();
    return w / w.sum();
}

} // namespace molheat
