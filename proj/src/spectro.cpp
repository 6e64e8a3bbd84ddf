#include "molheat/spectro.hpp"

#include <algorithm>
#include <stdexcept>

#include "molheat/constants.hpp"
#include "molheat/wigner.hpp"

namespace molheat {
namespace {

using constants::hbar;
using constants::pi;

int iround(double x) { return static_cast<int>(std::lround(x)); }

// A pure-|Omega| rotational-electronic state: J plus amplitudes on the
// positive-Omega components (the +/-Omega sectors decouple for our dipole
// operator and give identical strengths).
struct OmegaState {
    double J;
    std::vector<std::pair<double, double>> comps; // (Omega, amplitude)
};

// M-averaged squared dipole between two states, in units of mu^2:
// (1/(2J+1)) sum_{M,M',q} | sum_Omega a'(O) a(O) u^q(J',O,M'; J,O,M) |^2.
double m_avg_d2(const OmegaState& from, const OmegaState& to) {
    double total = 0;
    for (double M = -from.J; M <= from.J + 0.25; M += 1.0) {
        for (double Mp = -to.J; Mp <= to.J + 0.25; Mp += 1.0) {
            for (int q = -1; q <= 1; ++q) {
                double amp = 0;
                for (const auto& [Of, af] : from.comps)
                    for (const auto& [Ot, at] : to.comps) {
                        if (Of != Ot) continue; // Delta Omega = 0 operator
                        amp += af * at * dipole_u(to.J, Ot, Mp, from.J, Of, M, q);
                    }
                total += amp * amp;
            }
        }
    }
    return total / (2 * from.J + 1);
}

GroundState require_sigma(const Molecule& m) {
    if (m.state == GroundState::Pi2)
        throw std::domain_error(m.name + ": not a Sigma ground state");
    return m.state;
}

double sigma_spin(GroundState s) {
    switch (s) {
        case GroundState::Sigma1: return 0.0;
        case GroundState::Sigma2: return 0.5;
        case GroundState::Sigma3: return 1.0;
        default: throw std::domain_error("not a Sigma state");
    }
}

} // namespace

double dipole_u(double J, double Omega, double M, double Jp, double Omegap, double Mp, int q) {
    if (q < -1 || q > 1) throw std::domain_error("dipole_u: q must be -1, 0, or +1");
    if (std::abs(M) > J || std::abs(Omega) > J || std::abs(Mp) > Jp || std::abs(Omegap) > Jp)
        throw std::domain_error("dipole_u: |M| or |Omega| exceeds J");
    const double phase = (iround(M - Omega) % 2 == 0) ? 1.0 : -1.0;
    return phase * std::sqrt((2 * J + 1) * (2 * Jp + 1)) *
           wigner3j(J, 1, Jp, -M, q, Mp) * wigner3j(J, 1, Jp, -Omega, 0, Omegap);
}

double caseb_coefficient(double J, double S, double N, double Omega) {
    const double phase = (iround(J - S) % 2 == 0) ? 1.0 : -1.0;
    return phase * std::sqrt(2 * N + 1) * wigner3j(J, S, N, Omega, -Omega, 0.0);
}

std::vector<std::pair<double, double>> sigma_branching(double S) {
    OmegaState ground{S, {}};
    for (double O = -S; O <= S + 0.25; O += 1.0)
        ground.comps.emplace_back(O, caseb_coefficient(S, S, 0.0, O));

    std::vector<std::pair<double, double>> out;
    for (double Jp = std::abs(1.0 - S); Jp <= 1.0 + S + 0.25; Jp += 1.0) {
        OmegaState excited{Jp, {}};
        for (double O = -std::min(S, Jp); O <= std::min(S, Jp) + 0.25; O += 1.0)
            excited.comps.emplace_back(O, caseb_coefficient(Jp, S, 1.0, O));
        out.emplace_back(Jp, m_avg_d2(ground, excited));
    }
    return out;
}

FineStructure pi_fine_structure(double Be_Hz, double A_so_Hz, double J) {
    if (Be_Hz <= 0) throw std::domain_error("pi_fine_structure: Be must be positive");
    const double twoJ = 2 * J;
    if (std::abs(twoJ - std::lround(twoJ)) > 1e-9 || std::lround(twoJ) % 2 == 0 || J < 0.5)
        throw std::domain_error("pi_fine_structure: J must be a positive half-odd-integer");

    FineStructure fs;
    fs.J = J;
    const double a = A_so_Hz / Be_Hz;
    fs.Q = std::sqrt(4 * (J + 0.5) * (J + 0.5) + a * (a - 4));
    if (J < 1.0) { // single pure-Omega=1/2 level
        fs.E_F1_Hz = fs.E_F2_Hz = Be_Hz - A_so_Hz / 2;
        fs.c_plus = 1.0;
        fs.c_minus = 0.0;
        return fs;
    }
    const double x = J * (J + 1);
    // 2x2 fine-structure Hamiltonian in the (|Omega=1/2>, |Omega=3/2>) basis, Hz.
    const double H11 = -A_so_Hz / 2 + Be_Hz * (x - 0.75 + 1);
    const double H22 = +A_so_Hz / 2 + Be_Hz * (x - 0.75 - 1);
    const double H12 = -Be_Hz * std::sqrt(x - 0.75);
    const double mean = 0.5 * (H11 + H22);
    const double r = std::hypot(0.5 * (H11 - H22), H12);
    fs.E_F1_Hz = mean - r;
    fs.E_F2_Hz = mean + r;
    // eigenvector of the lower level, numerically stable pick
    double v1, v2;
    if (std::abs(H11 - fs.E_F1_Hz) >= std::abs(H22 - fs.E_F1_Hz)) {
        v1 = -H12;
        v2 = H11 - fs.E_F1_Hz;
    } else {
        v1 = H22 - fs.E_F1_Hz;
        v2 = -H12;
    }
    const double n = std::hypot(v1, v2);
    fs.c_plus = v1 / n;
    fs.c_minus = v2 / n;
    if (fs.c_minus < 0) { // fix overall sign: Omega=3/2 amplitude >= 0
        fs.c_plus = -fs.c_plus;
        fs.c_minus = -fs.c_minus;
    }
    return fs;
}

double f_rot(const Molecule& m) {
    if (m.state != GroundState::Pi2) return 1.0;
    if (std::isnan(m.A_so_Hz)) throw std::domain_error(m.name + ": missing spin-orbit constant");
    const auto fs = pi_fine_structure(m.Be_Hz, m.A_so_Hz, 1.5);
    const double cp2 = fs.c_plus * fs.c_plus, cm2 = fs.c_minus * fs.c_minus;
    return (14.0 / 15.0) * cp2 + (2.0 / 5.0) * cm2 + (4.0 / 15.0) * cp2 * cm2;
}

std::vector<Transition> sigma_rotational_channels(const Molecule& m) {
    const double S = sigma_spin(require_sigma(m));
    double total = 0;
    for (const auto& [Jp, share] : sigma_branching(S)) total += share;
    Transition t;
    t.label = "rot";
    t.omega = 2 * pi * 2 * m.Be_Hz; // E_N = h B N(N+1): N=0 -> 1 gap is 2B
    t.d2_total = m.mu_e_Cm * m.mu_e_Cm * total;
    return {t};
}

std::vector<Transition> pi_rotational_channels(const Molecule& m) {
    if (m.state != GroundState::Pi2)
        throw std::domain_error(m.name + ": not a 2Pi ground state");
    if (std::isnan(m.A_so_Hz)) throw std::domain_error(m.name + ": missing spin-orbit constant");
    if (m.A_so_Hz > 0)
        throw std::domain_error(m.name + ": regular (A>0) 2Pi states not supported");

    const auto g32 = pi_fine_structure(m.Be_Hz, m.A_so_Hz, 1.5);
    const auto g52 = pi_fine_structure(m.Be_Hz, m.A_so_Hz, 2.5);
    const auto g12 = pi_fine_structure(m.Be_Hz, m.A_so_Hz, 0.5);

    const OmegaState ground{1.5, {{0.5, g32.c_plus}, {1.5, g32.c_minus}}};
    struct Target {
        const char* label;
        OmegaState state;
        double E_Hz;
    };
    const std::vector<Target> targets = {
        {"rot_a", {2.5, {{0.5, g52.c_plus}, {1.5, g52.c_minus}}}, g52.E_F1_Hz},
        {"rot_b", {0.5, {{0.5, 1.0}}}, g12.E_F2_Hz},
        {"rot_c", {1.5, {{0.5, g32.c_minus}, {1.5, -g32.c_plus}}}, g32.E_F2_Hz},
        {"rot_d", {2.5, {{0.5, g52.c_minus}, {1.5, -g52.c_plus}}}, g52.E_F2_Hz},
    };

    std::vector<Transition> out;
    const double mu2 = m.mu_e_Cm * m.mu_e_Cm;
    for (const auto& tg : targets) {
        Transition t;
        t.label = tg.label;
        t.omega = 2 * pi * (tg.E_Hz - g32.E_F1_Hz);
        t.d2_total = mu2 * m_avg_d2(ground, tg.state);
        out.push_back(t);
    }
    return out;
}

std::vector<Transition> rotational_channels(const Molecule& m) {
    return m.state == GroundState::Pi2 ? pi_rotational_channels(m)
                                       : sigma_rotational_channels(m);
}

Transition vibrational_channel(const Molecule& m) {
    Transition t;
    t.label = "vib";
    t.omega = 2 * pi * m.omega_e_Hz;
    if (!std::isnan(m.d_vib_Cm)) {
        t.d2_total = m.d_vib_Cm * m.d_vib_Cm;
    } else if (!std::isnan(m.mu_e_prime_C)) {
        t.d2_total = hbar * m.mu_e_prime_C * m.mu_e_prime_C * f_rot(m) /
                     (4 * pi * m.m_reduced_kg * m.omega_e_Hz);
    } else {
        throw std::domain_error(m.name + ": no dipole derivative or measured vibrational dipole");
    }
    return t;
}

} // namespace molheat
