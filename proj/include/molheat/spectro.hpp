#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace molheat {

enum class GroundState { Sigma1, Sigma2, Sigma3, Pi2 };

// Spectroscopic constants; frequencies are ordinary frequencies in Hz.
struct Molecule {
    std::string name;
    GroundState state = GroundState::Sigma1;
    double Be_Hz = 0;                // rotational constant
    double omega_e_Hz = 0;           // vibrational constant
    double mu_e_Cm = 0;              // permanent dipole moment
    double mu_e_prime_C = NAN;       // dipole derivative (optional)
    double m_reduced_kg = 0;
    double A_so_Hz = NAN;            // spin-orbit constant (2Pi only)
    double d_vib_Cm = NAN;           // measured |d| override for v=0->1 (optional)
};

// One heating channel out of the ground state. Angular frequency in rad/s.
struct Transition {
    std::string label;       // "rot", "rot_a".."rot_d", "vib"
    double omega = 0;        // rad/s
    double d2_total = 0;     // C^2 m^2
    double d2_z_fraction = 1.0 / 3.0; // isotropic average
};

// Fine-structure doublet of a 2Pi state at given J; energies in Hz (E/h).
struct FineStructure {
    double J = 0;
    double E_F1_Hz = 0, E_F2_Hz = 0; // F1 <= F2
    double c_plus = 0, c_minus = 0;  // |F1> = c+|Omega=1/2> + c-|Omega=3/2>
    double Q = 0;
};

// Direction-cosine matrix element u^q between signed-Omega basis states.
double dipole_u(double J, double Omega, double M, double Jp, double Omegap, double Mp, int q);

// Hund's case (b) expansion coefficient <Omega; J | N; J> for spin S.
double caseb_coefficient(double J, double S, double N, double Omega);

// Per-J' share of sum_k |d_0k|^2 / mu_e^2 out of the rotational ground level
// (N=0 -> N=1), by explicit M-summation. Pairs are (J', share).
std::vector<std::pair<double, double>> sigma_branching(double S);

FineStructure pi_fine_structure(double Be_Hz, double A_so_Hz, double J);

// Fraction of mu'^2 entering the 2Pi vibrational strength; 1 for Sigma states.
double f_rot(const Molecule& m);

std::vector<Transition> sigma_rotational_channels(const Molecule& m);
std::vector<Transition> pi_rotational_channels(const Molecule& m);
std::vector<Transition> rotational_channels(const Molecule& m); // dispatcher
Transition vibrational_channel(const Molecule& m);

} // namespace molheat
