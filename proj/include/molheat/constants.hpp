#pragma once

// CODATA 2018 exact/recommended values (SI).
namespace molheat::constants {

inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double h_planck = 6.62607015e-34; // J s
inline constexpr double k_B = 1.380649e-23;       // J/K
inline constexpr double eps0 = 8.8541878128e-12;  // F/m
inline constexpr double c_light = 2.99792458e8;   // m/s
inline constexpr double pi = 3.14159265358979323846;

} // namespace molheat::constants
