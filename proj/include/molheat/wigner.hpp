#pragma once

#include <stdexcept>

namespace molheat {

// Wigner 3j symbol (j1 j2 j3 / m1 m2 m3) for integer or half-integer
// arguments, evaluated via the Racah single-sum formula with log-factorials.
// Returns 0 when a selection rule (triangle, m-sum, |m|<=j) fails; throws
// std::domain_error when the arguments are not a valid half-integer pattern
// (non-half-integer values, j-m not an integer, negative j).
double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3);

} // namespace molheat
