#include "molheat/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace molheat {
namespace {

// Round a physical half-integer (j or m) to its doubled integer form.
// Throws if the value is not close to a multiple of 1/2.
int64_t doubled(double x, const char* what) {
    const double two = 2.0 * x;
    const double r = std::round(two);
    if (std::abs(two - r) > 1e-9)
        throw std::domain_error(std::string("wigner3j: ") + what + " is not a half-integer");
    return static_cast<int64_t>(r);
}

// log(n!) for integer n >= 0.
double lfact(int64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

} // namespace

double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3) {
    const int64_t tj1 = doubled(j1, "j1"), tj2 = doubled(j2, "j2"), tj3 = doubled(j3, "j3");
    const int64_t tm1 = doubled(m1, "m1"), tm2 = doubled(m2, "m2"), tm3 = doubled(m3, "m3");

    if (tj1 < 0 || tj2 < 0 || tj3 < 0)
        throw std::domain_error("wigner3j: negative angular momentum");
    // No state has j - m non-integral; such elements vanish.
    if (((tj1 ^ tm1) & 1) || ((tj2 ^ tm2) & 1) || ((tj3 ^ tm3) & 1)) return 0.0;

    if (tm1 + tm2 + tm3 != 0) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) return 0.0;
    // Triangle rule; perimeter must also be integral (even doubled sum).
    if (tj3 < std::abs(tj1 - tj2) || tj3 > tj1 + tj2) return 0.0;
    if ((tj1 + tj2 + tj3) & 1) return 0.0;

    // All factorial arguments below are genuine integers (doubled values even).
    const int64_t a1 = (tj1 + tj2 - tj3) / 2;
    const int64_t a2 = (tj1 - tj2 + tj3) / 2;
    const int64_t a3 = (-tj1 + tj2 + tj3) / 2;
    const int64_t jsum = (tj1 + tj2 + tj3) / 2;

    const double log_delta = 0.5 * (lfact(a1) + lfact(a2) + lfact(a3) - lfact(jsum + 1));
    const double log_mfac = 0.5 * (lfact((tj1 + tm1) / 2) + lfact((tj1 - tm1) / 2) +
                                   lfact((tj2 + tm2) / 2) + lfact((tj2 - tm2) / 2) +
                                   lfact((tj3 + tm3) / 2) + lfact((tj3 - tm3) / 2));

    // Racah sum over k with all factorial arguments non-negative.
    const int64_t b1 = a1;                       // j1 + j2 - j3 - k
    const int64_t b2 = (tj1 - tm1) / 2;          // j1 - m1 - k
    const int64_t b3 = (tj2 + tm2) / 2;          // j2 + m2 - k
    const int64_t c1 = (tj3 - tj2 + tm1) / 2;    // j3 - j2 + m1 + k
    const int64_t c2 = (tj3 - tj1 - tm2) / 2;    // j3 - j1 - m2 + k
    const int64_t kmin = std::max<int64_t>({0, -c1, -c2});
    const int64_t kmax = std::min<int64_t>({b1, b2, b3});

    double sum = 0.0;
    for (int64_t k = kmin; k <= kmax; ++k) {
        const double lt = lfact(k) + lfact(b1 - k) + lfact(b2 - k) + lfact(b3 - k) +
                          lfact(c1 + k) + lfact(c2 + k);
        const double term = std::exp(log_delta + log_mfac - lt);
        sum += (k & 1) ? -term : term;
    }

    const int64_t phase = (tj1 - tj2 - tm3) / 2;
    return ((phase & 1) ? -1.0 : 1.0) * sum;
}

} // namespace molheat
