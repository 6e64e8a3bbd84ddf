#include "molheat/greens.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "molheat/constants.hpp"

namespace molheat {

using constants::c_light;
using constants::pi;

double im_trace_G0(double omega) {
    if (omega <= 0) throw std::domain_error("im_trace_G0: omega must be positive");
    return omega / (2 * pi * c_light);
}

GreenDiag nonretarded_green(double z, double omega, cplx eps) {
    if (z <= 0 || omega <= 0) throw std::domain_error("nonretarded_green: need z, omega > 0");
    GreenDiag g;
    g.z = z;
    g.omega = omega;
    g.g_xx = c_light * c_light / (32 * pi * omega * omega * z * z * z) * (eps - 1.0) / (eps + 1.0);
    g.g_zz = 2.0 * g.g_xx;
    return g;
}

GreenDiag retarded_green(double z, double omega, cplx eps, cplx mu) {
    if (z <= 0 || omega <= 0) throw std::domain_error("retarded_green: need z, omega > 0");
    const cplx se = sqrt_im_pos(eps), sm = sqrt_im_pos(mu);
    GreenDiag g;
    g.z = z;
    g.omega = omega;
    g.g_xx = std::exp(cplx(0, 2 * z * omega / c_light)) / (8 * pi * z) * (sm - se) / (sm + se);
    g.g_zz = 0;
    return g;
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK QK15).
constexpr double xgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                           0.741531185599394, 0.586087235467691, 0.405845151377397,
                           0.207784955007898, 0.0};
constexpr double wgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                           0.140653259715525, 0.169004726639267, 0.190350578064785,
                           0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                          0.417959183673469};

struct V2 {
    cplx xx{0, 0}, zz{0, 0};
    V2& operator+=(const V2& o) {
        xx += o.xx;
        zz += o.zz;
        return *this;
    }
};

struct Interval {
    double a, b;
    V2 val;
    double err_xx, err_zz;
};

template <class F>
Interval gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    V2 k, g;
    for (int j = 0; j < 8; ++j) {
        V2 s = f(c - h * xgk[j]);
        if (j < 7) {
            const V2 s2 = f(c + h * xgk[j]);
            s.xx += s2.xx;
            s.zz += s2.zz;
        }
        k.xx += wgk[j] * s.xx;
        k.zz += wgk[j] * s.zz;
        if (j % 2 == 1 || j == 7) {
            const double w = wg[j / 2];
            g.xx += w * s.xx;
            g.zz += w * s.zz;
        }
    }
    Interval iv{a, b, {h * k.xx, h * k.zz}, 0, 0};
    // Error of the imaginary part only: that is the physical output, and near
    // a conductor Re g dwarfs Im g, so a magnitude-based criterion would let
    // the real part satisfy the tolerance on the imaginary part's behalf.
    iv.err_xx = std::abs(h * (k.xx.imag() - g.xx.imag()));
    iv.err_zz = std::abs(h * (k.zz.imag() - g.zz.imag()));
    return iv;
}

struct QuadResult {
    V2 val;
    double err_xx = 0, err_zz = 0;
    bool converged = true;
};

// Globally adaptive refinement over a pre-split edge list.
template <class F>
QuadResult integrate(F&& f, const std::vector<double>& edges, double rel_tol, double abs_tol,
                     int max_subdivisions) {
    std::vector<Interval> ivs;
    ivs.reserve(edges.size() + static_cast<size_t>(std::max(max_subdivisions, 0)));
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i + 1] > edges[i]) ivs.push_back(gk15(f, edges[i], edges[i + 1]));

    auto totals = [&ivs] {
        QuadResult r;
        for (const auto& iv : ivs) {
            r.val += iv.val;
            r.err_xx += iv.err_xx;
            r.err_zz += iv.err_zz;
        }
        return r;
    };

    QuadResult r = totals();
    for (int it = 0; it < max_subdivisions; ++it) {
        const double tol_xx = std::max(abs_tol, rel_tol * std::abs(r.val.xx.imag()));
        const double tol_zz = std::max(abs_tol, rel_tol * std::abs(r.val.zz.imag()));
        if (r.err_xx <= tol_xx && r.err_zz <= tol_zz) return r;
        auto worst = std::max_element(ivs.begin(), ivs.end(), [](const auto& l, const auto& g) {
            return l.err_xx + l.err_zz < g.err_xx + g.err_zz;
        });
        const double a = worst->a, b = worst->b, m = 0.5 * (a + b);
        if (m <= a || m >= b) break; // interval at machine resolution
        *worst = gk15(f, a, m);
        ivs.push_back(gk15(f, m, b));
        r = totals();
    }
    const double tol_xx = std::max(abs_tol, rel_tol * std::abs(r.val.xx.imag()));
    const double tol_zz = std::max(abs_tol, rel_tol * std::abs(r.val.zz.imag()));
    r.converged = r.err_xx <= tol_xx && r.err_zz <= tol_zz;
    return r;
}

} // namespace

GreenDiag scattering_green(double z, double omega, const Reflector& r,
                           const QuadratureSpec& spec) {
    if (z <= 0 || omega <= 0) throw std::domain_error("scattering_green: need z, omega > 0");
    if (!(spec.rel_tol > 0) || spec.rel_tol > 1e-2)
        throw std::domain_error("scattering_green: rel_tol must be in (0, 1e-2]");
    if (spec.max_subdivisions < 10)
        throw std::domain_error("scattering_green: max_subdivisions must be >= 10");

    const double k0 = omega / c_light;
    const double abs_tol = spec.abs_tol < 0 ? 1e-20 * k0 : spec.abs_tol;

    // Propagating part: beta in [0, k0], integrand oscillates as e^{2 i beta z};
    // pre-split so each segment spans at most 1/8 of the oscillation period.
    auto f_prop = [&](double beta) {
        const RsRp rr = reflect_beta(r, omega, beta);
        const cplx ph = cplx(0, 1.0 / (8 * pi)) * std::exp(cplx(0, 2 * beta * z));
        const double s2 = beta * beta / (k0 * k0);
        return V2{(rr.rs - s2 * rr.rp) * ph, 2.0 * (1.0 - s2) * rr.rp * ph};
    };
    const double seg = pi / (4 * z);
    const auto n_prop = static_cast<size_t>(std::clamp(std::ceil(k0 / seg), 1.0, 2e5));
    std::vector<double> prop_edges(n_prop + 1);
    for (size_t i = 0; i <= n_prop; ++i) prop_edges[i] = k0 * static_cast<double>(i) / n_prop;
    const QuadResult prop =
        integrate(f_prop, prop_edges, spec.rel_tol, abs_tol / 2, spec.max_subdivisions);

    // Evanescent part under t = 2 b z: (1/2z) * int_0^tmax e^{-t} g(t/2z) dt with
    // log-spaced segments; the cutoff tracks both the e^{-t} scale and the
    // material scale |sqrt(eps mu)| omega/c where r_p still varies.
    auto mat_scale = [&](const MaterialModel& m) {
        const auto [e, u] = eval_material(m, omega);
        return std::abs(sqrt_im_pos(e * u));
    };
    double s_max = mat_scale(r.material);
    if (!r.half_space() && r.substrate) s_max = std::max(s_max, mat_scale(*r.substrate));
    const double t_max = spec.evanescent_cutoff_factor * std::max(1.0, 2 * z * s_max * k0);

    auto f_evan = [&](double t) {
        const double b = t / (2 * z);
        const RsRp rr = reflect_beta(r, omega, cplx(0, b));
        const double w = std::exp(-t) / (2 * z) / (8 * pi);
        const double s2 = b * b / (k0 * k0);
        return V2{(rr.rs + s2 * rr.rp) * w, 2.0 * (1.0 + s2) * rr.rp * w};
    };
    std::vector<double> evan_edges{0.0};
    for (double t = std::min(1e-4, t_max / 2); t < t_max; t *= 2) evan_edges.push_back(t);
    evan_edges.push_back(t_max);
    const QuadResult evan =
        integrate(f_evan, evan_edges, spec.rel_tol, abs_tol / 2, spec.max_subdivisions);

    // Analytic tail bound: integrand decays like t^2 e^{-t} past t_max.
    const V2 ftail = f_evan(t_max);
    const double tail_fac = 2.0 * (1.0 + 2.0 / t_max + 2.0 / (t_max * t_max));
    const double tail_xx = std::abs(ftail.xx) * tail_fac;
    const double tail_zz = std::abs(ftail.zz) * tail_fac;

    GreenDiag g;
    g.z = z;
    g.omega = omega;
    g.g_xx = prop.val.xx + evan.val.xx;
    g.g_zz = prop.val.zz + evan.val.zz;
    g.err_xx = prop.err_xx + evan.err_xx + tail_xx;
    g.err_zz = prop.err_zz + evan.err_zz + tail_zz;
    if (!prop.converged || !evan.converged) throw QuadratureError(g);
    return g;
}

} // namespace molheat
