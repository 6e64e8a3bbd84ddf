#include "molheat/materials.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "molheat/constants.hpp"

namespace molheat {

using constants::c_light;

MaterialModel MaterialModel::drude(std::string name, double omega_P, double gamma) {
    if (omega_P <= 0 || gamma <= 0)
        throw std::domain_error("MaterialModel: Drude parameters must be positive");
    MaterialModel m;
    m.name = std::move(name);
    m.kind = Kind::Drude;
    m.omega_P = omega_P;
    m.gamma = gamma;
    return m;
}

MaterialModel MaterialModel::constant(std::string name, cplx eps, cplx mu) {
    if (eps.imag() < 0 || mu.imag() < 0)
        throw std::domain_error("MaterialModel: passivity requires Im eps, Im mu >= 0");
    MaterialModel m;
    m.name = std::move(name);
    m.kind = Kind::Constant;
    m.eps = eps;
    m.mu = mu;
    return m;
}

std::pair<cplx, cplx> eval_material(const MaterialModel& m, double omega) {
    if (omega <= 0) throw std::domain_error("eval_material: omega must be positive");
    switch (m.kind) {
        case MaterialModel::Kind::Drude:
            return {1.0 - m.omega_P * m.omega_P / (omega * cplx(omega, m.gamma)), cplx(1, 0)};
        case MaterialModel::Kind::Constant:
            return {m.eps, m.mu};
        case MaterialModel::Kind::Table: {
            if (m.table.empty() || omega < std::get<0>(m.table.front()) ||
                omega > std::get<0>(m.table.back()))
                throw std::range_error(m.name + ": omega outside tabulated range");
            auto hi = std::lower_bound(m.table.begin(), m.table.end(), omega,
                                       [](const auto& row, double w) { return std::get<0>(row) < w; });
            if (hi == m.table.begin()) return {std::get<1>(*hi), std::get<2>(*hi)};
            auto lo = std::prev(hi);
            const double f = std::log(omega / std::get<0>(*lo)) /
                             std::log(std::get<0>(*hi) / std::get<0>(*lo));
            return {std::get<1>(*lo) * (1 - f) + std::get<1>(*hi) * f,
                    std::get<2>(*lo) * (1 - f) + std::get<2>(*hi) * f};
        }
    }
    throw std::logic_error("eval_material: unknown variant");
}

cplx sqrt_im_pos(cplx w) {
    cplx s = std::sqrt(w);
    if (s.imag() < 0 || (s.imag() == 0 && s.real() < 0)) s = -s;
    return s;
}

WaveVectors wave_vectors(double omega, double q, cplx eps, cplx mu, cplx eps_s, cplx mu_s) {
    if (omega <= 0 || q < 0) throw std::domain_error("wave_vectors: need omega > 0, q >= 0");
    const double k0 = omega / c_light;
    WaveVectors wv;
    wv.q = q;
    wv.beta = sqrt_im_pos(cplx(k0 * k0 - q * q, 0));
    wv.beta1 = sqrt_im_pos(eps * mu * k0 * k0 - q * q);
    wv.beta_s = sqrt_im_pos(eps_s * mu_s * k0 * k0 - q * q);
    return wv;
}

Reflector Reflector::half_space_of(MaterialModel m) {
    Reflector r;
    r.material = std::move(m);
    return r;
}

Reflector Reflector::slab_of(MaterialModel m, double d, std::optional<MaterialModel> sub) {
    if (!(d >= 0)) throw std::domain_error("Reflector: slab thickness must be non-negative");
    Reflector r;
    r.material = std::move(m);
    r.thickness = d;
    r.substrate = std::move(sub);
    return r;
}

namespace {

// Single-polarization two-interface coefficient. "w" is eps (p) or mu (s) of
// the layer, "ws" the substrate's. Written via E = exp(2 i beta1 d), |E| <= 1,
// so thick lossy slabs underflow gracefully instead of overflowing a cot().
cplx layer_coeff(cplx w, cplx ws, cplx beta, cplx beta1, cplx beta_s, cplx E) {
    const cplx num = (w * w * beta * beta_s - ws * beta1 * beta1) * (E - 1.0) -
                     w * beta1 * (ws * beta - beta_s) * (E + 1.0);
    const cplx den = (w * w * beta * beta_s + ws * beta1 * beta1) * (E - 1.0) -
                     w * beta1 * (ws * beta + beta_s) * (E + 1.0);
    if (den == cplx(0, 0)) return 0.0; // uniform vacuum
    return num / den;
}

cplx half_coeff(cplx w, cplx beta, cplx beta1) {
    const cplx num = w * beta - beta1;
    const cplx den = w * beta + beta1;
    if (den == cplx(0, 0)) return 0.0;
    return num / den;
}

} // namespace

RsRp reflect_beta(const Reflector& r, double omega, cplx beta) {
    const double k0 = omega / c_light;
    const auto [eps, mu] = eval_material(r.material, omega);
    // beta1^2 = eps*mu*k0^2 - q^2 with q^2 = k0^2 - beta^2
    const cplx beta1 = sqrt_im_pos((eps * mu - 1.0) * k0 * k0 + beta * beta);
    if (r.half_space())
        return {half_coeff(mu, beta, beta1), half_coeff(eps, beta, beta1)};

    cplx eps_s{1, 0}, mu_s{1, 0};
    if (r.substrate) std::tie(eps_s, mu_s) = eval_material(*r.substrate, omega);
    const cplx beta_s = sqrt_im_pos((eps_s * mu_s - 1.0) * k0 * k0 + beta * beta);
    const cplx E = std::exp(cplx(0, 2) * beta1 * r.thickness);
    return {layer_coeff(mu, mu_s, beta, beta1, beta_s, E),
            layer_coeff(eps, eps_s, beta, beta1, beta_s, E)};
}

RsRp reflection_half_space(double omega, double q, const MaterialModel& m) {
    const auto wv = wave_vectors(omega, q, 1.0, 1.0);
    return reflect_beta(Reflector::half_space_of(m), omega, wv.beta);
}

RsRp reflection_slab(double omega, double q, const MaterialModel& m, double d,
                     const MaterialModel& substrate) {
    const auto wv = wave_vectors(omega, q, 1.0, 1.0);
    return reflect_beta(Reflector::slab_of(m, d, substrate), omega, wv.beta);
}

} // namespace molheat
