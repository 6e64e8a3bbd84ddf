#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace molheat {

using cplx = std::complex<double>;

// Permittivity/permeability supplier: Drude, constant, or tabulated in omega.
struct MaterialModel {
    enum class Kind { Drude, Constant, Table };
    std::string name;
    Kind kind = Kind::Constant;
    double omega_P = 0, gamma = 0; // rad/s, Drude
    cplx eps{1, 0}, mu{1, 0};      // Constant
    std::vector<std::tuple<double, cplx, cplx>> table; // (omega, eps, mu), ascending

    static MaterialModel drude(std::string name, double omega_P, double gamma);
    static MaterialModel constant(std::string name, cplx eps, cplx mu = {1, 0});
};

// (eps, mu) at omega; log-frequency linear interpolation for Table models.
std::pair<cplx, cplx> eval_material(const MaterialModel& m, double omega);

// Principal square root pushed onto the Im >= 0 sheet (Re >= 0 tiebreak on
// the real axis) — the radiation/decay branch for all passive media.
cplx sqrt_im_pos(cplx w);

struct WaveVectors {
    cplx beta, beta1, beta_s; // z-components: vacuum, medium, substrate
    double q = 0;             // transverse wavevector
};
WaveVectors wave_vectors(double omega, double q, cplx eps, cplx mu,
                         cplx eps_s = {1, 0}, cplx mu_s = {1, 0});

struct RsRp {
    cplx rs, rp;
};

// Planar reflector: half-space (thickness = infinity) or slab on a substrate.
struct Reflector {
    MaterialModel material;
    double thickness = std::numeric_limits<double>::infinity(); // m
    std::optional<MaterialModel> substrate;                     // default vacuum

    bool half_space() const { return !(thickness < std::numeric_limits<double>::infinity()); }
    static Reflector half_space_of(MaterialModel m);
    static Reflector slab_of(MaterialModel m, double d, std::optional<MaterialModel> sub = {});
};

// Core evaluation at complex vacuum normal wavevector beta (beta = i*b for
// evanescent waves); the transverse wavevector enters as q^2 = (w/c)^2 - beta^2.
RsRp reflect_beta(const Reflector& r, double omega, cplx beta);

RsRp reflection_half_space(double omega, double q, const MaterialModel& m);
RsRp reflection_slab(double omega, double q, const MaterialModel& m, double d,
                     const MaterialModel& substrate);

} // namespace molheat
