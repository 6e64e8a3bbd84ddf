// Python bindings for the molheat core library.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "molheat/constants.hpp"
#include "molheat/db.hpp"
#include "molheat/greens.hpp"
#include "molheat/materials.hpp"
#include "molheat/rates.hpp"
#include "molheat/scales.hpp"
#include "molheat/spectro.hpp"
#include "molheat/wigner.hpp"

namespace py = pybind11;
using namespace molheat;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Blackbody heating rates of polar molecules in free space and near "
              "layered magneto-electric surfaces";

    py::register_exception<QuadratureError>(m, "QuadratureError");
    py::register_exception<RootNotFoundError>(m, "RootNotFoundError");

    // ---- constants ----------------------------------------------------------
    auto c = m.def_submodule("constants", "CODATA 2018 values in SI units");
    c.attr("hbar") = constants::hbar;
    c.attr("h_planck") = constants::h_planck;
    c.attr("k_B") = constants::k_B;
    c.attr("eps0") = constants::eps0;
    c.attr("c_light") = constants::c_light;
    c.attr("pi") = constants::pi;

    // ---- spectroscopy -------------------------------------------------------
    py::enum_<GroundState>(m, "GroundState")
        .value("Sigma1", GroundState::Sigma1)
        .value("Sigma2", GroundState::Sigma2)
        .value("Sigma3", GroundState::Sigma3)
        .value("Pi2", GroundState::Pi2);

    py::class_<Molecule>(m, "Molecule")
        .def_readonly("name", &Molecule::name)
        .def_readonly("state", &Molecule::state)
        .def_readonly("Be_Hz", &Molecule::Be_Hz)
        .def_readonly("omega_e_Hz", &Molecule::omega_e_Hz)
        .def_readonly("mu_e_Cm", &Molecule::mu_e_Cm)
        .def_readonly("mu_e_prime_C", &Molecule::mu_e_prime_C)
        .def_readonly("m_reduced_kg", &Molecule::m_reduced_kg)
        .def_readonly("A_so_Hz", &Molecule::A_so_Hz)
        .def_readonly("d_vib_Cm", &Molecule::d_vib_Cm)
        .def("__repr__",
             [](const Molecule& x) { return "<Molecule " + x.name + ">"; });

    py::class_<Transition>(m, "Transition")
        .def_readonly("label", &Transition::label)
        .def_readonly("omega", &Transition::omega)
        .def_readonly("d2_total", &Transition::d2_total)
        .def_readonly("d2_z_fraction", &Transition::d2_z_fraction)
        .def("__repr__", [](const Transition& t) {
            return "<Transition " + t.label + " omega=" + std::to_string(t.omega) + ">";
        });

    m.def("rotational_channels", &rotational_channels, py::arg("molecule"),
          "Heating channels out of the rotational ground level");
    m.def("vibrational_channel", &vibrational_channel, py::arg("molecule"),
          "v=0 -> v=1 heating channel");
    m.def("wigner3j", &wigner3j, py::arg("j1"), py::arg("j2"), py::arg("j3"),
          py::arg("m1"), py::arg("m2"), py::arg("m3"));

    // ---- materials and reflectors -------------------------------------------
    py::class_<MaterialModel>(m, "MaterialModel")
        .def_static("drude", &MaterialModel::drude, py::arg("name"), py::arg("omega_P"),
                    py::arg("gamma"))
        .def_static("constant", &MaterialModel::constant, py::arg("name"), py::arg("eps"),
                    py::arg("mu") = cplx{1, 0})
        .def_readonly("name", &MaterialModel::name)
        .def("eval", [](const MaterialModel& mm, double omega) { return eval_material(mm, omega); },
             py::arg("omega"), "Return (eps, mu) at omega")
        .def("__repr__",
             [](const MaterialModel& x) { return "<MaterialModel " + x.name + ">"; });

    py::class_<Reflector>(m, "Reflector")
        .def_static("half_space", &Reflector::half_space_of, py::arg("material"))
        .def_static("slab", &Reflector::slab_of, py::arg("material"), py::arg("thickness"),
                    py::arg("substrate") = std::optional<MaterialModel>{})
        .def_readonly("thickness", &Reflector::thickness)
        .def_property_readonly("is_half_space", &Reflector::half_space);

    // ---- database ------------------------------------------------------------
    m.def("default_data_dir", &default_data_dir);
    m.def(
        "load_molecules",
        [](const std::string& path) {
            return load_molecules_csv(path.empty() ? default_data_dir() + "/molecules.csv" : path);
        },
        py::arg("path") = std::string{});
    m.def(
        "load_materials",
        [](const std::string& path) {
            return load_materials_csv(path.empty() ? default_data_dir() + "/materials.csv" : path);
        },
        py::arg("path") = std::string{});
    m.def("find_molecule", &find_molecule, py::arg("db"), py::arg("name"),
          py::return_value_policy::copy);
    m.def("find_material", &find_material, py::arg("db"), py::arg("name"),
          py::return_value_policy::copy);

    // ---- Green tensor ---------------------------------------------------------
    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init([](double rel_tol, double abs_tol, int max_subdivisions,
                         double evanescent_cutoff_factor) {
                 QuadratureSpec s;
                 s.rel_tol = rel_tol;
                 s.abs_tol = abs_tol;
                 s.max_subdivisions = max_subdivisions;
                 s.evanescent_cutoff_factor = evanescent_cutoff_factor;
                 return s;
             }),
             py::arg("rel_tol") = 1e-8, py::arg("abs_tol") = -1.0,
             py::arg("max_subdivisions") = 2000, py::arg("evanescent_cutoff_factor") = 40.0)
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
        .def_readwrite("evanescent_cutoff_factor", &QuadratureSpec::evanescent_cutoff_factor);

    py::class_<GreenDiag>(m, "GreenDiag")
        .def_readonly("g_xx", &GreenDiag::g_xx)
        .def_readonly("g_zz", &GreenDiag::g_zz)
        .def_readonly("z", &GreenDiag::z)
        .def_readonly("omega", &GreenDiag::omega)
        .def_readonly("err_xx", &GreenDiag::err_xx)
        .def_readonly("err_zz", &GreenDiag::err_zz);

    m.def("im_trace_G0", &im_trace_G0, py::arg("omega"));
    m.def("scattering_green", &scattering_green, py::arg("z"), py::arg("omega"),
          py::arg("reflector"), py::arg("spec") = QuadratureSpec{});
    m.def("nonretarded_green", &nonretarded_green, py::arg("z"), py::arg("omega"),
          py::arg("eps"));
    m.def("retarded_green", &retarded_green, py::arg("z"), py::arg("omega"), py::arg("eps"),
          py::arg("mu"));

    // ---- rates -----------------------------------------------------------------
    py::enum_<RateMode>(m, "RateMode")
        .value("Numeric", RateMode::Numeric)
        .value("NonRetarded", RateMode::NonRetarded)
        .value("Retarded", RateMode::Retarded)
        .value("Empirical", RateMode::Empirical);

    m.def("thermal_n", &thermal_n, py::arg("omega"), py::arg("T"));
    m.def("freespace_rate", &freespace_rate, py::arg("transition"), py::arg("T"));
    m.def("surface_ratio", &surface_ratio, py::arg("omega"), py::arg("fz"), py::arg("z"),
          py::arg("reflector"), py::arg("spec") = QuadratureSpec{},
          py::arg("mode") = RateMode::Numeric);

    py::class_<SurfaceRate>(m, "SurfaceRate")
        .def_readonly("gamma", &SurfaceRate::gamma)
        .def_readonly("ratio", &SurfaceRate::ratio);
    m.def("surface_rate", &surface_rate, py::arg("transition"), py::arg("T"), py::arg("z"),
          py::arg("reflector"), py::arg("spec") = QuadratureSpec{},
          py::arg("mode") = RateMode::Numeric);

    // ---- characteristic length scales -------------------------------------------
    m.def("z_nonretarded", &z_nonretarded, py::arg("omega"), py::arg("eps"));
    m.def("z_nonretarded_drude", &z_nonretarded_drude, py::arg("omega"), py::arg("omega_P"),
          py::arg("gamma"));
    m.def("empirical_zc", &empirical_zc, py::arg("omega"), py::arg("omega_P"), py::arg("gamma"));
    m.def("empirical_factor", &empirical_factor, py::arg("z"), py::arg("z_c"), py::arg("z_nr"));
    m.def("empirical_rate", &empirical_rate, py::arg("z"), py::arg("gamma0"), py::arg("z_c"),
          py::arg("z_nr"));

    py::class_<CriticalDistanceResult>(m, "CriticalDistanceResult")
        .def_readonly("z_c", &CriticalDistanceResult::z_c)
        .def_readonly("z_lo", &CriticalDistanceResult::z_lo)
        .def_readonly("z_hi", &CriticalDistanceResult::z_hi)
        .def_readonly("iterations", &CriticalDistanceResult::iterations)
        .def_readonly("residual", &CriticalDistanceResult::residual);
    m.def("critical_distance", &critical_distance, py::arg("omega"), py::arg("fz"),
          py::arg("reflector"), py::arg("spec") = QuadratureSpec{},
          py::arg("mode") = RateMode::Numeric);

    // ---- kinetics -----------------------------------------------------------------
    py::class_<SurfaceContext>(m, "SurfaceContext")
        .def(py::init([](Reflector r, double z, QuadratureSpec spec, RateMode mode) {
                 return SurfaceContext{std::move(r), z, spec, mode};
             }),
             py::arg("reflector"), py::arg("z"), py::arg("spec") = QuadratureSpec{},
             py::arg("mode") = RateMode::Numeric);

    py::class_<RateMatrix>(m, "RateMatrix")
        .def_readonly("labels", &RateMatrix::labels)
        .def_readonly("energies", &RateMatrix::energies)
        .def_readonly("gamma", &RateMatrix::gamma)
        .def_readonly("populations", &RateMatrix::populations)
        .def("generator", &RateMatrix::generator);

    m.def("build_rate_matrix", &build_rate_matrix, py::arg("labels"), py::arg("energies_J"),
          py::arg("d2"), py::arg("T"), py::arg("surface") = std::optional<SurfaceContext>{});
    m.def("evolve_populations", &evolve_populations, py::arg("rate_matrix"), py::arg("p0"),
          py::arg("t"));
    m.def("steady_state", &steady_state, py::arg("rate_matrix"));
    m.def("boltzmann", &boltzmann, py::arg("energies_J"), py::arg("T"));
}
