#include "molheat/db.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace molheat {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double cell_to_double(const std::string& cell, const char* what) {
    if (cell.empty()) return NAN;
    size_t pos = 0;
    double v;
    try {
        v = std::stod(cell, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad number in column ") + what + ": '" + cell + "'");
    }
    if (pos != cell.size())
        throw std::invalid_argument(std::string("trailing junk in column ") + what + ": '" + cell + "'");
    return v;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path, size_t ncols,
                                               const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw std::invalid_argument(path + ": unexpected header '" + line + "'");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cells = split_csv_line(line);
        if (cells.size() != ncols)
            throw std::invalid_argument(path + ": expected " + std::to_string(ncols) +
                                     " columns, got " + std::to_string(cells.size()) + " in '" +
                                     line + "'");
        rows.push_back(std::move(cells));
    }
    return rows;
}

GroundState parse_state(const std::string& s) {
    if (s == "1Sigma") return GroundState::Sigma1;
    if (s == "2Sigma") return GroundState::Sigma2;
    if (s == "3Sigma") return GroundState::Sigma3;
    if (s == "2Pi") return GroundState::Pi2;
    throw std::invalid_argument("unknown electronic state '" + s + "'");
}

} // namespace

std::vector<Molecule> load_molecules_csv(const std::string& path) {
    const auto rows =
        read_csv(path, 9, "name,state,Be_GHz,we_THz,mue_1e-30Cm,muep_1e-21C,m_1e-27kg,A_THz,dvib_Cm");
    std::vector<Molecule> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        Molecule m;
        m.name = r[0];
        m.state = parse_state(r[1]);
        m.Be_Hz = cell_to_double(r[2], "Be_GHz") * 1e9;
        m.omega_e_Hz = cell_to_double(r[3], "we_THz") * 1e12;
        m.mu_e_Cm = cell_to_double(r[4], "mue_1e-30Cm") * 1e-30;
        m.mu_e_prime_C = cell_to_double(r[5], "muep_1e-21C") * 1e-21;
        m.m_reduced_kg = cell_to_double(r[6], "m_1e-27kg") * 1e-27;
        m.A_so_Hz = cell_to_double(r[7], "A_THz") * 1e12;
        m.d_vib_Cm = cell_to_double(r[8], "dvib_Cm");
        if (!(m.Be_Hz > 0) || !(m.omega_e_Hz > 0) || !(m.mu_e_Cm > 0) || !(m.m_reduced_kg > 0))
            throw std::invalid_argument(path + ": missing required constant for " + m.name);
        if (m.state == GroundState::Pi2 && std::isnan(m.A_so_Hz))
            throw std::invalid_argument(path + ": 2Pi molecule " + m.name + " needs A_THz");
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<MaterialModel> load_materials_csv(const std::string& path) {
    const auto rows =
        read_csv(path, 8, "name,model,omegaP_rad_s,gamma_rad_s,eps_re,eps_im,mu_re,mu_im");
    std::vector<MaterialModel> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        const std::string& name = r[0];
        const std::string& model = r[1];
        if (model == "drude") {
            const double wP = cell_to_double(r[2], "omegaP_rad_s");
            const double g = cell_to_double(r[3], "gamma_rad_s");
            if (!(wP > 0) || !(g > 0))
                throw std::invalid_argument(path + ": Drude row " + name + " needs omegaP and gamma");
            out.push_back(MaterialModel::drude(name, wP, g));
        } else if (model == "constant") {
            const double er = cell_to_double(r[4], "eps_re");
            const double ei = cell_to_double(r[5], "eps_im");
            double mr = cell_to_double(r[6], "mu_re");
            double mi = cell_to_double(r[7], "mu_im");
            if (std::isnan(er) || std::isnan(ei))
                throw std::invalid_argument(path + ": constant row " + name + " needs eps");
            if (std::isnan(mr)) mr = 1;
            if (std::isnan(mi)) mi = 0;
            out.push_back(MaterialModel::constant(name, {er, ei}, {mr, mi}));
        } else {
            throw std::invalid_argument(path + ": unknown material model '" + model + "'");
        }
    }
    return out;
}

const Molecule& find_molecule(const std::vector<Molecule>& db, const std::string& name) {
    const auto it = std::find_if(db.begin(), db.end(),
                                 [&](const Molecule& m) { return m.name == name; });
    if (it == db.end()) throw std::invalid_argument("unknown molecule '" + name + "'");
    return *it;
}

const MaterialModel& find_material(const std::vector<MaterialModel>& db,
                                   const std::string& name) {
    const auto it = std::find_if(db.begin(), db.end(),
                                 [&](const MaterialModel& m) { return m.name == name; });
    if (it == db.end()) throw std::invalid_argument("unknown material '" + name + "'");
    return *it;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("MOLHEAT_DATA_DIR"); env && *env) return env;
#ifdef MOLHEAT_SOURCE_DATA_DIR
    return MOLHEAT_SOURCE_DATA_DIR;
#else
    return "./data";
#endif
}

} // namespace molheat
