// molheat: blackbody heating rates of cold polar molecules near surfaces.
#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "molheat/constants.hpp"
#include "molheat/db.hpp"
#include "molheat/greens.hpp"
#include "molheat/rates.hpp"
#include "molheat/scales.hpp"

using namespace molheat;

namespace {

// ---- output plumbing ------------------------------------------------------

// Fixed 6-significant-digit formatting so identical runs are byte-identical.
std::string fmtg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return fmtg(v);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> string_cells; // parallel to columns, "" = numeric
    std::vector<std::vector<double>> rows;              // numeric cells (NaN where string)

    // A row is a mix of labels and numbers; store both lanes.
    void add_row(std::vector<std::pair<std::string, double>> cells) {
        std::vector<std::string> s;
        std::vector<double> d;
        for (auto& [str, num] : cells) {
            s.push_back(str);
            d.push_back(num);
        }
        string_cells.push_back(std::move(s));
        rows.push_back(std::move(d));
    }

    void print(const std::string& format) const {
        if (format == "csv") {
            std::string head;
            for (size_t c = 0; c < columns.size(); ++c)
                head += (c ? "," : "") + columns[c];
            std::cout << head << "\n";
            for (size_t r = 0; r < rows.size(); ++r) {
                std::string line;
                for (size_t c = 0; c < columns.size(); ++c) {
                    line += c ? "," : "";
                    line += string_cells[r][c].empty() ? fmtg(rows[r][c]) : string_cells[r][c];
                }
                std::cout << line << "\n";
            }
        } else { // json-lines
            for (size_t r = 0; r < rows.size(); ++r) {
                std::string line = "{";
                for (size_t c = 0; c < columns.size(); ++c) {
                    line += c ? "," : "";
                    line += "\"" + columns[c] + "\":";
                    line += string_cells[r][c].empty() ? json_number(rows[r][c])
                                                       : "\"" + string_cells[r][c] + "\"";
                }
                std::cout << line << "}\n";
            }
        }
    }
};

// ---- shared option state --------------------------------------------------

struct Options {
    std::vector<std::string> molecules;
    std::string material;
    std::vector<std::string> materials;
    std::vector<double> temperatures{293.0};
    double T = 293.0;
    std::string channel = "all";
    std::string mode = "numeric";
    std::string format = "csv";
    double z_min_um = 0.01, z_max_um = 100.0;
    int points = 60;
    double z_um = 1.0;
    double thickness_um = -1; // <0: half-space
    std::string substrate;
    int jobs = 1;
    double tol = -1; // <0: library default
    int levels = 6;
    bool two_level = false;
    std::string initial = "ground";
};

RateMode parse_mode(const std::string& s) {
    if (s == "numeric") return RateMode::Numeric;
    if (s == "nonretarded") return RateMode::NonRetarded;
    if (s == "retarded") return RateMode::Retarded;
    if (s == "empirical") return RateMode::Empirical;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

QuadratureSpec make_spec(const Options& o) {
    QuadratureSpec s{};
    if (o.tol > 0) s.rel_tol = o.tol;
    return s;
}

Reflector make_reflector(const Options& o, const std::vector<MaterialModel>& mats,
                         const std::string& name) {
    const MaterialModel& m = find_material(mats, name);
    if (o.thickness_um < 0) return Reflector::half_space_of(m);
    std::optional<MaterialModel> sub;
    if (!o.substrate.empty()) sub = find_material(mats, o.substrate);
    return Reflector::slab_of(m, o.thickness_um * 1e-6, sub);
}

// Expand "all" or comma lists against the DB, preserving input order.
template <typename Row>
std::vector<std::string> expand_names(const std::vector<std::string>& req,
                                      const std::vector<Row>& db) {
    std::vector<std::string> out;
    for (const auto& r : req) {
        if (r == "all") {
            for (const auto& row : db) out.push_back(row.name);
        } else {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<Transition> selected_channels(const Molecule& m, const std::string& channel) {
    std::vector<Transition> ts;
    if (channel == "rot" || channel == "all")
        for (auto& t : rotational_channels(m)) ts.push_back(t);
    if (channel == "vib" || channel == "all") ts.push_back(vibrational_channel(m));
    return ts;
}

// Deterministic worker pool: results are indexed by input order, printing
// happens after the join, so --jobs never changes the output.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    jobs = std::clamp(jobs, 1, std::max(1, n));
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---- subcommands ----------------------------------------------------------

int cmd_freespace(const Options& o) {
    auto dir = default_data_dir();
    auto mols = load_molecules_csv(dir + "/molecules.csv");
    Table tab;
    tab.columns = {"molecule", "channel", "frequency_GHz", "d2_over_mue2",
                   "T_K",      "gamma_per_s", "tau_s"};
    for (const auto& name : expand_names(o.molecules, mols)) {
        const Molecule& m = find_molecule(mols, name);
        auto ts = selected_channels(m, o.channel);
        // itemized channels plus a lumped row when rotation splits
        std::vector<std::pair<Transition, bool>> rows;
        int n_rot = 0;
        for (auto& t : ts)
            if (t.label != "vib") ++n_rot;
        for (auto& t : ts) rows.push_back({t, false});
        if (n_rot > 1) {
            Transition total{"rot_total", NAN, 0, 1.0 / 3.0};
            rows.push_back({total, true});
        }
        for (auto& [t, is_total] : rows) {
            for (double T : o.temperatures) {
                double gamma, d2frac;
                if (is_total) {
                    gamma = 0;
                    d2frac = 0;
                    for (auto& u : ts)
                        if (u.label != "vib") {
                            gamma += freespace_rate(u, T);
                            d2frac += u.d2_total / (m.mu_e_Cm * m.mu_e_Cm);
                        }
                } else {
                    gamma = freespace_rate(t, T);
                    d2frac = t.d2_total / (m.mu_e_Cm * m.mu_e_Cm);
                }
                tab.add_row({{m.name, NAN},
                             {t.label, NAN},
                             {"", t.omega / (2 * constants::pi * 1e9)},
                             {"", d2frac},
                             {"", T},
                             {"", gamma},
                             {"", 1.0 / gamma}});
            }
        }
    }
    tab.print(o.format);
    return 0;
}

int cmd_scan(const Options& o) {
    auto dir = default_data_dir();
    auto mols = load_molecules_csv(dir + "/molecules.csv");
    auto mats = load_materials_csv(dir + "/materials.csv");
    if (o.molecules.size() != 1 || o.molecules[0] == "all")
        throw std::invalid_argument("scan: exactly one --molecule required");
    const Molecule& m = find_molecule(mols, o.molecules[0]);
    Reflector refl = make_reflector(o, mats, o.material);
    RateMode mode = parse_mode(o.mode);
    QuadratureSpec spec = make_spec(o);

    if (!(o.z_min_um >= 1e-3 && o.z_max_um <= 1e6 && o.z_min_um < o.z_max_um))
        throw std::invalid_argument("scan: need 1 nm <= z-min < z-max <= 1 m");
    if (o.points < 2) throw std::invalid_argument("scan: need at least 2 points");

    auto ts = selected_channels(m, o.channel);
    std::vector<double> zs(o.points);
    for (int i = 0; i < o.points; ++i)
        zs[i] = 1e-6 * o.z_min_um *
                std::pow(o.z_max_um / o.z_min_um, double(i) / (o.points - 1));

    struct Row {
        double rot = 0, vib = NAN, total = 0, err = 0;
        bool ok = true;
    };
    std::vector<Row> rows(o.points);
    bool want_rot = o.channel != "vib", want_vib = o.channel != "rot";
    double pref = 0; // set per channel below

    parallel_for(o.points, o.jobs, [&](int i) {
        Row r;
        r.rot = want_rot ? 0 : NAN;
        r.vib = want_vib ? 0 : NAN;
        try {
            for (const auto& t : ts) {
                double gamma0 = freespace_rate(t, o.T);
                double ratio, rel = 0;
                if (mode == RateMode::Numeric) {
                    auto g = scattering_green(zs[i], t.omega, refl, spec);
                    double p = 6 * constants::pi * constants::c_light / t.omega;
                    double fz = t.d2_z_fraction;
                    ratio = 1 + p * ((1 - fz) * g.g_xx.imag() + fz * g.g_zz.imag());
                    rel = p * ((1 - fz) * g.err_xx + fz * g.err_zz) / std::abs(ratio);
                } else {
                    ratio = surface_ratio(t.omega, t.d2_z_fraction, zs[i], refl, spec, mode);
                }
                (t.label == "vib" ? r.vib : r.rot) += gamma0 * ratio;
                r.err = std::max(r.err, rel);
            }
            r.total = (want_rot ? r.rot : 0) + (want_vib ? r.vib : 0);
        } catch (const QuadratureError&) {
            r.rot = r.vib = r.total = NAN;
            r.err = NAN;
            r.ok = false;
        }
        rows[i] = r;
    });

    (void)pref;
    Table tab;
    tab.columns = {"z_um", "gamma_rot_per_s", "gamma_vib_per_s", "gamma_total_per_s",
                   "quad_rel_err", "status"};
    int failed = 0;
    for (int i = 0; i < o.points; ++i) {
        const Row& r = rows[i];
        if (!r.ok) ++failed;
        tab.add_row({{"", zs[i] * 1e6},
                     {"", r.rot},
                     {"", r.vib},
                     {"", r.total},
                     {"", r.err},
                     {r.ok ? "ok" : "quad_fail", NAN}});
    }
    tab.print(o.format);
    if (failed)
        std::cerr << "warning: quadrature failed on " << failed << " of " << o.points
                  << " rows\n";
    return 0;
}

int cmd_critical(const Options& o) {
    auto dir = default_data_dir();
    auto mols = load_molecules_csv(dir + "/molecules.csv");
    auto mats = load_materials_csv(dir + "/materials.csv");
    RateMode mode = parse_mode(o.mode);
    QuadratureSpec spec = make_spec(o);

    struct Cell {
        std::string molecule, channel, material;
        double f_ghz, fz;
        Reflector refl;
    };
    std::vector<Cell> cells;
    for (const auto& mol_name : expand_names(o.molecules, mols)) {
        const Molecule& m = find_molecule(mols, mol_name);
        for (const auto& t : selected_channels(m, o.channel))
            for (const auto& mat_name : expand_names(o.materials, mats)) {
                find_material(mats, mat_name); // fail fast on unknown names
                Options oo = o;
                cells.push_back({m.name, t.label, mat_name,
                                 t.omega / (2 * constants::pi * 1e9), t.d2_z_fraction,
                                 make_reflector(oo, mats, mat_name)});
            }
    }

    struct Out {
        double z_nr = NAN, z_c = NAN, residual = NAN;
        int iterations = 0;
        std::string status = "ok";
    };
    std::vector<Out> outs(cells.size());
    std::mutex warn_mutex;

    parallel_for(int(cells.size()), o.jobs, [&](int i) {
        const Cell& c = cells[i];
        double omega = c.f_ghz * 2 * constants::pi * 1e9;
        Out out;
        auto warn = [&](const char* what) {
            out.status = "no_root";
            std::lock_guard<std::mutex> lock(warn_mutex);
            std::cerr << "warning: " << c.molecule << "/" << c.channel << " on "
                      << c.material << ": " << what << "\n";
        };
        try {
            auto [eps, mu] = eval_material(c.refl.material, omega);
            out.z_nr = z_nonretarded(omega, eps); // throws for lossless materials
            auto res = critical_distance(omega, c.fz, c.refl, spec, mode);
            out.z_c = res.z_c;
            out.residual = res.residual;
            out.iterations = res.iterations;
        } catch (const RootNotFoundError& e) {
            warn(e.what());
        } catch (const std::domain_error& e) {
            warn(e.what());
        }
        outs[i] = out;
    });

    Table tab;
    tab.columns = {"molecule", "channel", "material", "frequency_GHz", "z_nr_um",
                   "z_c_um",   "iterations", "residual", "status"};
    for (size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        const Out& r = outs[i];
        tab.add_row({{c.molecule, NAN},
                     {c.channel, NAN},
                     {c.material, NAN},
                     {"", c.f_ghz},
                     {"", r.z_nr * 1e6},
                     {"", r.z_c * 1e6},
                     {"", double(r.iterations)},
                     {"", r.residual},
                     {r.status, NAN}});
    }
    tab.print(o.format);
    return 0;
}

int cmd_populations(const Options& o) {
    auto dir = default_data_dir();
    auto mols = load_molecules_csv(dir + "/molecules.csv");
    if (o.molecules.size() != 1 || o.molecules[0] == "all")
        throw std::invalid_argument("populations: exactly one --molecule required");
    const Molecule& m = find_molecule(mols, o.molecules[0]);
    if (m.state != GroundState::Sigma1)
        throw std::invalid_argument(
            "populations: rotational ladder implemented for 1Sigma molecules only");

    int n = o.two_level ? 2 : o.levels;
    if (n < 2) throw std::invalid_argument("populations: need at least 2 levels");

    // lumped |N> ladder: E_N = h Be N(N+1), |d(N,N+1)|^2 = mu^2 (N+1)/(2N+1)
    std::vector<std::string> labels(n);
    Eigen::VectorXd E(n);
    Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(n, n);
    for (int N = 0; N < n; ++N) {
        labels[N] = "N" + std::to_string(N);
        E(N) = constants::h_planck * m.Be_Hz * N * (N + 1);
        if (N + 1 < n)
            d2(N, N + 1) = d2(N + 1, N) =
                m.mu_e_Cm * m.mu_e_Cm * (N + 1.0) / (2.0 * N + 1.0);
    }

    std::optional<SurfaceContext> surface;
    if (!o.material.empty()) {
        auto mats = load_materials_csv(dir + "/materials.csv");
        surface = SurfaceContext{make_reflector(o, mats, o.material), o.z_um * 1e-6,
                                 make_spec(o), parse_mode(o.mode)};
    }
    auto rm = build_rate_matrix(labels, E, d2, o.T, surface);

    Eigen::VectorXd p0 = Eigen::VectorXd::Zero(n);
    p0(o.initial == "top" ? n - 1 : 0) = 1.0;
    Eigen::VectorXd pss = steady_state(rm);

    Table tab;
    tab.columns = {"t_s"};
    for (auto& l : labels) tab.columns.push_back("p_" + l);
    auto emit = [&](double t, const Eigen::VectorXd& p) {
        std::vector<std::pair<std::string, double>> row{{"", t}};
        for (int k = 0; k < n; ++k) row.push_back({"", p(k)});
        tab.add_row(std::move(row));
    };

    double fastest = rm.generator().diagonal().cwiseAbs().maxCoeff();
    emit(0.0, p0);
    bool converged = (p0 - pss).cwiseAbs().maxCoeff() < 1e-6;
    if (fastest > 0 && !converged) {
        double t = 0.1 / fastest;
        for (int step = 0; step < 500; ++step, t *= 1.5) {
            Eigen::VectorXd p = evolve_populations(rm, p0, t);
            emit(t, p);
            if ((p - pss).cwiseAbs().maxCoeff() < 1e-6) {
                converged = true;
                break;
            }
        }
    }
    tab.print(o.format);
    if (!converged) {
        std::cerr << "error: populations did not reach steady state\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blackbody heating of cold polar molecules in free space and near surfaces"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json-lines"}))
            ->capture_default_str();
    };
    auto add_quad = [&](CLI::App* c) {
        c->add_option("--mode", o.mode, "surface response model")
            ->check(CLI::IsMember({"numeric", "nonretarded", "retarded", "empirical"}))
            ->capture_default_str();
        c->add_option("--tol", o.tol, "quadrature relative tolerance");
        c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_layer = [&](CLI::App* c) {
        c->add_option("--thickness", o.thickness_um, "slab thickness in um (default: bulk)");
        c->add_option("--substrate", o.substrate, "material behind the slab");
    };

    CLI::App* fs = app.add_subcommand("freespace", "free-space heating rates and lifetimes");
    fs->add_option("--molecule", o.molecules, "molecule name(s) or 'all'")
        ->required()
        ->delimiter(',');
    fs->add_option("--T", o.temperatures, "temperature(s) in K")->delimiter(',');
    fs->add_option("--channel", o.channel, "rot, vib or all")
        ->check(CLI::IsMember({"rot", "vib", "all"}))
        ->capture_default_str();
    add_common(fs);

    CLI::App* sc = app.add_subcommand("scan", "heating rate vs distance from a surface");
    sc->add_option("--molecule", o.molecules, "molecule name")->required();
    sc->add_option("--material", o.material, "surface material")->required();
    sc->add_option("--T", o.T, "temperature in K")->capture_default_str();
    sc->add_option("--z-min", o.z_min_um, "smallest height in um")->capture_default_str();
    sc->add_option("--z-max", o.z_max_um, "largest height in um")->capture_default_str();
    sc->add_option("--points", o.points, "log-spaced grid size")->capture_default_str();
    sc->add_option("--channel", o.channel, "rot, vib or all")
        ->check(CLI::IsMember({"rot", "vib", "all"}))
        ->capture_default_str();
    add_layer(sc);
    add_quad(sc);
    add_common(sc);

    CLI::App* cr = app.add_subcommand("critical", "length scales and doubling distances");
    cr->add_option("--molecule", o.molecules, "molecule name(s) or 'all'")
        ->required()
        ->delimiter(',');
    cr->add_option("--material", o.materials, "material name(s) or 'all'")
        ->required()
        ->delimiter(',');
    cr->add_option("--channel", o.channel, "rot, vib or all")
        ->check(CLI::IsMember({"rot", "vib", "all"}))
        ->capture_default_str();
    add_layer(cr);
    add_quad(cr);
    add_common(cr);

    CLI::App* po = app.add_subcommand("populations", "level populations vs time");
    po->add_option("--molecule", o.molecules, "1Sigma molecule name")->required();
    po->add_option("--T", o.T, "temperature in K")->capture_default_str();
    po->add_option("--levels", o.levels, "rotational levels in the ladder")
        ->capture_default_str();
    po->add_flag("--two-level", o.two_level, "restrict to the lowest two levels");
    po->add_option("--initial", o.initial, "starting level")
        ->check(CLI::IsMember({"ground", "top"}))
        ->capture_default_str();
    po->add_option("--material", o.material, "optional surface material");
    po->add_option("--z", o.z_um, "height above the surface in um")->capture_default_str();
    add_layer(po);
    add_quad(po);
    add_common(po);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fs->parsed()) return cmd_freespace(o);
        if (sc->parsed()) return cmd_scan(o);
        if (cr->parsed()) return cmd_critical(o);
        if (po->parsed()) return cmd_populations(o);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
