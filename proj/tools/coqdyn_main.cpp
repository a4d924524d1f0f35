#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coqdyn/classify.hpp"
#include "coqdyn/dynamics.hpp"
#include "coqdyn/figures.hpp"
#include "coqdyn/oracle.hpp"
#include "coqdyn/sampling.hpp"
#include "coqdyn/trajectory_io.hpp"

namespace {

using namespace coqdyn;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNullGenerator = 3;
constexpr int kExitNullState = 4;

struct RunConfig {
    std::optional<Params> u;
    std::optional<std::array<double, 8>> psi0;
    std::optional<std::array<double, 5>> bloch0;
    double t_max = 10.0;
    double dt = kDefaultDt;
    std::string output_path; // empty: stdout
    std::string output_format = "csv";
    long long seed = 42;
};

template <std::size_t N>
std::array<double, N> to_fixed(const std::vector<double>& v,
                               const std::string& what) {
    if (v.size() != N)
        throw ConfigError(what + " needs exactly " + std::to_string(N) +
                          " comma-separated values");
    std::array<double, N> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return a;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config file: ") + e.what());
    }
    if (j.contains("u"))
        cfg.u = to_fixed<6>(j["u"].get<std::vector<double>>(), "u");
    if (j.contains("psi0"))
        cfg.psi0 = to_fixed<8>(j["psi0"].get<std::vector<double>>(), "psi0");
    if (j.contains("bloch0"))
        cfg.bloch0 =
            to_fixed<5>(j["bloch0"].get<std::vector<double>>(), "bloch0");
    if (j.contains("t_max")) cfg.t_max = j["t_max"].get<double>();
    if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
    if (j.contains("output_path"))
        cfg.output_path = j["output_path"].get<std::string>();
    if (j.contains("output_format"))
        cfg.output_format = j["output_format"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<long long>();
}

StateVector state_from_flat(const std::array<double, 8>& v) {
    return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
}

void fill_random_gaps(RunConfig& cfg) {
    sampling::Rng rng(static_cast<std::uint64_t>(cfg.seed));
    if (!cfg.u) {
        // Cycle through the regimes deterministically by seed.
        const RegimeKind kinds[] = {RegimeKind::TimeLike,
                                    RegimeKind::SpaceLike};
        cfg.u = sampling::random_params(rng, kinds[cfg.seed % 2]);
    }
    if (!cfg.psi0 && !cfg.bloch0) {
        const StateVector s = sampling::random_unit_state(rng);
        cfg.psi0 = {s.psi1.q0, s.psi1.q1, s.psi1.q2, s.psi1.q3,
                    s.psi2.q0, s.psi2.q1, s.psi2.q2, s.psi2.q3};
    }
}

Trajectory run_trajectory(const RunConfig& cfg, const Hamiltonian& h) {
    if (cfg.psi0 && cfg.bloch0)
        throw ConfigError("give either psi0 or bloch0, not both");
    if (cfg.psi0)
        return evolve_state(h, state_from_flat(*cfg.psi0), cfg.t_max, cfg.dt);
    if (cfg.bloch0) return evolve_bloch(h, *cfg.bloch0, cfg.t_max, cfg.dt);
    throw ConfigError("an initial condition (psi0 or bloch0) is required");
}

void write_trajectory(const RunConfig& cfg, const Trajectory& traj) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.output_path.empty() && cfg.output_path != "-") {
        file.open(cfg.output_path);
        if (!file)
            throw ConfigError("cannot write output to " + cfg.output_path);
        os = &file;
    }
    if (cfg.output_format == "csv")
        io::write_csv(*os, traj);
    else if (cfg.output_format == "json-lines")
        io::write_json_lines(*os, traj);
    else
        throw ConfigError("output format must be csv or json-lines");
}

void warn_if_coarse(const Trajectory& traj) {
    if (traj.step_warning)
        std::cerr << "warning: dt is large for this orbit rate "
                     "(dt * rate > 0.1); expect resolution loss\n";
}

std::string spectrum_line(const Spectrum& s) {
    switch (s.kind) {
    case SpectrumKind::RealPair:
        return "E+ = " + io::format_double(s.e_plus) +
               ", E- = " + io::format_double(s.e_minus);
    case SpectrumKind::ComplexConjugatePair:
        return "E = " + io::format_double(s.e_plus) + " +- " +
               io::format_double(s.e_minus) + "i";
    case SpectrumKind::Degenerate:
        return "E = " + io::format_double(s.e_plus) + " (degenerate)";
    }
    return {};
}

int cmd_classify(const Params& u) {
    const Hamiltonian h = build_hamiltonian(u, NullPolicy::Allow);
    std::cout << "regime: " << to_string(h.regime.kind) << '\n';
    std::cout << "case: "
              << (h.regime.case_label ? to_string(*h.regime.case_label)
                                      : std::string("none (boundary)"))
              << '\n';
    std::cout << "spectrum: " << to_string(h.spectrum.kind) << " ("
              << spectrum_line(h.spectrum) << ")\n";
    std::cout << "gap2: " << io::format_double(h.spectrum.gap2) << '\n';
    std::cout << "nu: " << io::format_double(h.nu) << '\n';

    const OrbitDiagnostics d = orbit_diagnostics(h);
    std::cout << "orbit: " << to_string(d.kind) << '\n';
    if (d.rate) std::cout << "rate: " << io::format_double(*d.rate) << '\n';
    std::cout << "axis: (" << io::format_double(d.axis[0]) << ", "
              << io::format_double(d.axis[1]) << ", "
              << io::format_double(d.axis[2]) << ")\n";
    return kExitPass;
}

int cmd_evolve(const RunConfig& cfg) {
    const Hamiltonian h = build_hamiltonian(*cfg.u);
    const Trajectory traj = run_trajectory(cfg, h);
    warn_if_coarse(traj);
    write_trajectory(cfg, traj);
    return kExitPass;
}

struct Tolerances {
    double norm = 1e-8;
    double state = 1e-7;
    std::optional<double> reduced; // default depends on the regime
    double cylinder = 1e-7;
    double aux = 1e-7;
};

int cmd_verify(RunConfig cfg, const Tolerances& tol) {
    fill_random_gaps(cfg);
    const Hamiltonian h = build_hamiltonian(*cfg.u);
    const Trajectory traj = run_trajectory(cfg, h);
    warn_if_coarse(traj);

    const double reduced_tol = tol.reduced.value_or(
        h.regime.kind == RegimeKind::TimeLike ? 1e-8 : 1e-7);
    const InvariantValues drift = traj.max_abs_drift();

    struct Check {
        const char* name;
        double value;
        double bound;
        bool applicable;
    };
    const bool state_level = !traj.states.empty();
    const Check checks[] = {
        {"norm", drift.norm, tol.norm, state_level},
        {"state", drift.state, tol.state, true},
        {"reduced", drift.reduced, reduced_tol, true},
        {"cylinder", drift.cylinder, tol.cylinder, true},
        {"aux", drift.aux, tol.aux, true},
    };

    std::cout << "u: ";
    for (int l = 0; l < 6; ++l)
        std::cout << io::format_double((*cfg.u)[l]) << (l < 5 ? "," : "\n");
    std::cout << "regime: " << to_string(h.regime.kind) << '\n';

    bool ok = true;
    for (const Check& c : checks) {
        if (!c.applicable) continue;
        const bool pass = c.value <= c.bound;
        ok = ok && pass;
        std::cout << (pass ? "pass" : "FAIL") << "  max |" << c.name
                  << " drift| = " << io::format_double(c.value)
                  << "  (tolerance " << io::format_double(c.bound) << ")\n";
    }
    return ok ? kExitPass : kExitVerifyFail;
}

int cmd_compare(RunConfig cfg) {
    fill_random_gaps(cfg);
    if (!cfg.psi0)
        throw ConfigError("compare needs a state-level initial condition");
    const Hamiltonian h = build_hamiltonian(*cfg.u);
    const StateVector psi0 = state_from_flat(*cfg.psi0);
    const Trajectory traj = evolve_state(h, psi0, cfg.t_max, cfg.dt);
    warn_if_coarse(traj);

    const std::size_t n = traj.times.size();
    const std::size_t stride = std::max<std::size_t>(1, n / 20);
    double max_dev = 0.0;
    for (std::size_t k = 0; k < n; k += stride) {
        const StateVector exact =
            oracle::evolve_exact(h, psi0, traj.times[k]);
        const StateVector& num = traj.states[k];
        const double dev = std::max(
            {std::abs(num.psi1.q0 - exact.psi1.q0),
             std::abs(num.psi1.q1 - exact.psi1.q1),
             std::abs(num.psi1.q2 - exact.psi1.q2),
             std::abs(num.psi1.q3 - exact.psi1.q3),
             std::abs(num.psi2.q0 - exact.psi2.q0),
             std::abs(num.psi2.q1 - exact.psi2.q1),
             std::abs(num.psi2.q2 - exact.psi2.q2),
             std::abs(num.psi2.q3 - exact.psi2.q3)});
        max_dev = std::max(max_dev, dev);
    }
    std::cout << "max component deviation (integrator vs matrix "
                 "exponential): "
              << io::format_double(max_dev) << '\n';
    return max_dev <= 1e-6 ? kExitPass : kExitVerifyFail;
}

int cmd_figures(const std::string& out_dir) {
    figures::write_figures(out_dir);
    std::cout << "wrote case_a.csv, case_b.csv, case_c.csv, manifest.json, "
                 "plot_figures.gp to "
              << out_dir << '\n';
    return kExitPass;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"coquaternionic two-level dynamics simulator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::vector<double> u_flat, psi0_flat, bloch0_flat;
    Tolerances tol;
    double tol_reduced = -1.0;
    std::string out_dir = "figures_out";

    // Flags are collected separately and override config-file values.
    double flag_t_max = 0, flag_dt = 0;
    std::string flag_out, flag_format;
    long long flag_seed = 0;
    std::vector<CLI::Option*> t_max_opts, dt_opts, out_opts, format_opts,
        seed_opts;

    auto add_common = [&](CLI::App* sub, bool needs_initial) {
        sub->add_option("--config", config_path,
                        "JSON file with the run configuration");
        sub->add_option("--u", u_flat, "Hamiltonian coefficients u0..u5")
            ->delimiter(',')
            ->expected(6);
        if (needs_initial) {
            sub->add_option("--psi0", psi0_flat,
                            "initial state, eight components")
                ->delimiter(',')
                ->expected(8);
            sub->add_option("--bloch0", bloch0_flat,
                            "initial Bloch five-vector")
                ->delimiter(',')
                ->expected(5);
            t_max_opts.push_back(
                sub->add_option("--t-max", flag_t_max, "integration time"));
            dt_opts.push_back(
                sub->add_option("--dt", flag_dt, "integration step"));
            out_opts.push_back(sub->add_option(
                "--out", flag_out, "output file (default stdout)"));
            format_opts.push_back(sub->add_option("--format", flag_format,
                                                  "csv or json-lines"));
            seed_opts.push_back(sub->add_option(
                "--seed", flag_seed, "seed for randomized inputs"));
        }
    };

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify Hamiltonian parameters");
    add_common(classify_cmd, false);

    CLI::App* evolve_cmd =
        app.add_subcommand("evolve", "integrate and emit a trajectory");
    add_common(evolve_cmd, true);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "integrate and check conserved quantities");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--tol-norm", tol.norm, "norm drift tolerance");
    verify_cmd->add_option("--tol-state", tol.state,
                           "state-space drift tolerance");
    verify_cmd->add_option("--tol-reduced", tol_reduced,
                           "reduced drift tolerance");
    verify_cmd->add_option("--tol-cylinder", tol.cylinder,
                           "cylinder drift tolerance");
    verify_cmd->add_option("--tol-aux", tol.aux,
                           "auxiliary drift tolerance");

    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "integrator against matrix-exponential evolution");
    add_common(compare_cmd, true);

    CLI::App* figures_cmd = app.add_subcommand(
        "figures", "emit the three scenario datasets and manifest");
    figures_cmd->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitConfig;
    }

    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (!u_flat.empty()) cfg.u = to_fixed<6>(u_flat, "u");
    if (!psi0_flat.empty()) {
        cfg.psi0 = to_fixed<8>(psi0_flat, "psi0");
        cfg.bloch0.reset();
    }
    if (!bloch0_flat.empty()) {
        cfg.bloch0 = to_fixed<5>(bloch0_flat, "bloch0");
        if (!psi0_flat.empty())
            throw ConfigError("give either --psi0 or --bloch0, not both");
        cfg.psi0.reset();
    }
    const auto was_set = [](const std::vector<CLI::Option*>& opts) {
        for (const CLI::Option* o : opts)
            if (o->count() > 0) return true;
        return false;
    };
    if (was_set(t_max_opts)) cfg.t_max = flag_t_max;
    if (was_set(dt_opts)) cfg.dt = flag_dt;
    if (was_set(out_opts)) cfg.output_path = flag_out;
    if (was_set(format_opts)) cfg.output_format = flag_format;
    if (was_set(seed_opts)) cfg.seed = flag_seed;

    if (classify_cmd->parsed()) {
        if (!cfg.u) throw ConfigError("classify requires --u");
        return cmd_classify(*cfg.u);
    }
    if (evolve_cmd->parsed()) {
        if (!cfg.u) throw ConfigError("evolve requires --u");
        return cmd_evolve(cfg);
    }
    if (verify_cmd->parsed()) {
        if (tol_reduced >= 0) tol.reduced = tol_reduced;
        return cmd_verify(cfg, tol);
    }
    if (compare_cmd->parsed()) return cmd_compare(cfg);
    if (figures_cmd->parsed()) return cmd_figures(out_dir);
    return kExitConfig;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const coqdyn::NullGenerator& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNullGenerator;
    } catch (const coqdyn::NullState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNullState;
    } catch (const coqdyn::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
