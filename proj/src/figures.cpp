#include "coqdyn/figures.hpp"

#include <cmath>
#include <cstddef>
#include <exception>
#include <fstream>

#include <json.hpp>

#include "coqdyn/classify.hpp"
#include "coqdyn/trajectory_io.hpp"

namespace coqdyn::figures {

namespace {

double case_c_period(const Params& u) {
    const Hamiltonian h = build_hamiltonian(u);
    return 2.0 * std::acos(-1.0) / *orbit_diagnostics(h).rate;
}

std::vector<Scenario> make_scenarios() {
    std::vector<Scenario> s(3);

    s[0].name = "case_a";
    s[0].case_label = "A";
    s[0].u = {0.3, 0.5, 1.2, 0.4, 0.3, 0.2};
    s[0].psi0 = {Coq(0.8), Coq(0.6)};
    s[0].t_max = 10.0;
    s[0].dt = 1e-3;
    s[0].description =
        "time-like regime: reduced trajectory precesses on a sphere";

    s[1].name = "case_b";
    s[1].case_label = "B";
    s[1].u = {0.0, 0.6, 0.2, 0.4, 0.55, 0.3};
    s[1].psi0 = {Coq(1.0), Coq(0.0)};
    s[1].t_max = 10.0;
    s[1].dt = 1e-3;
    s[1].description = "space-like regime, real eigenvalues: open orbit "
                       "running out along the hyperboloid";

    s[2].name = "case_c";
    s[2].case_label = "C";
    s[2].u = {0.0, 0.2, 0.1, 0.15, 0.8, 0.45};
    s[2].psi0 = {Coq(0.8), Coq(0.6)};
    s[2].t_max = case_c_period(s[2].u); // exactly one closed orbit
    s[2].dt = 1e-3;
    s[2].description = "space-like regime, complex-conjugate eigenvalues: "
                       "closed hyperbolic Rabi orbit over one period";

    return s;
}

void write_gnuplot_script(const std::filesystem::path& path) {
    std::ofstream os(path);
    os << "# Reduced-orbit plots for the three scenario datasets.\n"
          "# Columns (1-based): 1 t, 2-9 state components, 10-14 sigma1..5,\n"
          "# 15-17 sx sy sz, 18-20 aux1..3, 21-25 invariants.\n"
          "set datafile separator ','\n"
          "set ticslevel 0\n"
          "set view equal xyz\n"
          "splot 'case_a.csv' every ::1 using 15:16:17 with lines "
          "title 'case A (sphere)'\n"
          "pause -1\n"
          "splot 'case_b.csv' every ::1 using 15:16:17 with lines "
          "title 'case B (open orbit)'\n"
          "pause -1\n"
          "splot 'case_c.csv' every ::1 using 15:16:17 with lines "
          "title 'case C (closed orbit)'\n"
          "pause -1\n";
}

} // namespace

const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> s = make_scenarios();
    return s;
}

void write_figures(const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);

    const auto& list = scenarios();
    std::vector<Trajectory> trajectories(list.size());
    std::vector<std::exception_ptr> errors(list.size());

    // Independent runs; join before writing the manifest.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(list.size());
         ++i) {
        try {
            const Scenario& sc = list[i];
            trajectories[i] = evolve_state(build_hamiltonian(sc.u), sc.psi0,
                                           sc.t_max, sc.dt);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    nlohmann::json manifest;
    manifest["columns"] = io::column_names();
    manifest["plot_script"] = "plot_figures.gp";
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Scenario& sc = list[i];
        const std::filesystem::path file = out_dir / (sc.name + ".csv");
        std::ofstream os(file);
        if (!os)
            throw ConfigError("cannot write figure data to " + file.string());
        io::write_csv(os, trajectories[i]);

        nlohmann::json entry;
        entry["file"] = sc.name + ".csv";
        entry["case"] = sc.case_label;
        entry["u"] = sc.u;
        entry["psi0"] = {sc.psi0.psi1.q0, sc.psi0.psi1.q1, sc.psi0.psi1.q2,
                         sc.psi0.psi1.q3, sc.psi0.psi2.q0, sc.psi0.psi2.q1,
                         sc.psi0.psi2.q2, sc.psi0.psi2.q3};
        entry["t_max"] = sc.t_max;
        entry["dt"] = sc.dt;
        entry["description"] = sc.description;
        manifest["figures"].push_back(entry);
    }

    {
        std::ofstream os(out_dir / "manifest.json");
        if (!os) throw ConfigError("cannot write figure manifest");
        os << manifest.dump(2) << '\n';
    }
    write_gnuplot_script(out_dir / "plot_figures.gp");
}

} // namespace coqdyn::figures
