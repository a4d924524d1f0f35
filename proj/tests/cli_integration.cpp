// End-to-end checks of the command-line tool: exit-code contract,
// emitted files and flag handling. Expects the binary path as argv[1].

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "coqdyn/trajectory_io.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path work_dir;
std::string binary;

Run run(const std::string& args) {
    const fs::path out = work_dir / "stdout.txt";
    const fs::path err = work_dir / "stderr.txt";
    const std::string cmd =
        binary + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_integration <coqdyn binary>\n");
        return 2;
    }
    binary = argv[1];
    work_dir = fs::temp_directory_path() / "coqdyn_cli_test";
    fs::create_directories(work_dir);

    {
        const Run r = run("classify --u 0,1,2,0,1,1");
        expect(r.exit_code == 0, "classify exits 0");
        expect(contains(r.out, "TimeLike") && contains(r.out, "case: A"),
               "classify reports the time-like case");
    }
    {
        const Run r = run("classify --u 0,0,0,0,3,4");
        expect(r.exit_code == 0 && contains(r.out, "SpaceLike") &&
                   contains(r.out, "case: C") && contains(r.out, "+- 5i"),
               "classify reports the conjugate pair 0 +- 5i");
    }
    {
        const Run r = run("classify --u 0,0,1,0,1,0");
        expect(r.exit_code == 0 && contains(r.out, "Null"),
               "classify reports the null boundary");
    }
    {
        const Run r = run("classify");
        expect(r.exit_code == 2, "classify without --u exits 2");
    }
    {
        const Run r = run("classify --u 1,2,3");
        expect(r.exit_code == 2, "malformed --u exits 2");
    }

    const fs::path traj_csv = work_dir / "traj.csv";
    {
        const Run r = run("evolve --u 0,0,1,0,0,0 --psi0 1,0,0,0,0,0,0,0 "
                          "--t-max 2 --dt 0.001 --out " +
                          traj_csv.string());
        expect(r.exit_code == 0, "evolve exits 0");
        std::ifstream is(traj_csv);
        const auto table = coqdyn::io::read_csv(is);
        expect(table.rows.size() == 2001, "evolve writes 2001 samples");
        const auto& last = table.rows.back();
        expect(std::abs(last[16] - std::cos(2.0 * last[0])) < 1e-6,
               "sigma_z column traces cos(2t)");
        expect(std::abs(last[20] - 1.0) < 1e-8, "norm column stays at 1");
    }
    {
        const Run r = run("evolve --u 0,0,1,0,0,0 --psi0 1,0,0,0,0,0,0,0 "
                          "--t-max 0 --out " +
                          traj_csv.string());
        std::ifstream is(traj_csv);
        const auto table = coqdyn::io::read_csv(is);
        expect(r.exit_code == 0 && table.rows.size() == 1,
               "t_max = 0 emits the initial row only");
    }
    {
        const Run r = run("evolve --u 0,0,1,0,0,0 --bloch0 0,0,1,0,0 "
                          "--t-max 1 --out " +
                          traj_csv.string());
        expect(r.exit_code == 0, "Bloch-level evolve exits 0");
        std::ifstream is(traj_csv);
        const auto table = coqdyn::io::read_csv(is);
        expect(std::isnan(table.rows[0][1]),
               "state columns are nan for Bloch-level runs");
    }
    {
        const Run r = run("evolve --u 0,0,1,0,1,0 --psi0 1,0,0,0,0,0,0,0");
        expect(r.exit_code == 3, "null-regime evolve exits 3");
    }
    {
        const Run r = run("evolve --u 0,0,1,0,0,0 --psi0 1,0,0,0,0,0,1,0");
        expect(r.exit_code == 4, "null-state evolve exits 4");
    }
    {
        const Run r = run("evolve --u 0,0,1,0,0,0 --psi0 1,0,0,0,0,0,0,0 "
                          "--t-max 0.01 --format json-lines");
        expect(r.exit_code == 0, "json-lines evolve exits 0");
        std::stringstream ss(r.out);
        std::string line;
        std::getline(ss, line);
        bool parsed = false;
        try {
            const auto j = nlohmann::json::parse(line);
            parsed = j.contains("t") && j.contains("sigma");
        } catch (...) {
        }
        expect(parsed, "json-lines rows parse as JSON");
    }

    {
        const Run r = run("verify --seed 42");
        expect(r.exit_code == 0 && contains(r.out, "pass"),
               "verify with default tolerances passes on seed 42");
    }
    {
        const Run r = run("verify --u 0,1,2,2,0,0 --psi0 1,0,0,0,0,0,0,0 "
                          "--t-max 5 --dt 0.5");
        expect(contains(r.err, "warning"),
               "coarse dt prints a step-size warning");
        expect(r.exit_code == 1, "coarse dt fails verification");
    }

    {
        const Run r = run("compare --u 0,0,1,0,0,0 --psi0 1,0,0,0,0,0,0,0 "
                          "--t-max 5");
        expect(r.exit_code == 0, "compare passes on the Rabi point");
    }
    {
        const Run r = run("compare --u 0,0,1,0,0,0 --psi0 1,0,0,0,0,0,0,0 "
                          "--t-max 0");
        expect(r.exit_code == 0 && contains(r.out, ": 0"),
               "compare at t_max = 0 reports zero deviation");
    }

    {
        const fs::path fig_dir = work_dir / "figs";
        const Run r = run("figures --out-dir " + fig_dir.string());
        expect(r.exit_code == 0, "figures exits 0");
        expect(fs::exists(fig_dir / "case_a.csv") &&
                   fs::exists(fig_dir / "case_b.csv") &&
                   fs::exists(fig_dir / "case_c.csv") &&
                   fs::exists(fig_dir / "manifest.json") &&
                   fs::exists(fig_dir / "plot_figures.gp"),
               "figures writes the three datasets, manifest and script");
        bool manifest_ok = false;
        try {
            const auto m = nlohmann::json::parse(slurp(fig_dir /
                                                       "manifest.json"));
            manifest_ok = m["figures"].size() == 3 &&
                          m["columns"].size() == coqdyn::io::kColumnCount;
        } catch (...) {
        }
        expect(manifest_ok, "manifest lists three figures and the columns");
    }
    {
        const Run r = run("figures --out-dir /dev/null/nope");
        expect(r.exit_code == 2, "unwritable figure directory exits 2");
    }

    {
        const fs::path cfg = work_dir / "run.json";
        {
            std::ofstream os(cfg);
            os << R"({"u":[0,0,1,0,0,0],"psi0":[1,0,0,0,0,0,0,0],)"
               << R"("t_max":1.0,"dt":0.001,"output_format":"csv"})";
        }
        const Run r = run("evolve --config " + cfg.string() + " --t-max 2 "
                          "--out " + traj_csv.string());
        expect(r.exit_code == 0, "config-file evolve exits 0");
        expect(count_lines(slurp(traj_csv)) == 2002,
               "command-line flags override config values");
    }

    std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL OK" : "FAILED",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
