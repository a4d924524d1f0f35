#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include <json.hpp>

#include "coqdyn/trajectory_io.hpp"

using namespace coqdyn;

namespace {

bool same_bits(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) return true;
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

Trajectory short_state_run() {
    const Hamiltonian h = build_hamiltonian({0.3, 0.5, 1.2, 0.4, 0.3, 0.2});
    return evolve_state(h, {Coq(0.8, 0.1, 0.05, 0.0), Coq(0.55, 0, 0, 0.2)},
                        0.05, 1e-3);
}

Trajectory short_bloch_run() {
    const Hamiltonian h = build_hamiltonian({0.3, 0.5, 1.2, 0.4, 0.3, 0.2});
    const Trajectory seed = short_state_run();
    return evolve_bloch(h, seed.bloch[0].sigma, 0.05, 1e-3);
}

} // namespace

TEST_CASE("format_double is shortest round-trip") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(-2.0) == "-2");
    const double v = 1.0 / 3.0;
    const std::string s = io::format_double(v);
    CHECK(std::stod(s) == v);
}

TEST_CASE("csv header is the pinned column list") {
    std::stringstream ss;
    io::write_csv(ss, short_state_run());
    std::string header;
    std::getline(ss, header);
    CHECK(header ==
          "t,psi1_0,psi1_1,psi1_2,psi1_3,psi2_0,psi2_1,psi2_2,psi2_3,"
          "sigma1,sigma2,sigma3,sigma4,sigma5,sx,sy,sz,aux1,aux2,aux3,"
          "inv_norm,inv_state,inv_reduced,inv_cylinder,inv_aux");
}

TEST_CASE("csv round trip reproduces every value bit for bit") {
    for (const bool bloch_level : {false, true}) {
        const Trajectory traj =
            bloch_level ? short_bloch_run() : short_state_run();
        std::stringstream ss;
        io::write_csv(ss, traj);
        const io::TrajectoryTable table = io::read_csv(ss);

        REQUIRE(table.rows.size() == traj.times.size());
        for (std::size_t k = 0; k < table.rows.size(); ++k) {
            const auto expect = io::row_values(traj, k);
            for (int c = 0; c < io::kColumnCount; ++c)
                CHECK(same_bits(table.rows[k][c], expect[c]));
        }
    }
}

TEST_CASE("json-lines output parses and carries the same fields") {
    std::stringstream ss;
    io::write_json_lines(ss, short_state_run());
    std::string line;
    REQUIRE(std::getline(ss, line));
    const nlohmann::json j = nlohmann::json::parse(line);
    CHECK(j.contains("t"));
    CHECK(j["psi1"].size() == 4);
    CHECK(j["sigma"].size() == 5);
    CHECK(j["reduced"].size() == 3);
    CHECK(j["aux"].size() == 3);
    CHECK(j["inv"].contains("norm"));
    CHECK(j["t"].get<double>() == 0.0);

    std::stringstream bs;
    io::write_json_lines(bs, short_bloch_run());
    REQUIRE(std::getline(bs, line));
    const nlohmann::json b = nlohmann::json::parse(line);
    CHECK(b["psi1"].is_null());
}
