#include "coqdyn/trajectory_io.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace coqdyn::io {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

const std::array<std::string, kColumnCount>& column_names() {
    static const std::array<std::string, kColumnCount> names = {
        "t",      "psi1_0", "psi1_1", "psi1_2",      "psi1_3",
        "psi2_0", "psi2_1", "psi2_2", "psi2_3",      "sigma1",
        "sigma2", "sigma3", "sigma4", "sigma5",      "sx",
        "sy",     "sz",     "aux1",   "aux2",        "aux3",
        "inv_norm", "inv_state", "inv_reduced", "inv_cylinder", "inv_aux"};
    return names;
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::array<double, kColumnCount> row_values(const Trajectory& traj,
                                            std::size_t k) {
    std::array<double, kColumnCount> r;
    r[0] = traj.times.at(k);
    if (traj.states.empty()) {
        for (int c = 1; c <= 8; ++c) r[c] = kNaN;
    } else {
        const StateVector& s = traj.states.at(k);
        r[1] = s.psi1.q0;
        r[2] = s.psi1.q1;
        r[3] = s.psi1.q2;
        r[4] = s.psi1.q3;
        r[5] = s.psi2.q0;
        r[6] = s.psi2.q1;
        r[7] = s.psi2.q2;
        r[8] = s.psi2.q3;
    }
    const BlochState& b = traj.bloch.at(k);
    for (int l = 0; l < 5; ++l) r[9 + l] = b.sigma[l];
    for (int l = 0; l < 3; ++l) r[14 + l] = b.reduced[l];
    for (int l = 0; l < 3; ++l) r[17 + l] = b.aux[l];
    const InvariantValues& v = traj.invariants.at(k);
    r[20] = v.norm;
    r[21] = v.state;
    r[22] = v.reduced;
    r[23] = v.cylinder;
    r[24] = v.aux;
    return r;
}

void write_csv(std::ostream& os, const Trajectory& traj) {
    const auto& names = column_names();
    for (int c = 0; c < kColumnCount; ++c)
        os << names[c] << (c + 1 < kColumnCount ? ',' : '\n');
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const auto row = row_values(traj, k);
        for (int c = 0; c < kColumnCount; ++c)
            os << format_double(row[c]) << (c + 1 < kColumnCount ? ',' : '\n');
    }
}

void write_json_lines(std::ostream& os, const Trajectory& traj) {
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        nlohmann::json line;
        line["t"] = traj.times[k];
        if (traj.states.empty()) {
            line["psi1"] = nullptr;
            line["psi2"] = nullptr;
        } else {
            const StateVector& s = traj.states[k];
            line["psi1"] = {s.psi1.q0, s.psi1.q1, s.psi1.q2, s.psi1.q3};
            line["psi2"] = {s.psi2.q0, s.psi2.q1, s.psi2.q2, s.psi2.q3};
        }
        const BlochState& b = traj.bloch[k];
        line["sigma"] = b.sigma;
        line["reduced"] = b.reduced;
        line["aux"] = b.aux;
        const InvariantValues& v = traj.invariants[k];
        line["inv"] = {{"norm", v.norm},
                       {"state", v.state},
                       {"reduced", v.reduced},
                       {"cylinder", v.cylinder},
                       {"aux", v.aux}};
        os << line.dump() << '\n';
    }
}

TrajectoryTable read_csv(std::istream& is) {
    TrajectoryTable table;
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("empty trajectory file");

    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.header.push_back(cell);
    if (table.header.size() != kColumnCount)
        throw ConfigError("unexpected trajectory column count");

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::array<double, kColumnCount> row{};
        std::size_t pos = 0;
        for (int c = 0; c < kColumnCount; ++c) {
            std::size_t next = line.find(',', pos);
            if (next == std::string::npos) next = line.size();
            const char* first = line.data() + pos;
            const char* last = line.data() + next;
            const auto res = std::from_chars(first, last, row[c]);
            if (res.ptr != last)
                throw ConfigError("malformed numeric cell in trajectory");
            pos = next + 1;
        }
        table.rows.push_back(row);
    }
    return table;
}

} // namespace coqdyn::io
