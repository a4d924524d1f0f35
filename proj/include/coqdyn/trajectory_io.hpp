#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "coqdyn/dynamics.hpp"

namespace coqdyn::io {

inline constexpr int kColumnCount = 25;

/// Column names, in emission order: t, the eight state components, the
/// five Pauli expectations, the reduced and auxiliary triples, and the
/// five invariant values.
const std::array<std::string, kColumnCount>& column_names();

/// Shortest decimal representation that parses back to the same bits.
std::string format_double(double v);

/// One numeric row per sample; state columns are nan for Bloch-level runs.
void write_csv(std::ostream& os, const Trajectory& traj);

/// One JSON object per line with the same fields grouped by name; state
/// components are null for Bloch-level runs.
void write_json_lines(std::ostream& os, const Trajectory& traj);

struct TrajectoryTable {
    std::vector<std::string> header;
    std::vector<std::array<double, kColumnCount>> rows;
};

TrajectoryTable read_csv(std::istream& is);

std::array<double, kColumnCount> row_values(const Trajectory& traj,
                                            std::size_t k);

} // namespace coqdyn::io
