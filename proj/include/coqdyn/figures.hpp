#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "coqdyn/dynamics.hpp"

namespace coqdyn::figures {

/// One exemplary parameter point per dynamical case: a spherical Rabi
/// orbit (A), an open hyperboloid orbit (B) and a closed hyperbolic Rabi
/// orbit over exactly one period (C).
struct Scenario {
    std::string name;       // file stem, e.g. "case_a"
    std::string case_label; // "A", "B", "C"
    Params u{};
    StateVector psi0{};
    double t_max{};
    double dt{};
    std::string description;
};

const std::vector<Scenario>& scenarios();

/// Runs the three scenario trajectories (in parallel when OpenMP is
/// enabled), writes one CSV per scenario plus a manifest with the chosen
/// parameters and a gnuplot script for the reduced orbits.
void write_figures(const std::filesystem::path& out_dir);

} // namespace coqdyn::figures
