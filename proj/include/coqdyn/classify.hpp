#pragma once

#include <array>
#include <optional>
#include <string>

#include "coqdyn/matrix2.hpp"

namespace coqdyn {

enum class OrbitKind { ClosedPeriodic, OpenHyperbolic, ParabolicShear };

/// Orbit topology of the reduced dynamics together with its rate:
///   case A  closed, angular frequency 2 sqrt(u1^2 + nu^2 + u3^2)
///   case B  open, exponential rate    2 sqrt(u1^2 + u3^2 - nu^2)
///   case C  closed, angular frequency 2 sqrt(nu^2 - u1^2 - u3^2)
/// In every non-null regime rate^2 = 4 |gap2|, so the rate equals
/// |E+ - E-| for a real pair and twice the imaginary part for a conjugate
/// pair. `axis` is the fixed direction of the reduced flow: (u1, nu, u3)
/// time-like, (u1, -nu, u3) space-like, (u1, 0, u3) on the null boundary.
/// `rate` is unset in the null regime; `axis_angle` is the angle between
/// the rotation axis and the hyperboloid axis (0,1,0).
struct OrbitDiagnostics {
    OrbitKind kind{};
    std::optional<double> rate{};
    std::array<double, 3> axis{};
    double axis_angle{};
};

OrbitDiagnostics orbit_diagnostics(const Hamiltonian& h);

std::string to_string(OrbitKind k);

} // namespace coqdyn
