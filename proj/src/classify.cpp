#include "coqdyn/classify.hpp"

#include <cmath>

namespace coqdyn {

OrbitDiagnostics orbit_diagnostics(const Hamiltonian& h) {
    const Params& u = h.u;
    OrbitDiagnostics d;

    if (h.regime.kind == RegimeKind::Null) {
        d.kind = OrbitKind::ParabolicShear;
        d.axis = {u[1], 0.0, u[3]};
    } else if (h.regime.kind == RegimeKind::TimeLike) {
        d.kind = OrbitKind::ClosedPeriodic;
        d.rate = 2.0 * std::sqrt(u[1] * u[1] + h.nu * h.nu + u[3] * u[3]);
        d.axis = {u[1], h.nu, u[3]};
    } else {
        d.axis = {u[1], -h.nu, u[3]};
        switch (h.regime.spectrum_kind) {
        case SpectrumKind::RealPair:
            d.kind = OrbitKind::OpenHyperbolic;
            d.rate = 2.0 * std::sqrt(u[1] * u[1] + u[3] * u[3] - h.nu * h.nu);
            break;
        case SpectrumKind::ComplexConjugatePair:
            d.kind = OrbitKind::ClosedPeriodic;
            d.rate = 2.0 * std::sqrt(h.nu * h.nu - u[1] * u[1] - u[3] * u[3]);
            break;
        case SpectrumKind::Degenerate:
            // Exceptional point: shear flow, rate formulas do not apply.
            d.kind = OrbitKind::ParabolicShear;
            break;
        }
    }

    const double axis_norm = std::sqrt(d.axis[0] * d.axis[0] +
                                       d.axis[1] * d.axis[1] +
                                       d.axis[2] * d.axis[2]);
    d.axis_angle =
        axis_norm > 0 ? std::acos(std::abs(d.axis[1]) / axis_norm) : 0.0;
    return d;
}

std::string to_string(OrbitKind k) {
    switch (k) {
    case OrbitKind::ClosedPeriodic: return "ClosedPeriodic";
    case OrbitKind::OpenHyperbolic: return "OpenHyperbolic";
    case OrbitKind::ParabolicShear: return "ParabolicShear";
    }
    return "?";
}

} // namespace coqdyn
