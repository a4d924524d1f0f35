#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace coqdyn {

using Params = std::array<double, 6>; // u0..u5

/// Sign of u2^2 - u4^2 - u5^2: the causal character of the imaginary part
/// of the coquaternion appearing in the Hamiltonian.
enum class RegimeKind { TimeLike, Null, SpaceLike };

enum class SpectrumKind { RealPair, ComplexConjugatePair, Degenerate };

/// A: time-like (spherical Rabi oscillations). B: space-like with real
/// eigenvalues (open orbits). C: space-like with a complex-conjugate pair
/// (closed hyperbolic Rabi oscillations).
enum class CaseLabel { A, B, C };

struct Regime {
    RegimeKind kind{};
    SpectrumKind spectrum_kind{};
    /// Absent on the null-regime and exceptional-point boundaries.
    std::optional<CaseLabel> case_label{};
};

/// Eigenvalue discriminant u1^2 + u2^2 + u3^2 - u4^2 - u5^2.
inline double gap2(const Params& u) {
    return u[1] * u[1] + u[2] * u[2] + u[3] * u[3] - u[4] * u[4] - u[5] * u[5];
}

/// Signed nu^2 = u2^2 - u4^2 - u5^2 (positive time-like, negative space-like).
inline double nu2_signed(const Params& u) {
    return u[2] * u[2] - u[4] * u[4] - u[5] * u[5];
}

/// nu = sqrt(|u2^2 - u4^2 - u5^2|), the generator normalization.
inline double nu_of(const Params& u) {
    return std::sqrt(std::abs(nu2_signed(u)));
}

inline double params_scale2(const Params& u) {
    double s = 0.0;
    for (double v : u) s += v * v;
    return s;
}

/// Scale-aware tolerance for the null-regime and exceptional-point boundaries.
inline double regime_tolerance(const Params& u) {
    return 1e-12 * (1.0 + params_scale2(u));
}

inline Regime classify(const Params& u) {
    const double tol = regime_tolerance(u);
    const double n2 = nu2_signed(u);
    const double g2 = gap2(u);

    Regime r;
    if (std::abs(n2) <= tol)
        r.kind = RegimeKind::Null;
    else
        r.kind = n2 > 0 ? RegimeKind::TimeLike : RegimeKind::SpaceLike;

    if (std::abs(g2) <= tol)
        r.spectrum_kind = SpectrumKind::Degenerate;
    else
        r.spectrum_kind =
            g2 > 0 ? SpectrumKind::RealPair : SpectrumKind::ComplexConjugatePair;

    if (r.kind == RegimeKind::TimeLike) {
        r.case_label = CaseLabel::A;
    } else if (r.kind == RegimeKind::SpaceLike) {
        if (r.spectrum_kind == SpectrumKind::RealPair)
            r.case_label = CaseLabel::B;
        else if (r.spectrum_kind == SpectrumKind::ComplexConjugatePair)
            r.case_label = CaseLabel::C;
    }
    return r;
}

inline std::string to_string(RegimeKind k) {
    switch (k) {
    case RegimeKind::TimeLike: return "TimeLike";
    case RegimeKind::Null: return "Null";
    case RegimeKind::SpaceLike: return "SpaceLike";
    }
    return "?";
}

inline std::string to_string(SpectrumKind k) {
    switch (k) {
    case SpectrumKind::RealPair: return "RealPair";
    case SpectrumKind::ComplexConjugatePair: return "ComplexConjugatePair";
    case SpectrumKind::Degenerate: return "Degenerate";
    }
    return "?";
}

inline std::string to_string(CaseLabel c) {
    switch (c) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    }
    return "?";
}

} // namespace coqdyn
