#pragma once

#include <array>

#include "coqdyn/coquaternion.hpp"
#include "coqdyn/regime.hpp"

namespace coqdyn {

/// 2x2 matrix with coquaternion entries.
struct CoqMatrix2 {
    Coq a11{}, a12{}, a21{}, a22{};

    constexpr bool operator==(const CoqMatrix2&) const = default;

    static constexpr CoqMatrix2 identity() {
        return {Coq(1.0), Coq(0.0), Coq(0.0), Coq(1.0)};
    }

    constexpr CoqMatrix2 operator+(const CoqMatrix2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }

    constexpr CoqMatrix2 operator-(const CoqMatrix2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }

    constexpr CoqMatrix2 operator*(const CoqMatrix2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
};

/// Left multiplication by a coquaternion scalar.
constexpr CoqMatrix2 operator*(const Coq& s, const CoqMatrix2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

constexpr CoqMatrix2 operator*(double s, const CoqMatrix2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

/// Hermitian conjugate: coquaternionic conjugate of the transpose.
constexpr CoqMatrix2 dagger(const CoqMatrix2& m) {
    return {conj(m.a11), conj(m.a21), conj(m.a12), conj(m.a22)};
}

/// The five coquaternionic Pauli matrices, l in 1..5. The first three are
/// the familiar complex triple; sigma_4 and sigma_5 carry j and k entries.
/// Note sigma_4^2 = sigma_5^2 = -1 (the off-diagonal squares pick up
/// j^2 = k^2 = +1), which is what makes the eigenvalue discriminant
/// indefinite.
CoqMatrix2 pauli(int l);

/// Eigenvalues E = u0 +- sqrt(gap2). For a RealPair (and Degenerate),
/// e_plus/e_minus hold the two real eigenvalues; for a
/// ComplexConjugatePair, e_plus holds the common real part and e_minus the
/// absolute imaginary part.
struct Spectrum {
    SpectrumKind kind{};
    double e_plus{};
    double e_minus{};
    double gap2{};
};

/// Hermitian Hamiltonian u0 + sum_l u_l sigma_l with its derived regime,
/// generator normalization nu and generator unit
/// i = (i u2 + j u4 + k u5)/nu.
struct Hamiltonian {
    Params u{};
    CoqMatrix2 matrix{};
    Regime regime{};
    double nu{};           // 0 in the null regime
    Coq generator_unit{};  // zero in the null regime
    Spectrum spectrum{};
};

enum class NullPolicy { Reject, Allow };

/// Assembles the Hamiltonian. Throws NullGenerator on the regime boundary
/// u2^2 = u4^2 + u5^2 unless policy is Allow (classification and spectrum
/// remain valid there; only the generator is singular).
Hamiltonian build_hamiltonian(const Params& u,
                              NullPolicy policy = NullPolicy::Reject);

Spectrum eigenvalues(const Hamiltonian& h);

/// Evolution generator A = i H, skew-Hermitian in both non-null regimes.
/// Throws NullGenerator in the null regime.
CoqMatrix2 generator(const Hamiltonian& h);

} // namespace coqdyn
