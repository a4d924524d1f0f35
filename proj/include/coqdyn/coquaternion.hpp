#pragma once

#include <cmath>
#include <optional>
#include <ostream>

#include "coqdyn/errors.hpp"

namespace coqdyn {

/// Split quaternion q = q0 + i q1 + j q2 + k q3 with i^2 = -1,
/// j^2 = k^2 = +1, ij = -ji = k, jk = -kj = -i, ki = -ik = j.
/// The squared modulus q0^2 + q1^2 - q2^2 - q3^2 is indefinite, so
/// nonzero elements may fail to have an inverse.
template <typename T = double>
struct Coquaternion {
    T q0{}, q1{}, q2{}, q3{};

    constexpr Coquaternion() = default;
    constexpr Coquaternion(T scalar) : q0(scalar) {}
    constexpr Coquaternion(T a, T b, T c, T d) : q0(a), q1(b), q2(c), q3(d) {}

    static constexpr Coquaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr Coquaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr Coquaternion unit_k() { return {0, 0, 0, 1}; }

    constexpr bool operator==(const Coquaternion&) const = default;

    constexpr Coquaternion operator-() const { return {-q0, -q1, -q2, -q3}; }

    constexpr Coquaternion& operator+=(const Coquaternion& o) {
        q0 += o.q0;
        q1 += o.q1;
        q2 += o.q2;
        q3 += o.q3;
        return *this;
    }

    constexpr Coquaternion& operator-=(const Coquaternion& o) {
        q0 -= o.q0;
        q1 -= o.q1;
        q2 -= o.q2;
        q3 -= o.q3;
        return *this;
    }

    constexpr Coquaternion& operator*=(T s) {
        q0 *= s;
        q1 *= s;
        q2 *= s;
        q3 *= s;
        return *this;
    }

    constexpr Coquaternion operator+(const Coquaternion& o) const {
        Coquaternion r(*this);
        return r += o;
    }

    constexpr Coquaternion operator-(const Coquaternion& o) const {
        Coquaternion r(*this);
        return r -= o;
    }

    // Basis products: i^2 = -1, j^2 = k^2 = +1,
    // ij = -ji = k, jk = -kj = -i, ki = -ik = j.
    constexpr Coquaternion operator*(const Coquaternion& o) const {
        return {q0 * o.q0 - q1 * o.q1 + q2 * o.q2 + q3 * o.q3,
                q0 * o.q1 + q1 * o.q0 - q2 * o.q3 + q3 * o.q2,
                q0 * o.q2 + q2 * o.q0 + q3 * o.q1 - q1 * o.q3,
                q0 * o.q3 + q3 * o.q0 + q1 * o.q2 - q2 * o.q1};
    }

    constexpr Coquaternion operator*(T s) const {
        Coquaternion r(*this);
        return r *= s;
    }

    friend constexpr Coquaternion operator*(T s, const Coquaternion& q) {
        return q * s;
    }

    constexpr Coquaternion operator/(T s) const {
        return {q0 / s, q1 / s, q2 / s, q3 / s};
    }
};

template <typename T>
constexpr Coquaternion<T> conj(const Coquaternion<T>& q) {
    return {q.q0, -q.q1, -q.q2, -q.q3};
}

/// Indefinite squared modulus q̄q = q0^2 + q1^2 - q2^2 - q3^2.
template <typename T>
constexpr T mod2(const Coquaternion<T>& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3;
}

/// Discriminant of the imaginary part: q1^2 - q2^2 - q3^2. Positive for a
/// time-like imaginary part, negative for space-like, zero for null.
template <typename T>
constexpr T imag_norm2(const Coquaternion<T>& q) {
    return q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3;
}

template <typename T>
constexpr T norm2_euclidean(const Coquaternion<T>& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}

/// Scale-aware tolerance for classifying vanishing indefinite norms.
inline double null_tolerance(const Coquaternion<double>& q) {
    return 1e-12 * (1.0 + norm2_euclidean(q));
}

inline double scalar(const Coquaternion<double>& q) { return q.q0; }

inline Coquaternion<double> imag(const Coquaternion<double>& q) {
    return {0.0, q.q1, q.q2, q.q3};
}

/// q^{-1} = q̄ / (q̄q). Throws NullCoquaternion when |q̄q| is below the
/// null tolerance.
inline Coquaternion<double> inverse(const Coquaternion<double>& q) {
    const double m = mod2(q);
    if (std::abs(m) <= null_tolerance(q))
        throw NullCoquaternion("coquaternion has null modulus, no inverse");
    return conj(q) / m;
}

using Coq = Coquaternion<double>;

enum class PolarBranch { Circular, HyperbolicCosh, Null, HyperbolicSinh };

/// Polar decomposition of a coquaternion. The branch is selected by the
/// signs of mod2(q) and imag_norm2(q):
///
///   Circular        q = |q| (cos(angle) + axis sin(angle)),   axis^2 = -1
///   HyperbolicCosh  q = sign |q| (cosh(angle) + axis sinh(angle)), axis^2 = +1
///   Null            q = sign |q| (1 + axis),                  axis^2 = 0
///   HyperbolicSinh  q = |q| (sinh(angle) + axis cosh(angle)), axis^2 = +1
///
/// `sign` carries the sign of q0 for the cosh and null branches, where the
/// angle is taken nonnegative; it is +1 elsewhere.
struct PolarForm {
    PolarBranch branch{};
    double modulus{};
    Coq axis{};
    std::optional<double> angle{};
    double sign = 1.0;
};

inline Coq reconstruct(const PolarForm& p) {
    switch (p.branch) {
    case PolarBranch::Circular: {
        const double t = p.angle.value();
        return p.modulus * (Coq(std::cos(t)) + p.axis * std::sin(t));
    }
    case PolarBranch::HyperbolicCosh: {
        const double t = p.angle.value();
        return p.sign * p.modulus * (Coq(std::cosh(t)) + p.axis * std::sinh(t));
    }
    case PolarBranch::Null:
        return p.sign * p.modulus * (Coq(1.0) + p.axis);
    case PolarBranch::HyperbolicSinh: {
        const double t = p.angle.value();
        return p.modulus * (Coq(std::sinh(t)) + p.axis * std::cosh(t));
    }
    }
    return {};
}

/// Four-branch polar decomposition. Throws ZeroCoquaternion for q = 0 and
/// DegeneratePolar for light-cone elements (mod2 = 0 with a non-null
/// imaginary part, or a pure null imaginary part), which admit no finite
/// representation of the above forms.
inline PolarForm polar_decompose(const Coq& q) {
    const double eps = null_tolerance(q);
    if (norm2_euclidean(q) == 0.0)
        throw ZeroCoquaternion("polar decomposition of zero");

    const double d = mod2(q);
    const double w = imag_norm2(q);
    PolarForm p;

    if (std::abs(w) <= eps) {
        // Null imaginary part: q = q0 (1 + axis), needs q0 != 0.
        if (q.q0 * q.q0 <= eps)
            throw DegeneratePolar("pure null imaginary part has no polar form");
        p.branch = PolarBranch::Null;
        p.modulus = std::abs(q.q0);
        p.sign = q.q0 < 0 ? -1.0 : 1.0;
        p.axis = imag(q) / q.q0;
        return p;
    }
    if (std::abs(d) <= eps)
        throw DegeneratePolar("null coquaternion has no finite polar form");

    if (d > 0 && w > 0) {
        const double s = std::sqrt(w);
        p.branch = PolarBranch::Circular;
        p.modulus = std::sqrt(d);
        p.axis = imag(q) / s;
        p.angle = std::atan2(s, q.q0);
    } else if (d > 0) {
        const double s = std::sqrt(-w);
        p.branch = PolarBranch::HyperbolicCosh;
        p.modulus = std::sqrt(d);
        p.sign = q.q0 < 0 ? -1.0 : 1.0;
        p.axis = imag(q) * (p.sign / s);
        p.angle = std::atanh(s / std::abs(q.q0));
    } else {
        const double s = std::sqrt(-w);
        p.branch = PolarBranch::HyperbolicSinh;
        p.modulus = std::sqrt(-d);
        p.axis = imag(q) / s;
        p.angle = std::atanh(q.q0 / s);
    }
    return p;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Coquaternion<T>& q) {
    return os << '(' << q.q0 << " + " << q.q1 << "i + " << q.q2 << "j + "
              << q.q3 << "k)";
}

} // namespace coqdyn
