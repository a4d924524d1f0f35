#pragma once

#include <array>
#include <complex>

#include "coqdyn/dynamics.hpp"
#include "coqdyn/matrix2.hpp"

namespace coqdyn::oracle {

/// Faithful real 2x2 image of a coquaternion:
///   1 -> identity, i -> [[0,1],[-1,0]], j -> [[1,0],[0,-1]],
///   k -> [[0,-1],[-1,0]].
/// The map is an algebra isomorphism onto the real 2x2 matrices, with
/// det(real_rep(q)) = mod2(q) and real_rep(conj q) = adjugate(real_rep q).
struct RealRep2 {
    std::array<std::array<double, 2>, 2> m{};

    RealRep2 operator*(const RealRep2& o) const;
    RealRep2 operator+(const RealRep2& o) const;
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

RealRep2 real_rep(const Coq& q);
RealRep2 adjugate(const RealRep2& a);
Coq coq_from_rep(const RealRep2& a);

/// Block image of a coquaternionic 2x2 matrix: each entry replaced by its
/// RealRep2 block. Multiplicative over CoqMatrix2 products.
struct RealRep4 {
    std::array<std::array<double, 4>, 4> m{};

    static RealRep4 identity();
    RealRep4 operator*(const RealRep4& o) const;
    RealRep4 operator+(const RealRep4& o) const;
    RealRep4 scaled(double s) const;
    double max_abs() const;
};

RealRep4 real_rep4(const CoqMatrix2& a);

/// exp(M) by scaling and squaring: scale until the max norm is at most
/// 0.5, run a 20-term series, square back.
RealRep4 expm(const RealRep4& a);

/// Eigenvalues of the 4x4 block representation (dense solver backend).
/// For a Hermitian Hamiltonian these are E+ and E-, each twice.
std::array<std::complex<double>, 4> eigenvalues4(const RealRep4& a);

/// Matrix-exponential evolution exp(-i H t)|psi0> computed entirely in the
/// real representation; the independent cross-check for the integrator.
StateVector evolve_exact(const Hamiltonian& h, const StateVector& psi0,
                         double t);

} // namespace coqdyn::oracle
