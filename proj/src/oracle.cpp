#include "coqdyn/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace coqdyn::oracle {

RealRep2 RealRep2::operator*(const RealRep2& o) const {
    RealRep2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
}

RealRep2 RealRep2::operator+(const RealRep2& o) const {
    RealRep2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

RealRep2 real_rep(const Coq& q) {
    RealRep2 r;
    r.m[0][0] = q.q0 + q.q2;
    r.m[0][1] = q.q1 - q.q3;
    r.m[1][0] = -q.q1 - q.q3;
    r.m[1][1] = q.q0 - q.q2;
    return r;
}

RealRep2 adjugate(const RealRep2& a) {
    RealRep2 r;
    r.m[0][0] = a.m[1][1];
    r.m[0][1] = -a.m[0][1];
    r.m[1][0] = -a.m[1][0];
    r.m[1][1] = a.m[0][0];
    return r;
}

Coq coq_from_rep(const RealRep2& a) {
    return {0.5 * (a.m[0][0] + a.m[1][1]), 0.5 * (a.m[0][1] - a.m[1][0]),
            0.5 * (a.m[0][0] - a.m[1][1]), -0.5 * (a.m[0][1] + a.m[1][0])};
}

RealRep4 RealRep4::identity() {
    RealRep4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
}

RealRep4 RealRep4::operator*(const RealRep4& o) const {
    RealRep4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

RealRep4 RealRep4::operator+(const RealRep4& o) const {
    RealRep4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

RealRep4 RealRep4::scaled(double s) const {
    RealRep4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] * s;
    return r;
}

double RealRep4::max_abs() const {
    double v = 0.0;
    for (const auto& row : m)
        for (double x : row) v = std::max(v, std::abs(x));
    return v;
}

RealRep4 real_rep4(const CoqMatrix2& a) {
    const RealRep2 blocks[2][2] = {{real_rep(a.a11), real_rep(a.a12)},
                                   {real_rep(a.a21), real_rep(a.a22)}};
    RealRep4 r;
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    r.m[2 * bi + i][2 * bj + j] = blocks[bi][bj].m[i][j];
    return r;
}

RealRep4 expm(const RealRep4& a) {
    int squarings = 0;
    RealRep4 scaled = a;
    while (scaled.max_abs() > 0.5) {
        scaled = scaled.scaled(0.5);
        ++squarings;
    }

    RealRep4 sum = RealRep4::identity();
    RealRep4 term = RealRep4::identity();
    for (int n = 1; n <= 20; ++n) {
        term = (term * scaled).scaled(1.0 / n);
        sum = sum + term;
    }

    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

std::array<std::complex<double>, 4> eigenvalues4(const RealRep4& a) {
    Eigen::Matrix4d em;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) em(i, j) = a.m[i][j];
    Eigen::EigenSolver<Eigen::Matrix4d> solver(em, false);
    std::array<std::complex<double>, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

StateVector evolve_exact(const Hamiltonian& h, const StateVector& psi0,
                         double t) {
    if (t == 0.0) {
        generator(h); // regime check still applies
        return psi0;
    }
    const RealRep4 propagator = expm(real_rep4(generator(h)).scaled(-t));

    // The state is a 4x2 real matrix: the two amplitude blocks stacked.
    const RealRep2 top = real_rep(psi0.psi1);
    const RealRep2 bottom = real_rep(psi0.psi2);
    double state[4][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            state[i][j] = top.m[i][j];
            state[2 + i][j] = bottom.m[i][j];
        }

    double result[4][2] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 4; ++k)
                result[i][j] += propagator.m[i][k] * state[k][j];

    RealRep2 r1, r2;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            r1.m[i][j] = result[i][j];
            r2.m[i][j] = result[2 + i][j];
        }
    return {coq_from_rep(r1), coq_from_rep(r2)};
}

} // namespace coqdyn::oracle
