#include <doctest.h>

#include <cmath>
#include <complex>

#include "coqdyn/oracle.hpp"
#include "coqdyn/sampling.hpp"
#include "test_helpers.hpp"

using namespace coqdyn;
using namespace coqdyn::testing;
using oracle::RealRep2;
using oracle::RealRep4;

namespace {

double rep2_dist(const RealRep2& a, const RealRep2& b) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            s += (a.m[i][j] - b.m[i][j]) * (a.m[i][j] - b.m[i][j]);
    return std::sqrt(s);
}

double rep4_dist(const RealRep4& a, const RealRep4& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s += (a.m[i][j] - b.m[i][j]) * (a.m[i][j] - b.m[i][j]);
    return std::sqrt(s);
}

} // namespace

TEST_CASE("real representation of the basis") {
    const RealRep2 one = oracle::real_rep(Coq(1.0));
    CHECK(one.m[0][0] == 1.0);
    CHECK(one.m[0][1] == 0.0);
    CHECK(one.m[1][0] == 0.0);
    CHECK(one.m[1][1] == 1.0);

    const RealRep2 i = oracle::real_rep(Coq::unit_i());
    CHECK(i.m[0][0] == 0.0);
    CHECK(i.m[0][1] == 1.0);
    CHECK(i.m[1][0] == -1.0);
    CHECK(i.m[1][1] == 0.0);

    // i^2 -> -identity, i j -> k.
    const RealRep2 minus_one = oracle::real_rep(Coq(-1.0));
    CHECK(rep2_dist(i * i, minus_one) == 0.0);
    const RealRep2 j = oracle::real_rep(Coq::unit_j());
    const RealRep2 k = oracle::real_rep(Coq::unit_k());
    CHECK(rep2_dist(i * j, k) == 0.0);

    CHECK(oracle::real_rep(Coq(2, 0, 3, 0)).det() == doctest::Approx(-5.0));
}

TEST_CASE("representation is a homomorphism with det = mod2") {
    Rng rng(14);
    for (int n = 0; n < 1000; ++n) {
        const Coq p = random_coq(rng, 3.0), q = random_coq(rng, 3.0);
        CHECK(rep2_dist(oracle::real_rep(p * q),
                        oracle::real_rep(p) * oracle::real_rep(q)) < 1e-12);
        CHECK(std::abs(oracle::real_rep(p).det() - mod2(p)) <
              1e-12 * (1.0 + std::abs(mod2(p))));
        CHECK(rep2_dist(oracle::real_rep(conj(p)),
                        oracle::adjugate(oracle::real_rep(p))) == 0.0);
        CHECK(dist(oracle::coq_from_rep(oracle::real_rep(p)), p) <
              1e-15 * (1.0 + std::sqrt(norm2_euclidean(p))));
    }
}

TEST_CASE("block representation is multiplicative") {
    Rng rng(15);
    for (int n = 0; n < 200; ++n) {
        const CoqMatrix2 a = {random_coq(rng), random_coq(rng),
                              random_coq(rng), random_coq(rng)};
        const CoqMatrix2 b = {random_coq(rng), random_coq(rng),
                              random_coq(rng), random_coq(rng)};
        CHECK(rep4_dist(oracle::real_rep4(a * b),
                        oracle::real_rep4(a) * oracle::real_rep4(b)) < 1e-12);
    }
}

TEST_CASE("matrix exponential") {
    SUBCASE("exp(0) = identity") {
        RealRep4 zero{};
        CHECK(rep4_dist(oracle::expm(zero), RealRep4::identity()) == 0.0);
    }
    SUBCASE("rotation block") {
        // Generator of a rotation in the first two coordinates.
        RealRep4 g{};
        const double theta = 1.3;
        g.m[0][1] = -theta;
        g.m[1][0] = theta;
        const RealRep4 e = oracle::expm(g);
        CHECK(e.m[0][0] == doctest::Approx(std::cos(theta)).epsilon(1e-13));
        CHECK(e.m[1][0] == doctest::Approx(std::sin(theta)).epsilon(1e-13));
        CHECK(e.m[2][2] == 1.0);
    }
    SUBCASE("exp(A) exp(-A) = identity") {
        Rng rng(16);
        for (int n = 0; n < 50; ++n) {
            RealRep4 a{};
            for (auto& row : a.m)
                for (double& v : row) v = uniform(rng, -1, 1);
            const RealRep4 prod = oracle::expm(a) * oracle::expm(a.scaled(-1));
            CHECK(rep4_dist(prod, RealRep4::identity()) < 1e-11);
        }
    }
}

TEST_CASE("spectrum of the represented Pauli matrices") {
    const auto lam = oracle::eigenvalues4(oracle::real_rep4(pauli(1)));
    int plus = 0, minus = 0;
    for (const auto& z : lam) {
        CHECK(std::abs(z.imag()) < 1e-12);
        if (z.real() > 0) ++plus;
        else ++minus;
        CHECK(std::abs(std::abs(z.real()) - 1.0) < 1e-12);
    }
    CHECK(plus == 2);
    CHECK(minus == 2);
}

TEST_CASE("evolve_exact") {
    SUBCASE("t = 0 is the identity") {
        const Hamiltonian h = build_hamiltonian({0.4, 0.3, 1.0, 0.2, 0.3, 0.1});
        const StateVector psi0{Coq(0.8, 0.1, 0.0, 0.2), Coq(0.5, 0, 0.3, 0)};
        const StateVector out = oracle::evolve_exact(h, psi0, 0.0);
        CHECK(dist(out.psi1, psi0.psi1) == 0.0);
        CHECK(dist(out.psi2, psi0.psi2) == 0.0);
    }
    SUBCASE("quarter Rabi period") {
        const Hamiltonian h = build_hamiltonian({0, 0, 1, 0, 0, 0});
        const StateVector psi0{Coq(1.0), Coq(0.0)};
        const StateVector out =
            oracle::evolve_exact(h, psi0, std::acos(-1.0) / 2);
        CHECK(dist(out.psi1, Coq(0.0)) < 1e-10);
        CHECK(dist(out.psi2, Coq(1.0)) < 1e-10);
    }
    SUBCASE("the flow preserves the indefinite norm") {
        sampling::Rng rng(17);
        for (int n = 0; n < 50; ++n) {
            const RegimeKind kind =
                n % 2 ? RegimeKind::SpaceLike : RegimeKind::TimeLike;
            const Hamiltonian h =
                build_hamiltonian(sampling::random_params(rng, kind));
            const StateVector psi0 = sampling::random_unit_state(rng);
            for (double t : {0.5, 2.0, 7.5}) {
                const StateVector out = oracle::evolve_exact(h, psi0, t);
                CHECK(std::abs(out.norm() - psi0.norm()) < 1e-10);
            }
        }
    }
}
