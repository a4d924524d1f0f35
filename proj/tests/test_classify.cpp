#include <doctest.h>

#include <cmath>

#include "coqdyn/classify.hpp"
#include "coqdyn/dynamics.hpp"
#include "test_helpers.hpp"

using namespace coqdyn;
using namespace coqdyn::testing;

TEST_CASE("regime classification examples") {
    SUBCASE("time-like, case A") {
        const Regime r = classify({0, 1, 2, 0, 1, 1});
        CHECK(r.kind == RegimeKind::TimeLike);
        CHECK(r.case_label == CaseLabel::A);
        CHECK(r.spectrum_kind == SpectrumKind::RealPair);
    }
    SUBCASE("space-like with real pair, case B") {
        const Regime r = classify({0, 3, 1, 0, 2, 2});
        CHECK(r.kind == RegimeKind::SpaceLike);
        CHECK(r.case_label == CaseLabel::B);
        CHECK(gap2({0, 3, 1, 0, 2, 2}) == doctest::Approx(2.0));
    }
    SUBCASE("space-like with conjugate pair, case C") {
        const Regime r = classify({0, 1, 0, 0, 2, 2});
        CHECK(r.kind == RegimeKind::SpaceLike);
        CHECK(r.case_label == CaseLabel::C);
        CHECK(gap2({0, 1, 0, 0, 2, 2}) == doctest::Approx(-7.0));
    }
    SUBCASE("null boundary") {
        const Regime r = classify({0, 0, 1, 0, 1, 0});
        CHECK(r.kind == RegimeKind::Null);
        CHECK(!r.case_label.has_value());
    }
}

TEST_CASE("orbit diagnostics examples") {
    SUBCASE("case A rate equals the eigenvalue splitting") {
        const Hamiltonian h = build_hamiltonian({0, 1, 2, 2, 0, 0});
        const OrbitDiagnostics d = orbit_diagnostics(h);
        CHECK(d.kind == OrbitKind::ClosedPeriodic);
        CHECK(*d.rate == doctest::Approx(6.0));
        CHECK(*d.rate ==
              doctest::Approx(h.spectrum.e_plus - h.spectrum.e_minus));
    }
    SUBCASE("case C") {
        const Hamiltonian h = build_hamiltonian({0, 0, 0, 0, 1, 0});
        const OrbitDiagnostics d = orbit_diagnostics(h);
        CHECK(d.kind == OrbitKind::ClosedPeriodic);
        CHECK(*d.rate == doctest::Approx(2.0));
    }
    SUBCASE("case B growth rate") {
        const Hamiltonian h = build_hamiltonian({0, 2, 0, 0, 1, 0});
        CHECK(h.regime.case_label == CaseLabel::B);
        const OrbitDiagnostics d = orbit_diagnostics(h);
        CHECK(d.kind == OrbitKind::OpenHyperbolic);
        CHECK(*d.rate == doctest::Approx(2.0 * std::sqrt(3.0)));
    }
    SUBCASE("null regime has no rate") {
        const Hamiltonian h =
            build_hamiltonian({0, 0.2, 1, 0.1, 0.6, 0.8}, NullPolicy::Allow);
        CHECK(h.regime.kind == RegimeKind::Null);
        const OrbitDiagnostics d = orbit_diagnostics(h);
        CHECK(d.kind == OrbitKind::ParabolicShear);
        CHECK(!d.rate.has_value());
    }
}

TEST_CASE("rate matches 2 sqrt(|gap2|)") {
    Rng rng(11);
    for (int n = 0; n < 200; ++n) {
        Params u;
        for (double& v : u) v = uniform(rng, -2, 2);
        const Regime r = classify(u);
        if (r.kind == RegimeKind::Null ||
            r.spectrum_kind == SpectrumKind::Degenerate)
            continue;
        const Hamiltonian h = build_hamiltonian(u);
        const OrbitDiagnostics d = orbit_diagnostics(h);
        const double expected = 2.0 * std::sqrt(std::abs(gap2(u)));
        CHECK(std::abs(*d.rate - expected) <= 1e-12 * (1.0 + expected));
    }
}

TEST_CASE("classification is invariant under (u4,u5) rotations") {
    Rng rng(12);
    for (int n = 0; n < 100; ++n) {
        Params u;
        for (double& v : u) v = uniform(rng, -2, 2);
        const Regime r = classify(u);
        if (r.kind == RegimeKind::Null) continue;
        const Hamiltonian h = build_hamiltonian(u);

        const double ang = uniform(rng, 0, 6.28);
        Params v = u;
        v[4] = std::cos(ang) * u[4] - std::sin(ang) * u[5];
        v[5] = std::sin(ang) * u[4] + std::cos(ang) * u[5];
        const Regime r2 = classify(v);
        CHECK(r2.kind == r.kind);
        CHECK(r2.case_label == r.case_label);

        if (r.spectrum_kind != SpectrumKind::Degenerate) {
            const Hamiltonian h2 = build_hamiltonian(v);
            const double a = *orbit_diagnostics(h).rate;
            const double b = *orbit_diagnostics(h2).rate;
            CHECK(std::abs(a - b) <= 1e-10 * (1.0 + a));
        }
    }
}

TEST_CASE("the reported axis is a fixed point of the reduced flow") {
    Rng rng(13);
    for (int n = 0; n < 100; ++n) {
        Params u;
        for (double& v : u) v = uniform(rng, -2, 2);
        const Regime r = classify(u);
        if (r.kind == RegimeKind::Null) continue;
        const Hamiltonian h = build_hamiltonian(u);
        const OrbitDiagnostics d = orbit_diagnostics(h);
        const Vec3 vel = reduced_rhs(u, r, d.axis);
        CHECK(std::abs(vel[0]) + std::abs(vel[1]) + std::abs(vel[2]) < 1e-12);
    }

    // Null boundary: (u1, 0, u3) is fixed under the shear equations.
    const Params u = {0.3, 0.4, 1.0, 0.2, 0.8, 0.6};
    CHECK(classify(u).kind == RegimeKind::Null);
    const Vec3 vel = bloch_rhs_null(u, {u[1], 0.0, u[3]});
    CHECK(std::abs(vel[0]) + std::abs(vel[1]) + std::abs(vel[2]) < 1e-15);
}
