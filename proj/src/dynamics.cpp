#include "coqdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coqdyn {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::array<CoqMatrix2, 5>& pauli_matrices() {
    static const std::array<CoqMatrix2, 5> p = {pauli(1), pauli(2), pauli(3),
                                                pauli(4), pauli(5)};
    return p;
}

StateVector apply(const CoqMatrix2& m, const StateVector& v) {
    return {m.a11 * v.psi1 + m.a12 * v.psi2, m.a21 * v.psi1 + m.a22 * v.psi2};
}

double state_scale2(const StateVector& psi) {
    return norm2_euclidean(psi.psi1) + norm2_euclidean(psi.psi2);
}

double state_quadratic(const Vec5& s) {
    return s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - s[3] * s[3] - s[4] * s[4];
}

// --- RHS kernels (regime checks live in the public wrappers) ---

Vec5 bloch5_kernel(const Params& u, double nu, double sflip, const Vec5& s) {
    const double m = u[2] * s[1] + u[4] * s[3] + u[5] * s[4];
    return {2.0 * (sflip * nu * s[2] - u[3] / nu * m),
            2.0 / nu *
                (u[2] * u[3] * s[0] - u[1] * u[2] * s[2] + u[0] * u[5] * s[3] -
                 u[0] * u[4] * s[4]),
            2.0 * (-sflip * nu * s[0] + u[1] / nu * m),
            2.0 / nu *
                (-u[3] * u[4] * s[0] + u[0] * u[5] * s[1] +
                 u[1] * u[4] * s[2] + u[0] * u[2] * s[4]),
            2.0 / nu *
                (-u[3] * u[5] * s[0] - u[0] * u[4] * s[1] +
                 u[1] * u[5] * s[2] - u[0] * u[2] * s[3])};
}

Vec3 reduced_timelike_kernel(const Params& u, double nu, const Vec3& r) {
    return {2.0 * (nu * r[2] - u[3] * r[1]), 2.0 * (u[3] * r[0] - u[1] * r[2]),
            2.0 * (u[1] * r[1] - nu * r[0])};
}

Vec3 reduced_spacelike_kernel(const Params& u, double nu, const Vec3& r) {
    return {2.0 * (-nu * r[2] - u[3] * r[1]),
            2.0 * (-u[3] * r[0] + u[1] * r[2]),
            2.0 * (u[1] * r[1] + nu * r[0])};
}

Vec3 reduced_null_kernel(const Params& u, const Vec3& r) {
    return {-2.0 * u[3] * r[1], 2.0 * (-u[3] * r[0] + u[1] * r[2]),
            2.0 * u[1] * r[1]};
}

Vec3 aux_kernel(const Params& u, double nu, const Vec3& y) {
    const double c = -2.0 * u[0] / nu;
    return {c * (u[5] * y[1] + u[4] * y[2]), c * (u[2] * y[2] + u[5] * y[0]),
            c * (u[4] * y[0] - u[2] * y[1])};
}

template <std::size_t N>
std::array<double, N> axpy(const std::array<double, N>& y, double a,
                           const std::array<double, N>& k) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = y[i] + a * k[i];
    return r;
}

// Classical four-stage, order-4 one-step method.
template <std::size_t N, typename F>
std::array<double, N> rk4_step(F&& f, const std::array<double, N>& y,
                               double h) {
    const auto k1 = f(y);
    const auto k2 = f(axpy(y, 0.5 * h, k1));
    const auto k3 = f(axpy(y, 0.5 * h, k2));
    const auto k4 = f(axpy(y, h, k3));
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i)
        r[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return r;
}

// Fixed steps of size dt, plus one shorter step to land on t_max exactly.
// Calls sample(t, y) at t = 0 and after every step.
template <std::size_t N, typename F, typename S>
void integrate(F&& rhs, std::array<double, N> y, double t_max, double dt,
               S&& sample) {
    sample(0.0, y);
    const auto n_full =
        static_cast<std::size_t>(std::floor(t_max / dt * (1.0 + 1e-12)));
    for (std::size_t k = 1; k <= n_full; ++k) {
        y = rk4_step(rhs, y, dt);
        sample(static_cast<double>(k) * dt, y);
    }
    const double rem = t_max - static_cast<double>(n_full) * dt;
    if (rem > 1e-12 * dt) {
        y = rk4_step(rhs, y, rem);
        sample(t_max, y);
    }
}

std::array<double, 8> to_array(const StateVector& s) {
    return {s.psi1.q0, s.psi1.q1, s.psi1.q2, s.psi1.q3,
            s.psi2.q0, s.psi2.q1, s.psi2.q2, s.psi2.q3};
}

StateVector from_array(const std::array<double, 8>& y) {
    return {{y[0], y[1], y[2], y[3]}, {y[4], y[5], y[6], y[7]}};
}

void check_grid(double t_max, double dt) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(t_max >= 0.0)) throw ConfigError("t_max must be nonnegative");
}

bool too_coarse(const Hamiltonian& h, double dt) {
    const auto diag = orbit_diagnostics(h);
    return diag.rate && dt * *diag.rate > 0.1;
}

} // namespace

Coq inner(const StateVector& psi, const StateVector& phi) {
    return conj(psi.psi1) * phi.psi1 + conj(psi.psi2) * phi.psi2;
}

Coq expectation(const CoqMatrix2& m, const StateVector& psi) {
    return inner(psi, apply(m, psi));
}

Vec5 sigma_from_state(const StateVector& psi) {
    const double n = psi.norm();
    const double scale = 1.0 + state_scale2(psi);
    if (std::abs(n) <= 1e-12 * scale)
        throw NullState("state has null norm, Bloch vector undefined");
    Vec5 s{};
    for (int l = 0; l < 5; ++l) {
        const Coq e = expectation(pauli_matrices()[l], psi);
        const double residue =
            std::abs(e.q1) + std::abs(e.q2) + std::abs(e.q3);
        if (residue > 1e-12 * scale)
            throw ImaginaryResidue("Pauli expectation has a non-real part");
        s[l] = e.q0 / n;
    }
    return s;
}

Vec3 reduced_from_sigma(const Params& u, double nu, const Vec5& s) {
    return {s[0], (u[2] * s[1] + u[4] * s[3] + u[5] * s[4]) / nu, s[2]};
}

Vec3 aux_from_sigma(const Params& u, const Vec5& s) {
    return {u[4] * s[4] - u[5] * s[3], u[5] * s[1] + u[2] * s[4],
            u[2] * s[3] + u[4] * s[1]};
}

BlochState bloch_from_sigma(const Hamiltonian& h, const Vec5& sigma) {
    if (h.regime.kind == RegimeKind::Null)
        throw NullGenerator("reduced variables undefined in the null regime");
    return {sigma, reduced_from_sigma(h.u, h.nu, sigma),
            aux_from_sigma(h.u, sigma)};
}

BlochState bloch_from_state(const Hamiltonian& h, const StateVector& psi) {
    return bloch_from_sigma(h, sigma_from_state(psi));
}

InvariantValues invariant_report(const Hamiltonian& h, const BlochState& b) {
    InvariantValues v;
    v.norm = kNaN;
    v.state = state_quadratic(b.sigma);
    const Vec3& r = b.reduced;
    const Vec3& y = b.aux;
    v.aux = -y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
    switch (h.regime.kind) {
    case RegimeKind::TimeLike:
        v.reduced = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        v.cylinder = y[0] * y[0] - y[1] * y[1] - y[2] * y[2];
        break;
    case RegimeKind::SpaceLike:
        v.reduced = r[0] * r[0] - r[1] * r[1] + r[2] * r[2];
        v.cylinder = -y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
        break;
    case RegimeKind::Null:
        v.reduced = r[0] * r[0] - r[1] * r[1] + r[2] * r[2];
        v.cylinder = kNaN;
        break;
    }
    return v;
}

StateVector schrodinger_rhs(const Hamiltonian& h, const StateVector& psi) {
    const StateVector ap = apply(generator(h), psi);
    return {-ap.psi1, -ap.psi2};
}

double norm_derivative(const StateVector& psi, const StateVector& dpsi) {
    return 2.0 * scalar(inner(psi, dpsi));
}

Vec5 bloch_rhs_timelike(const Params& u, const Vec5& sigma) {
    if (classify(u).kind != RegimeKind::TimeLike)
        throw RegimeMismatch("parameters are not time-like");
    return bloch5_kernel(u, nu_of(u), 1.0, sigma);
}

Vec5 bloch_rhs_spacelike(const Params& u, const Vec5& sigma) {
    if (classify(u).kind != RegimeKind::SpaceLike)
        throw RegimeMismatch("parameters are not space-like");
    return bloch5_kernel(u, nu_of(u), -1.0, sigma);
}

Vec3 bloch_rhs_null(const Params& u, const Vec3& reduced) {
    if (classify(u).kind != RegimeKind::Null)
        throw RegimeMismatch("parameters are not on the null boundary");
    return reduced_null_kernel(u, reduced);
}

Vec3 reduced_rhs(const Params& u, const Regime& regime, const Vec3& reduced) {
    if (classify(u).kind != regime.kind)
        throw RegimeMismatch("regime does not match the parameters");
    switch (regime.kind) {
    case RegimeKind::TimeLike:
        return reduced_timelike_kernel(u, nu_of(u), reduced);
    case RegimeKind::SpaceLike:
        return reduced_spacelike_kernel(u, nu_of(u), reduced);
    default:
        throw RegimeMismatch("reduced_rhs needs a non-null regime");
    }
}

Vec3 auxiliary_rhs(const Params& u, const Vec3& aux) {
    const Regime r = classify(u);
    if (r.kind == RegimeKind::Null)
        throw RegimeMismatch("auxiliary_rhs needs a non-null regime");
    return aux_kernel(u, nu_of(u), aux);
}

InvariantValues Trajectory::drift_at(std::size_t k) const {
    const InvariantValues& a = invariants.at(k);
    const InvariantValues& b = invariants.front();
    return {a.norm - b.norm, a.state - b.state, a.reduced - b.reduced,
            a.cylinder - b.cylinder, a.aux - b.aux};
}

namespace {
void fold_max(InvariantValues& acc, const InvariantValues& d) {
    auto upd = [](double& m, double v) {
        if (!std::isnan(v)) m = std::max(m, std::abs(v));
    };
    upd(acc.norm, d.norm);
    upd(acc.state, d.state);
    upd(acc.reduced, d.reduced);
    upd(acc.cylinder, d.cylinder);
    upd(acc.aux, d.aux);
}
} // namespace

InvariantValues Trajectory::max_abs_drift() const {
    InvariantValues m{};
    for (std::size_t k = 0; k < invariants.size(); ++k)
        fold_max(m, drift_at(k));
    return m;
}

Trajectory evolve_state(const Hamiltonian& h, const StateVector& psi0,
                        double t_max, double dt) {
    check_grid(t_max, dt);
    const CoqMatrix2 a = generator(h);
    auto rhs = [&a](const std::array<double, 8>& y) {
        const StateVector ap = apply(a, from_array(y));
        return to_array({-ap.psi1, -ap.psi2});
    };

    Trajectory traj;
    traj.step_warning = too_coarse(h, dt);
    integrate(rhs, to_array(psi0), t_max, dt,
              [&](double t, const std::array<double, 8>& y) {
                  const StateVector s = from_array(y);
                  const BlochState b = bloch_from_state(h, s);
                  InvariantValues v = invariant_report(h, b);
                  v.norm = s.norm();
                  traj.times.push_back(t);
                  traj.states.push_back(s);
                  traj.bloch.push_back(b);
                  traj.invariants.push_back(v);
              });
    return traj;
}

Trajectory evolve_bloch(const Hamiltonian& h, const Vec5& sigma0, double t_max,
                        double dt) {
    check_grid(t_max, dt);
    if (std::abs(state_quadratic(sigma0) - 1.0) > 1e-9)
        throw ConfigError("initial Bloch point is not on the state space");

    double sflip;
    switch (h.regime.kind) {
    case RegimeKind::TimeLike: sflip = 1.0; break;
    case RegimeKind::SpaceLike: sflip = -1.0; break;
    default:
        throw NullGenerator("no five-variable dynamics in the null regime");
    }
    const Params u = h.u;
    const double nu = h.nu;
    auto rhs = [&](const Vec5& s) { return bloch5_kernel(u, nu, sflip, s); };

    Trajectory traj;
    traj.step_warning = too_coarse(h, dt);
    integrate(rhs, sigma0, t_max, dt, [&](double t, const Vec5& s) {
        const BlochState b = bloch_from_sigma(h, s);
        traj.times.push_back(t);
        traj.bloch.push_back(b);
        traj.invariants.push_back(invariant_report(h, b));
    });
    return traj;
}

ReducedTrajectory evolve_reduced(const Hamiltonian& h, const Vec3& reduced0,
                                 double t_max, double dt) {
    check_grid(t_max, dt);
    const Params u = h.u;
    const double nu = h.nu;
    auto rhs = [&](const Vec3& r) -> Vec3 {
        switch (h.regime.kind) {
        case RegimeKind::TimeLike: return reduced_timelike_kernel(u, nu, r);
        case RegimeKind::SpaceLike: return reduced_spacelike_kernel(u, nu, r);
        default: return reduced_null_kernel(u, r);
        }
    };

    ReducedTrajectory traj;
    traj.step_warning = too_coarse(h, dt);
    integrate(rhs, reduced0, t_max, dt, [&](double t, const Vec3& r) {
        traj.times.push_back(t);
        traj.points.push_back(r);
    });
    return traj;
}

EvolveSummary evolve_summary(const Hamiltonian& h, const StateVector& psi0,
                             double t_max, double dt) {
    check_grid(t_max, dt);
    const CoqMatrix2 a = generator(h);
    auto rhs = [&a](const std::array<double, 8>& y) {
        const StateVector ap = apply(a, from_array(y));
        return to_array({-ap.psi1, -ap.psi2});
    };

    EvolveSummary out;
    out.step_warning = too_coarse(h, dt);
    bool have_first = false;
    InvariantValues first{};
    integrate(rhs, to_array(psi0), t_max, dt,
              [&](double, const std::array<double, 8>& y) {
                  const StateVector s = from_array(y);
                  const BlochState b = bloch_from_state(h, s);
                  InvariantValues v = invariant_report(h, b);
                  v.norm = s.norm();
                  if (!have_first) {
                      first = v;
                      have_first = true;
                  }
                  fold_max(out.max_abs_drift,
                           {v.norm - first.norm, v.state - first.state,
                            v.reduced - first.reduced,
                            v.cylinder - first.cylinder, v.aux - first.aux});
                  out.final_state = s;
                  out.final_bloch = b;
              });
    return out;
}

std::vector<EvolveSummary> run_batch(std::span<const EvolveJob> jobs,
                                     ExecutionMode mode) {
    // Validate up front so the worker loop cannot throw for bad inputs.
    std::vector<Hamiltonian> hs;
    hs.reserve(jobs.size());
    for (const EvolveJob& job : jobs) {
        hs.push_back(build_hamiltonian(job.u));
        check_grid(job.t_max, job.dt);
        sigma_from_state(job.psi0); // rejects null states
    }

    std::vector<EvolveSummary> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());

    if (mode == ExecutionMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                out[i] = evolve_summary(hs[i], jobs[i].psi0, jobs[i].t_max,
                                        jobs[i].dt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                out[i] = evolve_summary(hs[i], jobs[i].psi0, jobs[i].t_max,
                                        jobs[i].dt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace coqdyn
