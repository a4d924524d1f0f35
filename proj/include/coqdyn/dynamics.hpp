#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "coqdyn/classify.hpp"
#include "coqdyn/matrix2.hpp"

namespace coqdyn {

using Vec3 = std::array<double, 3>;
using Vec5 = std::array<double, 5>;

/// Two-component state with coquaternionic amplitudes. The indefinite norm
/// <psi|psi> = mod2(psi1) + mod2(psi2) is the conserved quantity of the
/// evolution; it may be negative or zero for general amplitudes.
struct StateVector {
    Coq psi1{}, psi2{};

    double norm() const { return mod2(psi1) + mod2(psi2); }
};

/// <psi|phi> = conj(psi1) phi1 + conj(psi2) phi2.
Coq inner(const StateVector& psi, const StateVector& phi);

/// <psi|M|psi>, a coquaternion; real for Hermitian M.
Coq expectation(const CoqMatrix2& m, const StateVector& psi);

/// Five expectation values sigma_l = <psi|sigma_l|psi> / <psi|psi>.
/// Throws NullState when |<psi|psi>| is below the null tolerance and
/// ImaginaryResidue if any expectation fails to be real.
Vec5 sigma_from_state(const StateVector& psi);

/// Reduced spin variables (sigma_1, (u2 s2 + u4 s4 + u5 s5)/nu, sigma_3).
Vec3 reduced_from_sigma(const Params& u, double nu, const Vec5& s);

/// Auxiliary triple (u4 s5 - u5 s4, u5 s2 + u2 s5, u2 s4 + u4 s2).
Vec3 aux_from_sigma(const Params& u, const Vec5& s);

struct BlochState {
    Vec5 sigma{};
    Vec3 reduced{};
    Vec3 aux{};
};

BlochState bloch_from_state(const Hamiltonian& h, const StateVector& psi);
BlochState bloch_from_sigma(const Hamiltonian& h, const Vec5& sigma);

/// The conserved quadratics along a trajectory. `norm` is the state norm
/// (NaN for runs that never had a state vector); `state` is the
/// hyperbolic state-space quantity s1^2+s2^2+s3^2-s4^2-s5^2; `reduced` is
/// the sphere (time-like) or hyperboloid (space-like/null) quantity of the
/// reduced triple; `cylinder` and `aux` are the quadratics of the hidden
/// variables (s2, s4, s5).
struct InvariantValues {
    double norm{};
    double state{};
    double reduced{};
    double cylinder{};
    double aux{};
};

InvariantValues invariant_report(const Hamiltonian& h, const BlochState& b);

/// State-vector derivative -i H |psi>.
StateVector schrodinger_rhs(const Hamiltonian& h, const StateVector& psi);

/// Analytic d/dt <psi|psi> given the derivative; vanishes on solutions.
double norm_derivative(const StateVector& psi, const StateVector& dpsi);

// Five-variable Bloch equations. Each checks the regime of u and throws
// RegimeMismatch when it does not apply.
Vec5 bloch_rhs_timelike(const Params& u, const Vec5& sigma);
Vec5 bloch_rhs_spacelike(const Params& u, const Vec5& sigma);

/// Reduced equations on the null boundary u2^2 = u4^2 + u5^2.
Vec3 bloch_rhs_null(const Params& u, const Vec3& reduced);

/// Reduced three-variable equations: a rigid rotation 2 B x sigma with
/// B = (u1, nu, u3) in the time-like regime, the hyperbolic counterpart in
/// the space-like regime.
Vec3 reduced_rhs(const Params& u, const Regime& regime, const Vec3& reduced);

/// Auxiliary-triple equations; the whole right side is proportional to u0.
Vec3 auxiliary_rhs(const Params& u, const Vec3& aux);

struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states; // empty for Bloch-level runs
    std::vector<BlochState> bloch;
    std::vector<InvariantValues> invariants;
    bool step_warning = false; // dt too coarse for the orbit rate

    InvariantValues drift_at(std::size_t k) const;
    InvariantValues max_abs_drift() const;
};

inline constexpr double kDefaultDt = 1e-3;

/// Fixed-step fourth-order integration of the state-vector equation,
/// recording Bloch observables and invariants at every step. The step
/// warning is set when dt * orbit rate > 0.1.
Trajectory evolve_state(const Hamiltonian& h, const StateVector& psi0,
                        double t_max, double dt = kDefaultDt);

/// Direct integration of the five-variable Bloch system. sigma0 must lie
/// on the state space (quadratic = 1 within 1e-9); throws ConfigError
/// otherwise and NullGenerator in the null regime.
Trajectory evolve_bloch(const Hamiltonian& h, const Vec5& sigma0,
                        double t_max, double dt = kDefaultDt);

struct ReducedTrajectory {
    std::vector<double> times;
    std::vector<Vec3> points;
    bool step_warning = false;
};

/// Integrates the reduced three-variable flow; in the null regime this is
/// the only available dynamics.
ReducedTrajectory evolve_reduced(const Hamiltonian& h, const Vec3& reduced0,
                                 double t_max, double dt = kDefaultDt);

// ---------------------------------------------------------------------------
// Batch evolution. Trajectories for distinct parameter points are
// independent, so the batch kernel runs them across threads; the serial
// mode is the reference implementation and must produce bit-identical
// summaries.

struct EvolveJob {
    Params u{};
    StateVector psi0{};
    double t_max{};
    double dt = kDefaultDt;
};

struct EvolveSummary {
    StateVector final_state{};
    BlochState final_bloch{};
    InvariantValues max_abs_drift{};
    bool step_warning = false;
};

enum class ExecutionMode { Serial, Parallel };

/// Evolves each job and keeps only its summary (final state plus worst
/// invariant drift). Jobs are validated before the loop starts.
std::vector<EvolveSummary> run_batch(std::span<const EvolveJob> jobs,
                                     ExecutionMode mode);

EvolveSummary evolve_summary(const Hamiltonian& h, const StateVector& psi0,
                             double t_max, double dt = kDefaultDt);

} // namespace coqdyn
