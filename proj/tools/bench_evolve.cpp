// Times the batch evolution kernel in serial and OpenMP mode over an
// ensemble of random Hamiltonians and checks that both produce identical
// summaries.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coqdyn/dynamics.hpp"
#include "coqdyn/sampling.hpp"

using namespace coqdyn;

namespace {

bool identical(const std::vector<EvolveSummary>& a,
               const std::vector<EvolveSummary>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::memcmp(&a[i].final_state, &b[i].final_state,
                        sizeof(StateVector)) != 0)
            return false;
        if (std::memcmp(&a[i].max_abs_drift, &b[i].max_abs_drift,
                        sizeof(InvariantValues)) != 0)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const int n_jobs = argc > 1 ? std::atoi(argv[1]) : 64;
    const double t_max = argc > 2 ? std::atof(argv[2]) : 10.0;

    sampling::Rng rng(2024);
    std::vector<EvolveJob> jobs;
    jobs.reserve(n_jobs);
    for (int i = 0; i < n_jobs; ++i) {
        EvolveJob job;
        job.u = sampling::random_params(
            rng, i % 2 ? RegimeKind::SpaceLike : RegimeKind::TimeLike);
        job.psi0 = sampling::random_unit_state(rng);
        job.t_max = t_max;
        job.dt = kDefaultDt;
        jobs.push_back(job);
    }

    using clock = std::chrono::high_resolution_clock;

    auto t0 = clock::now();
    const auto serial = run_batch(jobs, ExecutionMode::Serial);
    auto t1 = clock::now();
    const auto parallel = run_batch(jobs, ExecutionMode::Parallel);
    auto t2 = clock::now();

    const auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    const double serial_ms = ms(t0, t1);
    const double parallel_ms = ms(t1, t2);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    std::cout << "jobs " << n_jobs << ", t_max " << t_max << ", threads "
              << threads << "\n";
    std::cout << "serial   " << serial_ms << " ms\n";
    std::cout << "parallel " << parallel_ms << " ms\n";
    std::cout << "speedup  " << serial_ms / parallel_ms << "x\n";

    if (!identical(serial, parallel)) {
        std::cout << "MISMATCH: serial and parallel summaries differ\n";
        return 1;
    }
    std::cout << "serial and parallel summaries are bit-identical\n";
    return 0;
}
