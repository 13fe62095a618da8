// Times the OpenMP stream runner against the serial reference on a
// representative hybrid-ruin workload and checks they agree bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "parisian/simulator.hpp"

using namespace parisian;
using clock_type = std::chrono::steady_clock;

namespace {

double run_once(SimConfig cfg, bool parallel, HybridEstimates& out) {
    cfg.parallel = parallel;
    const auto t0 = clock_type::now();
    out = simulate_hybrid(cfg, 0.5);
    const auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t n = 400000;
    if (argc > 1) n = std::strtoll(argv[1], nullptr, 10);

    SimConfig cfg{LevyModel::brownian(1.0, 1.0)};
    cfg.x0 = 0.0;
    cfg.grace = 1.0;
    cfg.inspection_rate = 1.0;
    cfg.replications = n;
    cfg.seed = 42;
    cfg.stream_count = 64;

    HybridEstimates serial, parallel;
    const double ts = run_once(cfg, false, serial);
    const double tp = run_once(cfg, true, parallel);

    const bool identical = serial.probability.mean == parallel.probability.mean &&
                           serial.laplace.mean == parallel.laplace.mean &&
                           serial.probability.std_error == parallel.probability.std_error;

    std::printf("paths                 %lld\n", static_cast<long long>(n));
    std::printf("estimate              %.9f (se %.2e)\n", parallel.probability.mean,
                parallel.probability.std_error);
    std::printf("serial                %8.3f s   %10.0f paths/s\n", ts, n / ts);
    std::printf("openmp                %8.3f s   %10.0f paths/s\n", tp, n / tp);
    std::printf("speedup               %8.2fx\n", ts / tp);
    std::printf("bit-identical         %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
