#pragma once

#include <cstdint>
#include <utility>
#include <optional>
#include <vector>

#include "parisian/levy_model.hpp"

namespace parisian {

// One Monte Carlo experiment.  Replications are split over stream_count
// independent RNG streams; aggregation is a reduction in stream-index order,
// so results do not depend on thread scheduling and the parallel and serial
// runners produce bit-identical estimates.
struct SimConfig {
    explicit SimConfig(LevyModel m) : model(std::move(m)) {}

    LevyModel model;
    double x0 = 0.0;
    double recovery_barrier = 0.0;  // a
    double grace = 1.0;             // r
    double inspection_rate = 1.0;   // lambda
    std::optional<double> upper_barrier;
    double horizon = 200.0;
    std::int64_t replications = 1'000'000;
    std::uint64_t seed = 1;
    int stream_count = 64;
    bool parallel = true;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t n = 0;
    double truncated_fraction = 0.0;  // paths unresolved at the horizon, never hidden
    std::uint64_t seed = 0;
};

struct Histogram {
    double lo = -12.0;
    double hi = 0.0;
    int bins = 120;
    std::vector<std::int64_t> counts;
    std::int64_t below = 0, above = 0;
    std::int64_t events = 0;
};

struct HybridEstimates {
    MCEstimate probability;  // P(kappa < horizon)
    MCEstimate laplace;      // E[e^{-q(kappa - r)} 1{kappa < horizon}]
};

// Parisian ruin under the hybrid observation scheme: Poisson inspections while
// the last observation was >= a, continuous monitoring with grace r below.
// With upper_barrier set the run stops at tau_b as well.  Optionally collects
// the ruin times of ruined paths (in deterministic stream order).
HybridEstimates simulate_hybrid(const SimConfig& cfg, double q = 0.0,
                                std::vector<double>* ruin_times = nullptr);

struct TwoSidedEstimates {
    MCEstimate exit_probability;  // P(tau_b < kappa)
    MCEstimate exit_laplace;      // E[e^{-q tau_b} 1{tau_b < kappa}]
    MCEstimate ruin_laplace;      // E[e^{-q(kappa - r)} 1{kappa < tau_b}]
};
TwoSidedEstimates simulate_two_sided(const SimConfig& cfg, double q);

struct T0Estimates {
    MCEstimate lemma_w;             // E[e^{-q T0} W_p(X_{T0} + z) 1{T0 < tau_b}]
    MCEstimate lemma_lambda_plain;  // E[e^{-q T0} Lambda(X_{T0}, r) 1{T0 < tau_b}]
    MCEstimate lemma_lambda_q;      // E[e^{-q T0} Lambda^{(q)}(X_{T0}, r) 1{T0 < tau_b}]
    MCEstimate ruin_mass;           // P(T0 < tau_b)
    MCEstimate exit_laplace;        // E[e^{-q tau_b} 1{tau_b < T0}]
    Histogram histogram;            // X_{T0} on {T0 < tau_b}
};
// First Poisson observation below zero against the upper exit (upper_barrier
// required); grace from the config feeds the Lambda functionals.
T0Estimates simulate_T0_functionals(const SimConfig& cfg, double q, double p, double z);

// Classical Parisian ruin (excursion clock only): P(kappa_r < horizon)
MCEstimate simulate_classical_parisian(const SimConfig& cfg);

// E[e^{-p tau_b} 1{tau_b < kappa_r^lambda}] with kappa_r^lambda = T0^- /\ kappa_r
MCEstimate simulate_mixed_exit(const SimConfig& cfg, double p);

// E[e^{-q tau_a^-} W_p(X_{tau_a^-} + z) 1{tau_a^- < tau_b}] under continuous
// monitoring.  Cramer-Lundberg only: Brownian paths creep, so the functional
// degenerates and is covered by a formula-level check instead.
MCEstimate simulate_classical_exit(const SimConfig& cfg, double p, double q, double a_low,
                                   double z);

}  // namespace parisian
