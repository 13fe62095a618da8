#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parisian/levy_model.hpp"
#include "parisian/quadrature.hpp"
#include "parisian/simulator.hpp"

namespace parisian {

// One formula-vs-Monte-Carlo cell.  `identity` selects what is evaluated on
// both sides; unused parameters are ignored by the given identity.
struct ComparisonCase {
    std::string identity;  // ruin | th1 | th2 | th3 | mixed_exit | poisson_exit |
                           // classical_parisian | lemma_w | lemma_lambda |
                           // lemma_lambda_q | gerber_shiu_mass | classical_exit
    LevyModel model;
    double x = 0.0;
    double b = 0.0;  // upper barrier / a_bar; ignored where not applicable
    double r = 1.0;
    double lambda = 1.0;
    double q = 0.0;
    double p = 0.0;
    double z = 0.0;
    double a_low = 0.0;
    std::int64_t n = 1'000'000;
    std::uint64_t seed = 1;
    int stream_count = 64;
    double horizon = 200.0;
    bool parallel = true;
};

struct ComparisonRow {
    ComparisonCase spec;
    double formula = 0.0;
    double mc_mean = 0.0;
    double mc_se = 0.0;
    double truncated_fraction = 0.0;
    double z_score = 0.0;
    bool pass = false;
};

// Two-sided 99.9% gate: |formula - mc| <= 3.29 se (exact match required when se = 0).
inline constexpr double kPassSigmas = 3.29;

ComparisonRow run_comparison(const ComparisonCase& c, const QuadratureSpec& spec = {});

// Stable CSV: fixed header, 12 significant digits, '.' decimal point.
std::string comparison_csv_header();
std::string comparison_csv_row(const ComparisonRow& row);
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

}  // namespace parisian
