#include "parisian/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parisian/cli_support.hpp"
#include "parisian/hybrid_identities.hpp"

namespace parisian {

namespace {

SimConfig make_config(const ComparisonCase& c, bool with_barrier) {
    SimConfig cfg{c.model};
    cfg.x0 = c.x;
    cfg.grace = c.r;
    cfg.inspection_rate = c.lambda;
    if (with_barrier) cfg.upper_barrier = c.b;
    cfg.horizon = c.horizon;
    cfg.replications = c.n;
    cfg.seed = c.seed;
    cfg.stream_count = c.stream_count;
    cfg.parallel = c.parallel;
    return cfg;
}

}  // namespace

ComparisonRow run_comparison(const ComparisonCase& c, const QuadratureSpec& spec) {
    ComparisonRow row{c};
    MCEstimate mc;

    if (c.identity == "ruin") {
        row.formula = ruin_probability(c.model, c.x, c.r, c.lambda, spec);
        mc = simulate_hybrid(make_config(c, false)).probability;
    } else if (c.identity == "th1") {
        row.formula =
            ruin_before_exit_laplace(c.model, {c.x, c.b, c.r, c.lambda, c.q, 0.0, 0.0}, spec);
        mc = simulate_two_sided(make_config(c, true), c.q).ruin_laplace;
    } else if (c.identity == "th2") {
        row.formula =
            exit_before_ruin_laplace(c.model, {c.x, c.b, c.r, c.lambda, c.q, 0.0, 0.0}, spec);
        mc = simulate_two_sided(make_config(c, true), c.q).exit_laplace;
    } else if (c.identity == "th3") {
        row.formula = ruin_laplace(c.model, {c.x, c.b, c.r, c.lambda, c.q, 0.0, 0.0}, spec);
        mc = simulate_hybrid(make_config(c, false), c.q).laplace;
    } else if (c.identity == "mixed_exit") {
        row.formula = mixed_exit_laplace(c.model, c.p, c.x, c.b, c.r, c.lambda, spec);
        mc = simulate_mixed_exit(make_config(c, true), c.p);
    } else if (c.identity == "poisson_exit") {
        row.formula = poisson_exit_laplace(c.model, c.q, c.x, c.b, c.lambda, spec);
        mc = simulate_T0_functionals(make_config(c, true), c.q, 0.0, 1.0).exit_laplace;
    } else if (c.identity == "classical_parisian") {
        row.formula = classical_parisian_prob(c.model, c.x, c.r, spec);
        mc = simulate_classical_parisian(make_config(c, false));
    } else if (c.identity == "lemma_w") {
        row.formula = lemma_W_at_T0(c.model, c.p, c.q, c.lambda, c.x, c.b, c.z, spec);
        mc = simulate_T0_functionals(make_config(c, true), c.q, c.p, c.z).lemma_w;
    } else if (c.identity == "lemma_lambda") {
        row.formula = lemma_Lambda_at_T0(c.model, c.q, c.lambda, c.x, c.b, c.r, spec).plain;
        mc = simulate_T0_functionals(make_config(c, true), c.q, c.p, 1.0).lemma_lambda_plain;
    } else if (c.identity == "lemma_lambda_q") {
        row.formula = lemma_Lambda_at_T0(c.model, c.q, c.lambda, c.x, c.b, c.r, spec).q_indexed;
        mc = simulate_T0_functionals(make_config(c, true), c.q, c.p, 1.0).lemma_lambda_q;
    } else if (c.identity == "gerber_shiu_mass") {
        if (c.q != 0.0) throw std::invalid_argument("gerber_shiu_mass comparison requires q = 0");
        // Mass of the density over y < 0 against P(T0^- < tau_b).  The exact
        // density decays at the negative-root rate while the evaluated
        // expression's rounding noise grows at the Phi_{q+lambda} rate, so the
        // window ends where the two meet; the truncated tail and the relaxed
        // tolerance both sit orders of magnitude below one MC standard error.
        const ScaleEvaluator zql(c.model, c.q + c.lambda);
        const double grow = zql.phi();
        const double decay = -zql.negative_root();
        const double depth = std::clamp((33.0 - grow * c.x) / (grow + decay), 5.0, 25.0);
        QuadratureSpec mass_spec = spec;
        mass_spec.abs_tol = std::max(spec.abs_tol, 3e-7);
        row.formula = integrate(
            [&](double u) { return gerber_shiu_density(c.model, c.q, c.lambda, c.x, c.b, -u, spec); },
            0.0, depth, mass_spec);
        mc = simulate_T0_functionals(make_config(c, true), c.q, 0.0, 1.0).ruin_mass;
    } else if (c.identity == "classical_exit") {
        row.formula =
            classical_exit_identity(c.model, c.p, c.q, c.a_low, c.x, c.b, c.z, spec);
        mc = simulate_classical_exit(make_config(c, true), c.p, c.q, c.a_low, c.z);
    } else {
        throw std::invalid_argument("unknown identity '" + c.identity + "'");
    }

    row.mc_mean = mc.mean;
    row.mc_se = mc.std_error;
    row.truncated_fraction = mc.truncated_fraction;
    const double diff = std::abs(row.formula - mc.mean);
    row.z_score = mc.std_error > 0.0
                      ? diff / mc.std_error
                      : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    row.pass = diff <= kPassSigmas * mc.std_error || diff == 0.0;
    return row;
}

std::string comparison_csv_header() {
    return csv_line({"identity", "model", "x", "b", "r", "lambda", "q", "p", "z", "a_low", "n",
                     "seed", "formula_value", "mc_mean", "mc_se", "truncated_fraction", "z_score",
                     "pass"});
}

std::string comparison_csv_row(const ComparisonRow& row) {
    const auto& c = row.spec;
    return csv_line({c.identity, c.model.describe(), format_number(c.x), format_number(c.b),
                     format_number(c.r), format_number(c.lambda), format_number(c.q),
                     format_number(c.p), format_number(c.z), format_number(c.a_low),
                     std::to_string(c.n), std::to_string(c.seed), format_number(row.formula),
                     format_number(row.mc_mean), format_number(row.mc_se),
                     format_number(row.truncated_fraction), format_number(row.z_score),
                     row.pass ? "1" : "0"});
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
    std::string out = comparison_csv_header();
    for (const auto& r : rows) out += comparison_csv_row(r);
    return out;
}

}  // namespace parisian
