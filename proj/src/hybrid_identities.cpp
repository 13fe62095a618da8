#include "parisian/hybrid_identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parisian/scale_functions.hpp"

namespace parisian {

namespace {

double clamp_probability(double v, const char* what) {
    if (v < -1e-6 || v > 1.0 + 1e-6) throw std::runtime_error(std::string(what) + ": value escaped [0,1]");
    return std::clamp(v, 0.0, 1.0);
}

// (e^{s z} - e^{t z}) / (s - t), continuous through s = t
double exp_diff_ratio(double s, double t, double z) {
    const double d = s - t;
    if (std::abs(d) * std::abs(z) < 1e-12) return z * std::exp(t * z);
    return (std::exp(s * z) - std::exp(t * z)) / d;
}

double psi_prefactor(const LevyModel& model, double theta) {
    if (model.is_brownian()) {
        const auto& m = model.as_brownian();
        return 0.5 * m.sigma * m.sigma;
    }
    const auto& m = model.as_cramer_lundberg();
    return m.c / (m.mu + theta);
}

// Theta assembled with e^{(lambda+q) r} folded into the measure integral via
// Lambda^{(q+lambda)}(0, r) = e^{(lambda+q) r}, so that the exponentially
// large leading terms cancel inside the integrand instead of between two
// finished quadratures.  Requires x >= 0 and simple roots on both indices.
double theta_stable(const LevyModel& model, const ScaleEvaluator& zq, const ScaleEvaluator& zql,
                    double x, double r, double lambda, const QuadratureSpec& spec) {
    const auto wq = zq.exponential_sum();
    const auto wql = zql.exponential_sum();
    const double zx = zq.Z_theta(x, zql.phi());
    const std::pair<double, double> terms[2] = {{wq.coef_pos, wq.root_pos},
                                                {wq.coef_neg, wq.root_neg}};
    auto h = [&](double z) {
        // Z_q(x, Phi_{lambda+q}) W_{q+lambda}(z) - lambda (W_{q+lambda} * W_q)(z)
        // with the e^{Phi_{q+lambda} z} components cancelled analytically
        double acc = zx * wql.coef_neg * std::exp(wql.root_neg * z);
        for (const auto& [ci, ti] : terms) {
            const double cx = ci * std::exp(ti * x);
            acc += lambda * wql.coef_pos * cx * std::exp(ti * z) / (wql.root_pos - ti);
            acc -= lambda * wql.coef_neg * cx * exp_diff_ratio(wql.root_neg, ti, z);
        }
        return acc;
    };
    return integrate_against_xr(model, r, h, zq.phi(), 0.0, spec);
}

// The s_tilde denominator with the same folding: the integrand keeps only the
// exactly-cancelled residual, which decays like e^{Phi_q z}.
double s_tilde_denominator(const LevyModel& model, double q, double lambda, double r,
                           const QuadratureSpec& spec) {
    const double phi_q = model.phi(q);
    const ScaleEvaluator zql(model, q + lambda);
    const auto wql = zql.exponential_sum();
    const double s1 = wql.root_pos, s2 = wql.root_neg;
    const double tail_coef =
        wql.coef_neg * (lambda / (s1 - phi_q) + psi_prefactor(model, phi_q) * (s1 - phi_q));
    auto g = [&](double z) { return std::exp(phi_q * z) + tail_coef * std::exp(s2 * z); };
    return integrate_against_xr(model, r, g, phi_q, 0.0, spec);
}

}  // namespace

double S_func(const LevyModel& model, double q, double x, double r, const QuadratureSpec& spec) {
    const ScaleEvaluator zq(model, q);
    return zq.Z(x) + lambda_r(model, q, x, r, spec) -
           lambda_rs(model, {q, r, -q, x}, spec);
}

double theta_func(const LevyModel& model, double q, double x, double r, double lambda,
                  const QuadratureSpec& spec) {
    const ScaleEvaluator zq(model, q);
    const ScaleEvaluator zql(model, q + lambda);
    if (x >= 0.0 && !zq.exponential_sum().double_root)
        return theta_stable(model, zq, zql, x, r, lambda, spec);
    return std::exp((lambda + q) * r) * zq.Z_theta(x, zql.phi()) + lambda_r(model, q, x, r, spec) -
           lambda_rs(model, {q, r, lambda, x}, spec);
}

double s_tilde(const LevyModel& model, double q, double lambda, double r,
               const QuadratureSpec& spec) {
    const double phi_q = model.phi(q);
    double numerator;
    if (q == 0.0 && model.mean() <= 0.0) {
        // Z(z, Phi_0) = e^{Phi_0 z} when psi(Phi_0) = 0, and the q/Phi_q limit vanishes
        numerator = 0.0;
    } else {
        const double head = q > 0.0 ? q / phi_q : model.mean();
        const ScaleEvaluator z0(model, 0.0);
        auto f_num = [&](double z) { return z0.Z_theta(z, phi_q) - std::exp(phi_q * z); };
        numerator = head - integrate_against_xr(model, r, f_num, phi_q, 0.0, spec);
    }

    const double denominator = s_tilde_denominator(model, q, lambda, r, spec);
    if (!(denominator > 0.0)) throw std::runtime_error("s_tilde: nonpositive denominator");
    return numerator / denominator;
}

double ruin_before_exit_laplace(const LevyModel& model, const HybridParams& prm,
                                const QuadratureSpec& spec) {
    if (prm.x > prm.b) throw std::invalid_argument("ruin_before_exit_laplace: requires x <= b");
    const double sx = S_func(model, prm.q, prm.x, prm.r, spec);
    const double sb = S_func(model, prm.q, prm.b, prm.r, spec);
    const double tx = theta_func(model, prm.q, prm.x, prm.r, prm.lambda, spec);
    const double tb = theta_func(model, prm.q, prm.b, prm.r, prm.lambda, spec);
    return prm.lambda / (prm.lambda + prm.q) * (sx - tx * sb / tb);
}

double exit_before_ruin_laplace(const LevyModel& model, const HybridParams& prm,
                                const QuadratureSpec& spec) {
    if (prm.x > prm.b) throw std::invalid_argument("exit_before_ruin_laplace: requires x <= b");
    return theta_func(model, prm.q, prm.x, prm.r, prm.lambda, spec) /
           theta_func(model, prm.q, prm.b, prm.r, prm.lambda, spec);
}

double ruin_laplace(const LevyModel& model, const HybridParams& prm, const QuadratureSpec& spec) {
    const double sx = S_func(model, prm.q, prm.x, prm.r, spec);
    const double tx = theta_func(model, prm.q, prm.x, prm.r, prm.lambda, spec);
    const double st = s_tilde(model, prm.q, prm.lambda, prm.r, spec);
    const double v = prm.lambda / (prm.lambda + prm.q) * (sx - tx * st);
    if (v < -1e-6 || v > std::exp(prm.q * prm.r) + 1e-6)
        throw std::runtime_error("ruin_laplace: value escaped its bound");
    return v;
}

double ruin_probability(const LevyModel& model, double x, double r, double lambda,
                        const QuadratureSpec& spec) {
    const double st = s_tilde(model, 0.0, lambda, r, spec);
    if (st == 0.0) return 1.0;
    const double v = 1.0 - theta_func(model, 0.0, x, r, lambda, spec) * st;
    return clamp_probability(v, "ruin_probability");
}

double classical_parisian_prob(const LevyModel& model, double x, double r,
                               const QuadratureSpec& spec) {
    const double drift = model.mean();
    if (drift <= 0.0) return 1.0;
    auto one = [](double) { return 1.0; };
    const double z_moment = integrate_against_xr(model, r, one, 0.0, 0.0, spec);
    const double v = 1.0 - drift * lambda_r(model, 0.0, x, r, spec) / z_moment;
    return clamp_probability(v, "classical_parisian_prob");
}

double mixed_exit_laplace(const LevyModel& model, double p, double x, double b, double r,
                          double lambda, const QuadratureSpec& spec) {
    if (x > b) throw std::invalid_argument("mixed_exit_laplace: requires x <= b");
    return lambda_rs(model, {p, r, lambda, x}, spec) / lambda_rs(model, {p, r, lambda, b}, spec);
}

double poisson_exit_laplace(const LevyModel& model, double q, double x, double a_bar, double lambda,
                            const QuadratureSpec& spec) {
    (void)spec;
    if (x > a_bar) throw std::invalid_argument("poisson_exit_laplace: requires x <= a");
    const ScaleEvaluator zq(model, q);
    const double phi_lq = model.phi(lambda + q);
    return zq.Z_theta(x, phi_lq) / zq.Z_theta(a_bar, phi_lq);
}

double gerber_shiu_density(const LevyModel& model, double q, double lambda, double x, double a_bar,
                           double y, const QuadratureSpec& spec) {
    if (y > 0.0) throw std::invalid_argument("gerber_shiu_density: requires y <= 0");
    const ScaleEvaluator zq(model, q);
    const ScaleEvaluator zql(model, q + lambda);
    const double phi_lq = model.phi(lambda + q);
    if (std::isinf(a_bar)) {
        const double phi_q = model.phi(q);
        return (phi_lq - phi_q) * zq.Z_theta(x, phi_lq) * zql.Z_theta(-y, phi_q) -
               lambda * script_W(zq, zql, x, x - y, spec);
    }
    if (x > a_bar) throw std::invalid_argument("gerber_shiu_density: requires x <= a");
    const double ratio = zq.Z_theta(x, phi_lq) / zq.Z_theta(a_bar, phi_lq);
    return lambda * (ratio * script_W(zq, zql, a_bar, a_bar - y, spec) -
                     script_W(zq, zql, x, x - y, spec));
}

namespace {

double lemma_W_core(const LevyModel& model, double p, double q, double lambda, double x, double b,
                    double z, const QuadratureSpec& spec) {
    const ScaleEvaluator wq(model, q);
    const ScaleEvaluator wp(model, p);
    const ScaleEvaluator wql(model, q + lambda);
    const double phi_lq = model.phi(lambda + q);
    const double pref = lambda / (p - (q + lambda));
    const double local =
        script_W(wq, wp, x, x + z, spec) - script_W(wq, wql, x, x + z, spec);
    if (std::isinf(b)) {
        const double phi_q = model.phi(q);
        const double head = (phi_lq - phi_q) / (p - (q + lambda)) * wq.Z_theta(x, phi_lq) *
                            (wp.Z_theta(z, phi_q) - wql.Z_theta(z, phi_q));
        return head - pref * local;
    }
    const double ratio = wq.Z_theta(x, phi_lq) / wq.Z_theta(b, phi_lq);
    const double at_b = script_W(wq, wp, b, b + z, spec) - script_W(wq, wql, b, b + z, spec);
    return pref * (ratio * at_b - local);
}

}  // namespace

double lemma_W_at_T0(const LevyModel& model, double p, double q, double lambda, double x, double b,
                     double z, const QuadratureSpec& spec) {
    if (x > b) throw std::invalid_argument("lemma_W_at_T0: requires x <= b");
    if (!(z > 0.0)) throw std::invalid_argument("lemma_W_at_T0: requires z > 0");
    const double gap = p - (q + lambda);
    if (std::abs(gap) < 1e-12) {
        const double eps = 1e-5;
        return 0.5 * (lemma_W_core(model, q + lambda + eps, q, lambda, x, b, z, spec) +
                      lemma_W_core(model, q + lambda - eps, q, lambda, x, b, z, spec));
    }
    return lemma_W_core(model, p, q, lambda, x, b, z, spec);
}

LemmaLambdaValues lemma_Lambda_at_T0(const LevyModel& model, double q, double lambda, double x,
                                     double b, double r, const QuadratureSpec& spec) {
    if (x > b) throw std::invalid_argument("lemma_Lambda_at_T0: requires x <= b");
    const ScaleEvaluator zq(model, q);
    const double phi_lq = model.phi(lambda + q);
    const double ratio = zq.Z_theta(x, phi_lq) / zq.Z_theta(b, phi_lq);

    const double neg_x = lambda_rs(model, {q, r, -q, x}, spec);
    const double neg_b = lambda_rs(model, {q, r, -q, b}, spec);
    const double lam_x = lambda_rs(model, {q, r, lambda, x}, spec);
    const double lam_b = lambda_rs(model, {q, r, lambda, b}, spec);
    const double plain =
        lambda / (lambda + q) * ((neg_x - lam_x) - ratio * (neg_b - lam_b));

    const double zero_x = lambda_r(model, q, x, r, spec);
    const double zero_b = lambda_r(model, q, b, r, spec);
    const double q_indexed = (zero_x - lam_x) - ratio * (zero_b - lam_b);
    return {plain, q_indexed};
}

double classical_exit_identity(const LevyModel& model, double p, double q, double a_low, double x,
                               double b, double z, const QuadratureSpec& spec) {
    if (!(a_low <= x && x <= b)) throw std::invalid_argument("classical_exit_identity: requires a <= x <= b");
    const ScaleEvaluator wp(model, p);
    const ScaleEvaluator wq(model, q);
    const double ratio = wq.W(x - a_low) / wq.W(b - a_low);
    return script_W(wp, wq, a_low + z, x + z, spec) -
           ratio * script_W(wp, wq, a_low + z, b + z, spec);
}

}  // namespace parisian
