#include "parisian/scale_functions.hpp"

#include <stdexcept>

namespace parisian {

ScaleEvaluator::ScaleEvaluator(const LevyModel& model, double q) : model_(model), q_(q) {
    if (q < 0.0) throw std::invalid_argument("ScaleEvaluator: q must be >= 0");

    if (q == 0.0 && model.mean() == 0.0) {
        // psi_q has a double root at the origin.
        double_root_ = true;
        dr_root_ = 0.0;
        if (model.is_brownian()) {
            const auto& m = model.as_brownian();
            dr_lin_ = 2.0 / (m.sigma * m.sigma);  // W(x) = 2x / sigma^2
            dr_const_ = 0.0;
        } else {
            const auto& m = model.as_cramer_lundberg();
            dr_lin_ = m.mu / m.c;  // W(x) = (mu x + 1) / c
            dr_const_ = 1.0 / m.c;
        }
        return;
    }

    root_pos_ = model.phi(q);
    if (model.is_brownian()) {
        const auto& m = model.as_brownian();
        const double s2 = m.sigma * m.sigma;
        root_neg_ = -2.0 * m.c / s2 - root_pos_;  // root sum of theta^2 s2/2 + c theta - q
        const double spread = 0.5 * s2 * (root_pos_ - root_neg_);
        coef_pos_ = 1.0 / spread;
        coef_neg_ = -1.0 / spread;
    } else {
        const auto& m = model.as_cramer_lundberg();
        // roots of c theta^2 + (c mu - eta - q) theta - q mu
        root_neg_ = (m.eta + q) / m.c - m.mu - root_pos_;
        const double spread = m.c * (root_pos_ - root_neg_);
        coef_pos_ = (m.mu + root_pos_) / spread;
        coef_neg_ = -(m.mu + root_neg_) / spread;
    }
}

double ScaleEvaluator::W(double x) const {
    if (x < 0.0) return 0.0;
    if (double_root_) return std::exp(dr_root_ * x) * (dr_lin_ * x + dr_const_);
    return coef_pos_ * std::exp(root_pos_ * x) + coef_neg_ * std::exp(root_neg_ * x);
}

ScaledReal ScaleEvaluator::W_scaled(double x) const {
    if (x < 0.0) return {0.0, 0.0};
    if (double_root_) return {dr_lin_ * x + dr_const_, dr_root_ * x};
    // root_neg_ < root_pos_, so the second exponential is damped for x >= 0
    return {coef_pos_ + coef_neg_ * std::exp((root_neg_ - root_pos_) * x), root_pos_ * x};
}

double ScaleEvaluator::Z(double x) const {
    if (x < 0.0 || q_ == 0.0) return 1.0;
    return Z_theta(x, 0.0);
}

// Z_q(x, theta) carries no e^{theta x} component on x >= 0: the partial
// fractions behind W_q cancel it identically, leaving a combination of the
// roots of psi_q.  Evaluating that combination directly (with psi_q kept in
// factored form) is exact at theta = Phi_q and immune to the catastrophic
// cancellation the e^{theta x}(1 - psi_q integral) form suffers for large theta x.
double ScaleEvaluator::Z_theta_mantissa(double x, double theta, double log_shift) const {
    // psi_q(theta) = kappa(theta) (theta - root_pos)(theta - root_neg), and for
    // the collided case kappa(theta) (theta - rho)^2
    double kappa;
    if (model_.is_brownian()) {
        const auto& m = model_.as_brownian();
        kappa = 0.5 * m.sigma * m.sigma;
    } else {
        const auto& m = model_.as_cramer_lundberg();
        kappa = m.c / (m.mu + theta);
    }
    if (double_root_) {
        return kappa * std::exp(dr_root_ * x - log_shift) *
               ((theta - dr_root_) * (dr_lin_ * x + dr_const_) + dr_lin_);
    }
    return kappa * (coef_pos_ * (theta - root_neg_) * std::exp(root_pos_ * x - log_shift) +
                    coef_neg_ * (theta - root_pos_) * std::exp(root_neg_ * x - log_shift));
}

double ScaleEvaluator::Z_theta(double x, double theta) const {
    if (theta < 0.0) throw std::invalid_argument("Z_theta: theta must be >= 0");
    if (x < 0.0) return std::exp(theta * x);
    return Z_theta_mantissa(x, theta, 0.0);
}

ScaledReal ScaleEvaluator::Z_theta_scaled(double x, double theta) const {
    if (x < 0.0) return {1.0, theta * x};
    const double L = (double_root_ ? dr_root_ : root_pos_) * x;
    return {Z_theta_mantissa(x, theta, L), L};
}

double script_W(const ScaleEvaluator& base, const ScaleEvaluator& shifted, double a, double x,
                const QuadratureSpec& spec) {
    const double s = shifted.q() - base.q();
    if (s == 0.0) return base.W(x);
    const double lo = std::max(a, 0.0);
    if (x <= lo) return base.W(x);  // empty or sign-reversed range: integrand vanishes
    const double conv =
        integrate([&](double y) { return shifted.W(x - y) * base.W(y); }, lo, x, spec);
    return base.W(x) + s * conv;
}

double script_W_alt(const ScaleEvaluator& base, const ScaleEvaluator& shifted, double a, double x,
                    const QuadratureSpec& spec) {
    const double s = shifted.q() - base.q();
    if (s == 0.0) return base.W(x);
    const double hi = std::min(a, x);
    if (hi <= 0.0) return shifted.W(x);
    const double conv =
        integrate([&](double y) { return shifted.W(x - y) * base.W(y); }, 0.0, hi, spec);
    return shifted.W(x) - s * conv;
}

}  // namespace parisian
