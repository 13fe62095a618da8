#pragma once

#include <cmath>

#include "parisian/levy_model.hpp"
#include "parisian/quadrature.hpp"

namespace parisian {

// value = mantissa * exp(log_scale); used where e^{Phi_q x} overflows a double.
struct ScaledReal {
    double mantissa = 0.0;
    double log_scale = 0.0;

    double value() const { return mantissa * std::exp(log_scale); }
    double ratio(const ScaledReal& other) const {
        return (mantissa / other.mantissa) * std::exp(log_scale - other.log_scale);
    }
};

// W_q(x) = coef_pos e^{root_pos x} + coef_neg e^{root_neg x} on x >= 0, or
// e^{dr_root x}(dr_lin x + dr_const) when the roots collide.
struct ExpSumRepr {
    bool double_root = false;
    double root_pos = 0.0, root_neg = 0.0;
    double coef_pos = 0.0, coef_neg = 0.0;
    double dr_root = 0.0, dr_lin = 0.0, dr_const = 0.0;
};

// Evaluates W_q, Z_q and Z_q(.,theta) for one (model, q) pair.  Both supported
// models have rational psi_q, so W_q is an explicit two-exponential (plus a
// linear term when the roots collide at q = 0 with zero drift).  Roots are
// cached at construction; evaluation is closed-form.
class ScaleEvaluator {
public:
    ScaleEvaluator(const LevyModel& model, double q);

    const LevyModel& model() const { return model_; }
    double q() const { return q_; }
    double phi() const { return root_pos_; }
    double negative_root() const { return root_neg_; }
    double psi_q(double theta) const { return model_.laplace_exponent(theta) - q_; }

    // W_q(x); 0 for x < 0
    double W(double x) const;
    ScaledReal W_scaled(double x) const;

    // Z_q(x) = 1 + q int_0^x W_q; 1 for x < 0
    double Z(double x) const;

    // Z_q(x, theta); e^{theta x} for x < 0
    double Z_theta(double x, double theta) const;
    ScaledReal Z_theta_scaled(double x, double theta) const;

    ExpSumRepr exponential_sum() const {
        return {double_root_, root_pos_, root_neg_, coef_pos_, coef_neg_,
                dr_root_,     dr_lin_,   dr_const_};
    }

private:
    double Z_theta_mantissa(double x, double theta, double log_shift) const;

    LevyModel model_;
    double q_;
    bool double_root_ = false;
    double root_pos_ = 0.0, root_neg_ = 0.0;
    double coef_pos_ = 0.0, coef_neg_ = 0.0;
    double dr_root_ = 0.0, dr_lin_ = 0.0, dr_const_ = 0.0;
};

// The two-parameter family of Eq-style convolutions of scale functions,
//   scriptW_a^{(p,s)}(x) = W_p(x) + s \int_a^x W_{p+s}(x-y) W_p(y) dy,
// evaluated by adaptive quadrature of that first form.  `base` carries index p
// and `shifted` index p+s.  script_W_alt is the algebraically equal second
// form W_{p+s}(x) - s \int_0^a W_{p+s}(x-y) W_p(y) dy, kept as a cross-check.
double script_W(const ScaleEvaluator& base, const ScaleEvaluator& shifted, double a, double x,
                const QuadratureSpec& spec = {});
double script_W_alt(const ScaleEvaluator& base, const ScaleEvaluator& shifted, double a, double x,
                    const QuadratureSpec& spec = {});

}  // namespace parisian
