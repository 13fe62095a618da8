#pragma once

#include <utility>

#include "parisian/delayed_scale.hpp"
#include "parisian/levy_model.hpp"
#include "parisian/quadrature.hpp"

namespace parisian {

// Parameter bundle for the hybrid-observation identities: initial surplus x,
// upper barrier b, grace delay r, Poisson inspection rate lambda, Laplace
// argument q, auxiliary discount p, recovery barrier a (closed forms need a=0).
struct HybridParams {
    double x = 0.0;
    double b = 1.0;
    double r = 1.0;
    double lambda = 1.0;
    double q = 0.0;
    double p = 0.0;
    double a = 0.0;
};

// S^{(q)}(x, r) = Z_q(x) + Lambda^{(q)}(x, r) - Lambda^{(q)}(x; r, -q)
double S_func(const LevyModel& model, double q, double x, double r, const QuadratureSpec& spec = {});

// Theta^{(q)}(x; r, lambda) = e^{(lambda+q) r} Z_q(x, Phi_{lambda+q})
//                             + Lambda^{(q)}(x, r) - Lambda^{(q)}(x; r, lambda)
double theta_func(const LevyModel& model, double q, double x, double r, double lambda,
                  const QuadratureSpec& spec = {});

// The b -> infinity limit of the quotient S over Theta; at q = 0 the
// numerator reduces to (E[X_1])_+.
double s_tilde(const LevyModel& model, double q, double lambda, double r,
               const QuadratureSpec& spec = {});

// E_x[e^{-q(kappa-r)} 1{kappa < tau_b^+}]
double ruin_before_exit_laplace(const LevyModel& model, const HybridParams& prm,
                                const QuadratureSpec& spec = {});

// E_x[e^{-q tau_b^+} 1{tau_b^+ < kappa}]
double exit_before_ruin_laplace(const LevyModel& model, const HybridParams& prm,
                                const QuadratureSpec& spec = {});

// E_x[e^{-q(kappa-r)} 1{kappa < infinity}]
double ruin_laplace(const LevyModel& model, const HybridParams& prm,
                    const QuadratureSpec& spec = {});

// P_x(kappa < infinity) = 1 - Theta(x; r, lambda) * s_tilde(0, lambda, r);
// exactly 1 when psi'(0+) <= 0
double ruin_probability(const LevyModel& model, double x, double r, double lambda,
                        const QuadratureSpec& spec = {});

// Parisian ruin under continuous observation (excursion clock only)
double classical_parisian_prob(const LevyModel& model, double x, double r,
                               const QuadratureSpec& spec = {});

// E_x[e^{-p tau_b^+} 1{tau_b^+ < kappa_r^lambda}] = Lambda^{(p)}(x;r,lambda)/Lambda^{(p)}(b;r,lambda)
double mixed_exit_laplace(const LevyModel& model, double p, double x, double b, double r,
                          double lambda, const QuadratureSpec& spec = {});

// E_x[e^{-q tau_a^+}, tau_a^+ < T_0^-] = Z_q(x, Phi_{lambda+q}) / Z_q(a, Phi_{lambda+q})
double poisson_exit_laplace(const LevyModel& model, double q, double x, double a_bar, double lambda,
                            const QuadratureSpec& spec = {});

// density in y <= 0 of E_x[e^{-q T_0^-}, X_{T_0^-} in dy, T_0^- < tau_a^+];
// pass a_bar = infinity for the unbounded variant
double gerber_shiu_density(const LevyModel& model, double q, double lambda, double x, double a_bar,
                           double y, const QuadratureSpec& spec = {});

// E_x[e^{-q T_0^-} W_p(X_{T_0^-} + z) 1{T_0^- < tau_b^+}]; b = infinity supported.
// The prefactor lambda/(p-(q+lambda)) has a removable singularity at
// p = q + lambda, evaluated by averaging p = q + lambda +/- 1e-5.
double lemma_W_at_T0(const LevyModel& model, double p, double q, double lambda, double x, double b,
                     double z, const QuadratureSpec& spec = {});

struct LemmaLambdaValues {
    double plain;      // E_x[e^{-q T_0^-} Lambda(X_{T_0^-}, r) 1{T_0^- < tau_b^+}]
    double q_indexed;  // E_x[e^{-q T_0^-} Lambda^{(q)}(X_{T_0^-}, r) 1{T_0^- < tau_b^+}]
};
LemmaLambdaValues lemma_Lambda_at_T0(const LevyModel& model, double q, double lambda, double x,
                                     double b, double r, const QuadratureSpec& spec = {});

// E_x[e^{-q tau_a^-} W_p(X_{tau_a^-} + z) 1{tau_a^- < tau_b^+}]
double classical_exit_identity(const LevyModel& model, double p, double q, double a_low, double x,
                               double b, double z, const QuadratureSpec& spec = {});

}  // namespace parisian
