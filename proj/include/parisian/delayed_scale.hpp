#pragma once

#include <functional>

#include "parisian/levy_model.hpp"
#include "parisian/quadrature.hpp"
#include "parisian/scale_functions.hpp"

namespace parisian {

// Arguments of the (r,s)-delayed p-scale function Lambda^{(p)}(x; r, s).
struct DelayedScaleParams {
    double p = 0.0;  // discount index, >= 0
    double r = 1.0;  // deterministic delay, > 0
    double s = 0.0;  // rate shift (lambda, 0, or -p in the identities); p + s >= 0
    double x = 0.0;  // evaluation point
};

// \int_0^inf f(z) (z/r) P(X_r in dz), atom handled exactly, density piece by
// adaptive quadrature with the integrand kink split out.  growth_rate bounds
// the exponential growth of f and steers the Brownian tail cutoff.
double integrate_against_xr(const LevyModel& model, double r,
                            const std::function<double(double)>& f, double growth_rate,
                            double kink, const QuadratureSpec& spec = {});

// Lambda^{(p)}(x; r, s) = \int scriptW_x^{(p,s)}(x+z) (z/r) P(X_r in dz)
double lambda_rs(const LevyModel& model, const DelayedScaleParams& prm,
                 const QuadratureSpec& spec = {});

// same quantity via \int scriptW_z^{(p+s,-s)}(x+z) (z/r) P(X_r in dz); the two
// routes integrate different quadratures and are compared in tests
double lambda_rs_alt(const LevyModel& model, const DelayedScaleParams& prm,
                     const QuadratureSpec& spec = {});

// Lambda^{(p)}(x, r) = \int W_p(x+z) (z/r) P(X_r in dz)
double lambda_r(const LevyModel& model, double p, double x, double r,
                const QuadratureSpec& spec = {});

// E_x[e^{-q tau_0^+} 1{tau_0^+ < r}] = e^{-q r} Lambda^{(q)}(x, r) for x <= 0
double creeping_laplace(const LevyModel& model, double q, double x, double r,
                        const QuadratureSpec& spec = {});

}  // namespace parisian
