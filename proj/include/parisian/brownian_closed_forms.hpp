#pragma once

#include <cmath>
#include <utility>

// Closed forms for the Brownian risk process with unit volatility,
// X_t = c t + B_t.  These duplicate, on purpose, what the generic evaluators
// compute by quadrature: the fast path and the generic path are compared in
// the tests.

namespace parisian::brownian_cf {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double phi(double c, double lambda) { return std::sqrt(c * c + 2.0 * lambda) - c; }

inline double W0(double c, double x) {
    if (x < 0.0) return 0.0;
    return (1.0 - std::exp(-2.0 * c * x)) / c;
}

inline double W_lambda(double c, double lambda, double x) {
    if (x < 0.0) return 0.0;
    const double f = phi(c, lambda);
    return (std::exp(f * x) - std::exp(-x * (f + 2.0 * c))) / (f + c);
}

inline double Z_lambda(double c, double lambda, double x) {
    if (x < 0.0) return 1.0;
    const double f = phi(c, lambda);
    return lambda / (f + c) * (std::exp(f * x) / f + std::exp(-(f + 2.0 * c) * x) / (f + 2.0 * c));
}

// Z(x, Phi_lambda) for the q = 0 scale family
inline double Z_at_phi(double c, double lambda, double x) {
    const double f = phi(c, lambda);
    if (x < 0.0) return std::exp(f * x);
    return lambda / c * (1.0 / f - std::exp(-2.0 * c * x) / (f + 2.0 * c));
}

inline double A1(double c, double lambda, double x) {
    const double f = phi(c, lambda);
    return lambda / (c * f * (f + c)) - lambda * std::exp(-2.0 * c * x) / (c * (f + 2.0 * c) * (f + c));
}

inline double A2(double c, double lambda, double x) {
    const double f = phi(c, lambda);
    return lambda / (c * (f + c) * (f + 2.0 * c)) - lambda * std::exp(-2.0 * c * x) / (c * f * (f + c));
}

// Psi_1 = (1/sqrt(2 pi r)) int_0^inf e^{Phi_lambda z} (z/r) e^{-(z-cr)^2/(2r)} dz
inline double Psi1(double c, double r, double lambda) {
    const double f = phi(c, lambda);
    return std::exp(-r * c * c / 2.0) / std::sqrt(2.0 * M_PI * r) +
           std::exp(r * lambda) * (f + c) * normal_cdf(std::sqrt(r) * (f + c));
}

// Psi_2 = (1/sqrt(2 pi r)) int_0^inf e^{-(Phi_lambda + 2c) z} (z/r) e^{-(z-cr)^2/(2r)} dz.
// Completing the square shifts the Gaussian mean to -r(Phi_lambda + c), so the
// tail factor carries Phi_lambda + c, not Phi_lambda - c.
inline double Psi2(double c, double r, double lambda) {
    const double f = phi(c, lambda);
    return std::exp(-r * c * c / 2.0) / std::sqrt(2.0 * M_PI * r) -
           std::exp(r * lambda) * (f + c) * normal_cdf(-std::sqrt(r) * (f + c));
}

inline std::pair<double, double> psi_helpers(double c, double r, double lambda) {
    return {Psi1(c, r, lambda), Psi2(c, r, lambda)};
}

// E[X_1] * Lambda(x, r) for x >= 0.  The second term pairs N(sqrt(r) c) with
// N(-sqrt(r) c); the e^{-2cz}-tilted integral has its Gaussian mean at -cr.
inline double mean_times_lambda(double c, double x, double r) {
    const double gauss = std::exp(-c * c * r / 2.0) / std::sqrt(2.0 * M_PI * r);
    return (1.0 - std::exp(-2.0 * x * c)) * gauss +
           c * (normal_cdf(std::sqrt(r) * c) + std::exp(-2.0 * x * c) * normal_cdf(-std::sqrt(r) * c));
}

// int_0^inf scriptW_z^{(lambda,-lambda)}(x+z) (z/r) P(X_r in dz) = A1 Psi1 + A2 Psi2,
// i.e. Lambda(x; r, lambda) for x >= 0.
inline double lambda_mixed(double c, double x, double r, double lambda) {
    return A1(c, lambda, x) * Psi1(c, r, lambda) + A2(c, lambda, x) * Psi2(c, r, lambda);
}

// int_0^inf (Z_lambda(z) - 1) (z/r) P(X_r in dz)
inline double stilde_denominator_integral(double c, double r, double lambda) {
    const double f = phi(c, lambda);
    return lambda / (f * (f + c)) * Psi1(c, r, lambda) +
           lambda / ((f + c) * (f + 2.0 * c)) * Psi2(c, r, lambda) -
           (std::exp(-c * c * r / 2.0) / std::sqrt(2.0 * M_PI * r) +
            c * normal_cdf(c * std::sqrt(r)));
}

}  // namespace parisian::brownian_cf
