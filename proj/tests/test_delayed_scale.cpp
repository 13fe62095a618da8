#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parisian/brownian_closed_forms.hpp"
#include "parisian/delayed_scale.hpp"
#include "parisian/quadrature.hpp"
#include "parisian/rng.hpp"

using namespace parisian;

namespace {
const LevyModel kBm = LevyModel::brownian(1.0, 1.0);
const LevyModel kCl = LevyModel::cramer_lundberg(2.0, 1.0, 1.0);
}  // namespace

TEST_CASE("the two integral forms of lambda_rs agree") {
    for (const auto& model : {kBm, kCl}) {
        const double p = 0.5;
        for (double x : {-0.5, 0.5, 1.5}) {
            for (double r : {0.5, 1.0, 2.0}) {
                for (double s : {-0.5, 0.5, 1.0}) {
                    const DelayedScaleParams prm{p, r, s, x};
                    const double a = lambda_rs(model, prm);
                    const double b = lambda_rs_alt(model, prm);
                    CHECK(std::abs(a - b) < 1e-7);
                }
            }
        }
    }
}

TEST_CASE("s = 0 recovers lambda_r") {
    for (const auto& model : {kBm, kCl}) {
        for (double x : {-0.5, 0.0, 1.0}) {
            const double a = lambda_rs(model, {0.7, 1.0, 0.0, x});
            const double b = lambda_r(model, 0.7, x, 1.0);
            CHECK(a == doctest::Approx(b).epsilon(1e-10));
        }
    }
}

TEST_CASE("Lambda^{(q)}(0, r) = e^{q r}") {
    for (const auto& model : {kBm, kCl}) {
        for (double q : {0.0, 0.5, 2.0}) {
            for (double r : {0.1, 1.0}) {
                const double v = lambda_r(model, q, 0.0, r);
                CHECK(v == doctest::Approx(std::exp(q * r)).epsilon(1e-7));
            }
        }
    }
    CHECK(lambda_rs(kBm, {0.5, 2.0, 0.0, 0.0}) == doctest::Approx(std::exp(1.0)).epsilon(1e-7));
}

TEST_CASE("lambda_r vanishes far below the support") {
    const auto law = xr_measure(kBm, 1.0);
    CHECK(lambda_r(kBm, 0.5, -law.upper_limit(5.0) - 1.0, 1.0) == 0.0);
}

TEST_CASE("lambda_r is nondecreasing in x") {
    for (const auto& model : {kBm, kCl}) {
        double prev = -1.0;
        for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
            const double v = lambda_r(model, 0.5, x, 1.0);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("creeping laplace basics") {
    CHECK(creeping_laplace(kBm, 0.7, 0.0, 1.3) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK_THROWS(creeping_laplace(kBm, 0.5, 0.1, 1.0));
    for (const auto& model : {kBm, kCl}) {
        for (double x : {-2.0, -1.0, -0.25}) {
            for (double q : {0.0, 1.0}) {
                const double v = creeping_laplace(model, q, x, 1.0);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0 + 1e-10);
            }
        }
    }
}

TEST_CASE("creeping laplace against the inverse Gaussian passage law") {
    // q = 0: P_{-1}(tau_0^+ < 1) for unit drift, unit volatility
    const double t = 1.0, d = 1.0, c = 1.0;
    const double cdf = brownian_cf::normal_cdf((c * t - d) / std::sqrt(t)) +
                       std::exp(2.0 * c * d) * brownian_cf::normal_cdf(-(c * t + d) / std::sqrt(t));
    CHECK(creeping_laplace(kBm, 0.0, -1.0, 1.0) == doctest::Approx(cdf).epsilon(1e-7));
}

TEST_CASE("creeping laplace against a direct Cramer-Lundberg simulation") {
    // E_{-1/2}[e^{-tau_0^+} 1{tau_0^+ < 1}], claims and drift resolved exactly
    const CramerLundberg m{2.0, 1.0, 1.0};
    Rng rng(99, 0);
    const int n = 1'000'000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = 0.0, y = -0.5;
        double v = 0.0;
        for (;;) {
            const double up = -y / m.c;
            const double claim = rng.exponential(m.eta);
            if (up <= claim) {
                if (t + up < 1.0) v = std::exp(-(t + up));
                break;
            }
            t += claim;
            if (t >= 1.0) break;
            y += m.c * claim - rng.exponential(m.mu);
        }
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sumsq / n - mean * mean) / (n - 1));
    const double formula = creeping_laplace(kCl, 1.0, -0.5, 1.0);
    CHECK(std::abs(formula - mean) < 3.0 * se);
}

TEST_CASE("r -> 0: the two delayed terms cancel at the sqrt(r) rate") {
    // e^{-qr}(Lambda^{(q)}(x;r,0) - Lambda^{(q)}(x;r,-q)) -> 0.  For Brownian
    // paths the gap decays like q W_q(x) sqrt(2r/pi): expanding the bracket of
    // scriptW_x^{(q,-q)} for small z gives q W_q(x) z^2, and the third partial
    // moment of X_r/r contributes sqrt(r) 2 sqrt(2/pi) / 2.
    const double q = 1.0, x = 1.0;
    const ScaleEvaluator wq(kBm, q);
    const double rate = q * wq.W(x) * std::sqrt(2.0 / M_PI);
    double prev = 1e9;
    for (double r : {1e-1, 1e-2, 1e-3}) {
        const double v = std::exp(-q * r) *
                         (lambda_rs(kBm, {q, r, 0.0, x}) - lambda_rs(kBm, {q, r, -q, x}));
        CHECK(std::abs(v) < prev);
        prev = std::abs(v);
    }
    CHECK(prev == doctest::Approx(rate * std::sqrt(1e-3)).epsilon(0.08));
}

TEST_CASE("Psi helpers against direct quadrature") {
    const double c = 1.0, r = 1.0, lam = 1.0;
    const double f = brownian_cf::phi(c, lam);
    const auto law = xr_measure(LevyModel::brownian(c, 1.0), r);
    const double psi1 = integrate([&](double z) { return std::exp(f * z) * (z / r) * law.density(z); },
                                  0.0, law.upper_limit(f));
    const double psi2 =
        integrate([&](double z) { return std::exp(-(f + 2.0 * c) * z) * (z / r) * law.density(z); },
                  0.0, law.upper_limit(0.0));
    CHECK(brownian_cf::Psi1(c, r, lam) == doctest::Approx(psi1).epsilon(1e-8));
    CHECK(brownian_cf::Psi2(c, r, lam) == doctest::Approx(psi2).epsilon(1e-8));
}

TEST_CASE("Psi symmetry at zero drift") {
    const double r = 1.0, lam = 1.0;
    const auto [p1, p2] = brownian_cf::psi_helpers(0.0, r, lam);
    CHECK(p1 - p2 == doctest::Approx(std::exp(r * lam) * std::sqrt(2.0 * lam)).epsilon(1e-12));
}

TEST_CASE("E[X1] Lambda(x, r) closed form against the generic quadrature") {
    const double c = 1.0, r = 1.0;
    for (double x : {0.0, 1.0}) {
        const double closed = brownian_cf::mean_times_lambda(c, x, r);
        const double generic = c * lambda_r(kBm, 0.0, x, r);
        CHECK(closed == doctest::Approx(generic).epsilon(1e-7));
    }
}

TEST_CASE("A1 Psi1 + A2 Psi2 equals Lambda(x; r, lambda)") {
    const double c = 1.0, r = 1.0, lam = 1.0;
    for (double x : {0.0, 1.0}) {
        const double closed = brownian_cf::lambda_mixed(c, x, r, lam);
        const double generic = lambda_rs(kBm, {0.0, r, lam, x});
        CHECK(closed == doctest::Approx(generic).epsilon(1e-7));
    }
}
