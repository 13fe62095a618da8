#include "parisian/levy_model.hpp"

#include <cmath>
#include <stdexcept>

namespace parisian {

LevyModel LevyModel::brownian(double drift, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("Brownian model requires sigma > 0");
    return LevyModel(Brownian{drift, sigma});
}

LevyModel LevyModel::cramer_lundberg(double premium, double claim_rate, double claim_param) {
    if (!(premium > 0.0 && claim_rate > 0.0 && claim_param > 0.0))
        throw std::invalid_argument("Cramer-Lundberg model requires c, eta, mu > 0");
    return LevyModel(CramerLundberg{premium, claim_rate, claim_param});
}

double LevyModel::laplace_exponent(double theta) const {
    if (theta < 0.0) throw std::invalid_argument("laplace_exponent: theta must be >= 0");
    if (is_brownian()) {
        const auto& m = as_brownian();
        return m.c * theta + 0.5 * m.sigma * m.sigma * theta * theta;
    }
    const auto& m = as_cramer_lundberg();
    return m.c * theta - m.eta * theta / (m.mu + theta);
}

double LevyModel::laplace_exponent_derivative(double theta) const {
    if (is_brownian()) {
        const auto& m = as_brownian();
        return m.c + m.sigma * m.sigma * theta;
    }
    const auto& m = as_cramer_lundberg();
    const double d = m.mu + theta;
    return m.c - m.eta * m.mu / (d * d);
}

double LevyModel::mean() const {
    if (is_brownian()) return as_brownian().c;
    const auto& m = as_cramer_lundberg();
    return m.c - m.eta / m.mu;
}

double LevyModel::phi(double q) const {
    if (q < 0.0) throw std::invalid_argument("phi: q must be >= 0");
    if (q == 0.0 && mean() >= 0.0) return 0.0;

    double hi;
    if (is_brownian()) {
        const auto& m = as_brownian();
        hi = (std::sqrt(m.c * m.c + 2.0 * m.sigma * m.sigma * q) - m.c) / (m.sigma * m.sigma) + 1.0;
    } else {
        const auto& m = as_cramer_lundberg();
        hi = (q + m.eta) / m.c + m.mu;
    }
    // psi - q changes sign on (lo, hi): psi(0) - q = -q < 0 for q > 0, and for
    // q = 0 with negative drift psi is negative just right of the origin.
    double lo = 0.0;
    if (q == 0.0) {
        lo = 1e-12;
        while (laplace_exponent(lo) >= 0.0 && lo < hi) lo *= 2.0;
    }
    if (!(laplace_exponent(hi) - q > 0.0)) throw std::runtime_error("phi: bracket failure");

    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (laplace_exponent(mid) - q < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        const double f = laplace_exponent(root) - q;
        const double df = laplace_exponent_derivative(root);
        if (df == 0.0) break;
        double next = root - f / df;
        if (next < lo || next > hi) break;
        root = next;
    }
    if (!(std::abs(laplace_exponent(root) - q) <= 1e-9 * (1.0 + q)))
        throw std::runtime_error("phi: solver did not converge");
    return root;
}

std::string LevyModel::describe() const {
    auto num = [](double v) {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    if (is_brownian()) {
        const auto& m = as_brownian();
        return "brownian c=" + num(m.c) + " sigma=" + num(m.sigma);
    }
    const auto& m = as_cramer_lundberg();
    return "cl c=" + num(m.c) + " eta=" + num(m.eta) + " mu=" + num(m.mu);
}

double PositiveLawRepr::upper_limit(double growth_rate) const {
    if (!gaussian_tail) return tail_cutoff;  // exact support bound
    // Tilting by e^{g z} shifts the Gaussian mean by g sd^2; keep 12 sd of margin.
    const double shifted = gauss_mean + std::max(growth_rate, 0.0) * gauss_sd * gauss_sd;
    return std::max(tail_cutoff, shifted + 12.0 * gauss_sd);
}

namespace {

double cl_xr_density(const CramerLundberg& m, double r, double z) {
    const double w = m.c * r - z;
    if (z <= 0.0 || w <= 0.0) return 0.0;
    // sum_{n>=1} e^{-eta r}(eta r)^n/n! * mu^n w^{n-1} e^{-mu w}/(n-1)!
    double pois = std::exp(-m.eta * r) * (m.eta * r);
    double gam = m.mu * std::exp(-m.mu * w);
    double sum = pois * gam;
    double pois_max = pois;
    for (int n = 2; n < 10000; ++n) {
        pois *= m.eta * r / n;
        gam *= m.mu * w / (n - 1);
        sum += pois * gam;
        pois_max = std::max(pois_max, pois);
        if (pois < 1e-16 * pois_max && n > m.eta * r) break;
    }
    return sum;
}

}  // namespace

PositiveLawRepr xr_measure(const LevyModel& model, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("xr_measure: r must be > 0");
    PositiveLawRepr law;
    if (model.is_brownian()) {
        const auto m = model.as_brownian();
        const double mean = m.c * r;
        const double sd = m.sigma * std::sqrt(r);
        law.gaussian_tail = true;
        law.gauss_mean = mean;
        law.gauss_sd = sd;
        law.tail_cutoff = mean + 10.0 * sd;
        law.density = [mean, sd](double z) {
            if (z <= 0.0) return 0.0;
            const double u = (z - mean) / sd;
            return std::exp(-0.5 * u * u) / (sd * std::sqrt(2.0 * M_PI));
        };
    } else {
        const auto m = model.as_cramer_lundberg();
        law.atom = AtomMass{m.c * r, std::exp(-m.eta * r)};
        law.tail_cutoff = m.c * r;
        law.density = [m, r](double z) { return cl_xr_density(m, r, z); };
    }
    return law;
}

}  // namespace parisian
