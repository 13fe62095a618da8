#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace parisian {

// X_t = c t + sigma B_t
struct Brownian {
    double c;      // drift per unit time
    double sigma;  // volatility, > 0
};

// X_t = c t - compound Poisson(eta) with Exp(mu) claims
struct CramerLundberg {
    double c;    // premium rate, > 0
    double eta;  // claim arrival rate, > 0
    double mu;   // claim size parameter (mean claim 1/mu), > 0
};

// A spectrally negative Levy insurance risk process, one of the two supported
// parametric families.  Exposes the analytic primitives every other module
// builds on: the Laplace exponent psi, its derivative, psi'(0+), and the
// right-inverse Phi_q.
class LevyModel {
public:
    static LevyModel brownian(double drift, double sigma);
    static LevyModel cramer_lundberg(double premium, double claim_rate, double claim_param);

    bool is_brownian() const { return std::holds_alternative<Brownian>(spec_); }
    const Brownian& as_brownian() const { return std::get<Brownian>(spec_); }
    const CramerLundberg& as_cramer_lundberg() const { return std::get<CramerLundberg>(spec_); }

    // psi(theta) for theta >= 0
    double laplace_exponent(double theta) const;
    double laplace_exponent_derivative(double theta) const;

    // E[X_1] = psi'(0+)
    double mean() const;

    // Phi_q = sup{ theta >= 0 : psi(theta) = q }, bracketed bisection + Newton polish.
    double phi(double q) const;

    std::string describe() const;

private:
    explicit LevyModel(Brownian b) : spec_(b) {}
    explicit LevyModel(CramerLundberg cl) : spec_(cl) {}
    std::variant<Brownian, CramerLundberg> spec_;
};

struct AtomMass {
    double location;  // > 0
    double mass;      // probability
};

// The law of X_r restricted to (0, infinity): an optional atom plus an
// absolutely continuous part.  tail_cutoff bounds the support actually used
// when integrating z * density(z); integrands growing like e^{g z} must ask
// upper_limit(g) for a cutoff that still controls the tail.
struct PositiveLawRepr {
    std::optional<AtomMass> atom;
    std::function<double(double)> density;  // on (0, infinity)
    double tail_cutoff = 0.0;

    double upper_limit(double growth_rate) const;

    // internals needed by upper_limit
    bool gaussian_tail = false;
    double gauss_mean = 0.0;
    double gauss_sd = 0.0;
};

// Law of X_r on (0, infinity) for the given model.  Brownian: N(cr, sigma^2 r)
// density, no atom, Gaussian tail cutoff.  Cramer-Lundberg: atom e^{-eta r} at
// z = cr plus a Poisson-Gamma series density on (0, cr); support bound exact.
PositiveLawRepr xr_measure(const LevyModel& model, double r);

}  // namespace parisian
