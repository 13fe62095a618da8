#include "parisian/delayed_scale.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace parisian {

double integrate_against_xr(const LevyModel& model, double r,
                            const std::function<double(double)>& f, double growth_rate,
                            double kink, const QuadratureSpec& spec) {
    const PositiveLawRepr law = xr_measure(model, r);
    const double hi = law.upper_limit(growth_rate);
    double total = 0.0;
    if (law.atom) total += law.atom->mass * (law.atom->location / r) * f(law.atom->location);
    auto g = [&](double z) { return f(z) * (z / r) * law.density(z); };
    std::vector<double> breaks;
    if (kink > 0.0 && kink < hi) breaks.push_back(kink);
    total += integrate_with_breaks(g, 0.0, hi, breaks, spec);
    return total;
}

double lambda_rs(const LevyModel& model, const DelayedScaleParams& prm, const QuadratureSpec& spec) {
    if (!(prm.r > 0.0)) throw std::invalid_argument("lambda_rs: r must be > 0");
    if (prm.p < 0.0 || prm.p + prm.s < 0.0)
        throw std::invalid_argument("lambda_rs: requires p >= 0 and p + s >= 0");
    const ScaleEvaluator base(model, prm.p);
    const ScaleEvaluator shifted(model, prm.p + prm.s);
    auto f = [&](double z) { return script_W(base, shifted, prm.x, prm.x + z, spec); };
    return integrate_against_xr(model, prm.r, f, shifted.phi(), -prm.x, spec);
}

double lambda_rs_alt(const LevyModel& model, const DelayedScaleParams& prm,
                     const QuadratureSpec& spec) {
    if (!(prm.r > 0.0)) throw std::invalid_argument("lambda_rs: r must be > 0");
    const ScaleEvaluator base(model, prm.p + prm.s);
    const ScaleEvaluator shifted(model, prm.p);
    auto f = [&](double z) { return script_W(base, shifted, z, prm.x + z, spec); };
    return integrate_against_xr(model, prm.r, f, base.phi(), -prm.x, spec);
}

double lambda_r(const LevyModel& model, double p, double x, double r, const QuadratureSpec& spec) {
    if (!(r > 0.0)) throw std::invalid_argument("lambda_r: r must be > 0");
    const ScaleEvaluator W(model, p);
    auto f = [&](double z) { return W.W(x + z); };
    return integrate_against_xr(model, r, f, W.phi(), -x, spec);
}

double creeping_laplace(const LevyModel& model, double q, double x, double r,
                        const QuadratureSpec& spec) {
    if (x > 0.0) throw std::invalid_argument("creeping_laplace: x must be <= 0");
    return std::exp(-q * r) * lambda_r(model, q, x, r, spec);
}

}  // namespace parisian
