#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

namespace parisian {

// Tolerance policy for the adaptive integrators.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;
};

// Raised when an integral cannot be resolved within the subdivision budget.
// Callers must not swallow this silently; the CLI maps it to exit code 3.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1,1]: node, 7-point Gauss weight, 15-point Kronrod weight.
inline constexpr double gk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
void gk15_rule(F&& f, double a, double b, double& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double g = gk15[0][1] * fc;
    double k = gk15[0][2] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk15[i][0];
        const double s = f(mid + dx) + f(mid - dx);
        g += gk15[i][1] * s;
        k += gk15[i][2] * s;
    }
    value = k * half;
    err = std::abs((k - g) * half);
}

}  // namespace detail

// Adaptive Gauss-Legendre quadrature of f over [a,b] (Kronrod error estimate,
// bisection subdivision).  Orientation-aware: integrate(f, b, a) = -integrate(f, a, b).
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    struct Interval {
        double lo, hi;
    };
    std::vector<Interval> stack;
    stack.reserve(64);
    stack.push_back({a, b});
    const double total_len = b - a;
    double sum = 0.0;
    int splits = 0;
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        double v, e;
        detail::gk15_rule(f, iv.lo, iv.hi, v, e);
        const double len = iv.hi - iv.lo;
        const double tol = std::max(spec.abs_tol * len / total_len, spec.rel_tol * std::abs(v));
        if (e <= tol || len <= 1e-14 * total_len) {
            sum += v;
            continue;
        }
        if (++splits > spec.max_subdivisions)
            throw QuadratureError("adaptive quadrature: subdivision limit exceeded");
        const double mid = 0.5 * (iv.lo + iv.hi);
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    return sign * sum;
}

// Same, with interior break points (integrand kinks); breaks outside (a,b) are ignored.
template <class F>
double integrate_with_breaks(F&& f, double a, double b, std::span<const double> breaks,
                             const QuadratureSpec& spec = {}) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double p : breaks)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) sum += integrate(f, pts[i], pts[i + 1], spec);
    return sum;
}

// \int_a^\infty f, summing geometrically widening segments until two consecutive
// contributions are negligible.  Intended for integrands with eventual exponential decay.
template <class F>
double integrate_half_line(F&& f, double a, double initial_width, const QuadratureSpec& spec = {}) {
    double total = 0.0;
    double lo = a;
    double w = initial_width;
    int quiet = 0;
    for (int seg = 0; seg < 200; ++seg) {
        const double v = integrate(f, lo, lo + w, spec);
        total += v;
        if (std::abs(v) <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
        lo += w;
        if (seg >= 3) w *= 2.0;
    }
    throw QuadratureError("half-line quadrature did not converge");
}

}  // namespace parisian
