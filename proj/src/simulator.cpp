#include "parisian/simulator.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "parisian/delayed_scale.hpp"
#include "parisian/rng.hpp"
#include "parisian/scale_functions.hpp"

namespace parisian {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class End { event, exit, none, horizon };

struct PathOutcome {
    End end;
    double time;
    double value;  // X at the detection time where meaningful
};

// Level beyond which a later ruin-type event has probability < 1e-9, so the
// path can be declared resolved without running to the horizon.  Only valid
// for strictly positive drift.
double escape_level(const LevyModel& model, double from) {
    double gamma;
    if (model.is_brownian()) {
        const auto& m = model.as_brownian();
        gamma = 2.0 * m.c / (m.sigma * m.sigma);
    } else {
        const auto& m = model.as_cramer_lundberg();
        gamma = m.mu - m.eta / m.c;  // Lundberg coefficient
    }
    if (gamma <= 0.0) return kInf;
    return from + 21.0 / gamma;
}

// --- Brownian exact primitives ------------------------------------------------

// First passage time over distance d > 0 upward under drift c; kInf when the
// passage never happens.
double fp_up(Rng& rng, double d, double c, double sigma) {
    if (d <= 0.0) return 0.0;
    const double s2 = sigma * sigma;
    if (c > 0.0) return rng.inverse_gaussian(d / c, d * d / s2);
    if (c == 0.0) return rng.levy_stable(d * d / s2);
    const double p_hit = std::exp(2.0 * c * d / s2);
    if (rng.uniform() >= p_hit) return kInf;
    return rng.inverse_gaussian(d / -c, d * d / s2);
}

// Crossing of the level U by the Brownian bridge from y1 to y2 over [0, dt]
// (y1 < U).  Returns the crossing time, negative when the bridge stays below.
// Conditioned on crossing, u/(dt-u) is inverse Gaussian, sampled directly.
double bridge_cross_up(Rng& rng, double dt, double y1, double y2, double U, double sigma) {
    const double A = (U - y1) / sigma;
    if (y2 < U) {
        const double p = std::exp(-2.0 * A * (U - y2) / (sigma * dt));
        if (rng.uniform() >= p) return -1.0;
    }
    const double B = std::abs(U - y2) / sigma;
    const double t = B > 0.0 ? rng.inverse_gaussian(A / B, A * A / dt) : rng.levy_stable(A * A / dt);
    return dt * t / (1.0 + t);
}

// Age of the negative excursion at the right endpoint of a bridge from
// y1 >= 0 to y2 < 0 over [0, dt]: dt minus the bridge's last zero, sampled by
// time reversal through the same inverse-Gaussian transform.
double bridge_excursion_age(Rng& rng, double dt, double y1, double y2, double sigma) {
    const double A = -y2 / sigma;
    const double B = y1 / sigma;
    const double t = B > 0.0 ? rng.inverse_gaussian(A / B, A * A / dt) : rng.levy_stable(A * A / dt);
    return dt * t / (1.0 + t);
}

// --- Brownian path engines ----------------------------------------------------

PathOutcome brownian_hybrid(Rng& rng, const Brownian& m, const SimConfig& cfg, double esc) {
    const double a = cfg.recovery_barrier;
    double t = 0.0, y = cfg.x0;
    if (y < a) {  // grace window already open at time zero
        const double tau = fp_up(rng, a - y, m.c, m.sigma);
        if (tau > cfg.grace) return {End::event, cfg.grace, 0.0};
        t = tau;
        y = a;
    }
    if (cfg.upper_barrier && y >= *cfg.upper_barrier) return {End::exit, t, 0.0};
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        if (!cfg.upper_barrier && y >= esc) return {End::none, t, 0.0};
        const double dt = rng.exponential(cfg.inspection_rate);
        const double y2 = y + m.c * dt + m.sigma * std::sqrt(dt) * rng.normal();
        if (cfg.upper_barrier) {
            const double u = bridge_cross_up(rng, dt, y, y2, *cfg.upper_barrier, m.sigma);
            if (u >= 0.0) return {End::exit, t + u, 0.0};
        }
        t += dt;
        y = y2;
        if (y < a) {
            const double tau = fp_up(rng, a - y, m.c, m.sigma);
            if (tau > cfg.grace) return {End::event, t + cfg.grace, 0.0};
            t += tau;
            y = a;
        }
    }
}

PathOutcome brownian_t0(Rng& rng, const Brownian& m, const SimConfig& cfg) {
    const double b = *cfg.upper_barrier;
    double t = 0.0, y = cfg.x0;
    if (y >= b) return {End::exit, 0.0, 0.0};
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        const double dt = rng.exponential(cfg.inspection_rate);
        const double y2 = y + m.c * dt + m.sigma * std::sqrt(dt) * rng.normal();
        const double u = bridge_cross_up(rng, dt, y, y2, b, m.sigma);
        if (u >= 0.0) return {End::exit, t + u, 0.0};
        t += dt;
        y = y2;
        if (y < 0.0) return {End::event, t, y};
    }
}

PathOutcome brownian_parisian(Rng& rng, const Brownian& m, const SimConfig& cfg, double esc) {
    const double r = cfg.grace;
    double t = 0.0, y = cfg.x0;
    if (y < 0.0) {
        const double tau = fp_up(rng, -y, m.c, m.sigma);
        if (tau > r) return {End::event, r, 0.0};
        t = tau;
        y = 0.0;
    }
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        if (y >= esc) return {End::none, t, 0.0};
        // checkpoints every r: any excursion longer than r straddles one
        const double y2 = y + m.c * r + m.sigma * std::sqrt(r) * rng.normal();
        if (y2 >= 0.0) {
            t += r;
            y = y2;
            continue;
        }
        const double age = bridge_excursion_age(rng, r, y, y2, m.sigma);
        const double tau = fp_up(rng, -y2, m.c, m.sigma);
        if (tau > r - age) return {End::event, t + r + (r - age), 0.0};
        t += r + tau;
        y = 0.0;
    }
}

PathOutcome brownian_mixed(Rng& rng, const Brownian& m, const SimConfig& cfg) {
    const double b = *cfg.upper_barrier;
    const double r = cfg.grace;
    double t = 0.0, y = cfg.x0;
    if (y >= b) return {End::exit, 0.0, 0.0};
    double until_insp = rng.exponential(cfg.inspection_rate);
    if (y < 0.0) {  // excursion of age zero already in progress
        const double tau = fp_up(rng, -y, m.c, m.sigma);
        if (until_insp < tau && until_insp < r) return {End::event, until_insp, 0.0};
        if (r <= tau) return {End::event, r, 0.0};
        t = tau;
        y = 0.0;
        until_insp -= tau;
    }
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        // segments never longer than r, so excursion starts are always bracketed
        const bool is_insp = until_insp <= r;
        const double e = is_insp ? until_insp : r;
        const double y2 = y + m.c * e + m.sigma * std::sqrt(e) * rng.normal();
        const double u = bridge_cross_up(rng, e, y, y2, b, m.sigma);
        if (u >= 0.0) return {End::exit, t + u, 0.0};
        t += e;
        if (is_insp) {
            y = y2;
            until_insp = rng.exponential(cfg.inspection_rate);
            if (y < 0.0) return {End::event, t, y};  // T0^- precedes any excursion deadline
        } else {
            until_insp -= e;
            if (y2 < 0.0) {
                const double age = bridge_excursion_age(rng, e, y, y2, m.sigma);
                const double tau = fp_up(rng, -y2, m.c, m.sigma);
                const double deadline = r - age;
                if (until_insp < tau && until_insp < deadline)
                    return {End::event, t + until_insp, 0.0};
                if (deadline <= tau) return {End::event, t + deadline, 0.0};
                t += tau;
                y = 0.0;
                until_insp -= tau;
            } else {
                y = y2;
            }
        }
    }
}

// --- Cramer-Lundberg path engines ----------------------------------------------

PathOutcome cl_hybrid(Rng& rng, const CramerLundberg& m, const SimConfig& cfg, double esc) {
    const double a = cfg.recovery_barrier;
    double t = 0.0, y = cfg.x0;
    // One grace window opened at ws with X = y < a; drift recovery competes
    // with further claims and the deadline ws + r.  Returns true on ruin.
    auto grace_window = [&](double ws) -> bool {
        const double deadline = ws + cfg.grace;
        for (;;) {
            const double up = (a - y) / m.c;
            const double claim = rng.exponential(m.eta);
            if (t + up <= deadline && up <= claim) {
                t += up;
                y = a;
                return false;
            }
            if (t + claim >= deadline) return true;
            t += claim;
            y += m.c * claim - rng.exponential(m.mu);
        }
    };
    if (y < a && grace_window(0.0)) return {End::event, cfg.grace, 0.0};
    if (cfg.upper_barrier && y >= *cfg.upper_barrier) return {End::exit, t, 0.0};
    double until_insp = rng.exponential(cfg.inspection_rate);
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        if (!cfg.upper_barrier && y >= esc) return {End::none, t, 0.0};
        const double claim = rng.exponential(m.eta);
        if (cfg.upper_barrier) {
            const double up = (*cfg.upper_barrier - y) / m.c;
            if (up <= std::min(claim, until_insp)) return {End::exit, t + up, 0.0};
        }
        if (claim < until_insp) {
            t += claim;
            y += m.c * claim - rng.exponential(m.mu);
            until_insp -= claim;
        } else {
            t += until_insp;
            y += m.c * until_insp;
            if (y < a) {
                const double ws = t;
                if (grace_window(ws)) return {End::event, ws + cfg.grace, 0.0};
            }
            until_insp = rng.exponential(cfg.inspection_rate);
        }
    }
}

PathOutcome cl_t0(Rng& rng, const CramerLundberg& m, const SimConfig& cfg) {
    const double b = *cfg.upper_barrier;
    double t = 0.0, y = cfg.x0;
    if (y >= b) return {End::exit, 0.0, 0.0};
    double until_insp = rng.exponential(cfg.inspection_rate);
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        const double claim = rng.exponential(m.eta);
        const double up = (b - y) / m.c;
        if (up <= std::min(claim, until_insp)) return {End::exit, t + up, 0.0};
        if (claim < until_insp) {
            t += claim;
            y += m.c * claim - rng.exponential(m.mu);
            until_insp -= claim;
        } else {
            t += until_insp;
            y += m.c * until_insp;
            until_insp = rng.exponential(cfg.inspection_rate);
            if (y < 0.0) return {End::event, t, y};
        }
    }
}

PathOutcome cl_parisian(Rng& rng, const CramerLundberg& m, const SimConfig& cfg, double esc) {
    double t = 0.0, y = cfg.x0;
    auto excursion = [&](double g) -> bool {  // true = excursion outlives the clock
        const double deadline = g + cfg.grace;
        for (;;) {
            const double up = -y / m.c;
            const double claim = rng.exponential(m.eta);
            if (t + up <= deadline && up <= claim) {
                t += up;
                y = 0.0;
                return false;
            }
            if (t + claim >= deadline) return true;
            t += claim;
            y += m.c * claim - rng.exponential(m.mu);
        }
    };
    if (y < 0.0 && excursion(0.0)) return {End::event, cfg.grace, 0.0};
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        if (y >= esc) return {End::none, t, 0.0};
        const double claim = rng.exponential(m.eta);
        t += claim;
        y += m.c * claim - rng.exponential(m.mu);
        if (y < 0.0) {
            const double g = t;
            if (excursion(g)) return {End::event, g + cfg.grace, 0.0};
        }
    }
}

PathOutcome cl_mixed(Rng& rng, const CramerLundberg& m, const SimConfig& cfg) {
    const double b = *cfg.upper_barrier;
    const double r = cfg.grace;
    double t = 0.0, y = cfg.x0;
    struct Below {
        bool ended;
        PathOutcome out;
    };
    // Below-zero phase: drift recovery, claims, the excursion deadline and
    // Poisson observation compete.  The observation clock is resampled on
    // entry; above zero observations cannot fire, so this is exact.
    auto below = [&](double g) -> Below {
        const double deadline = g + r;
        double until_insp = rng.exponential(cfg.inspection_rate);
        for (;;) {
            const double up = -y / m.c;
            const double claim = rng.exponential(m.eta);
            const double left = deadline - t;
            const double first = std::min(std::min(up, claim), std::min(until_insp, left));
            if (first == until_insp) return {true, {End::event, t + until_insp, y + m.c * until_insp}};
            if (first == left) return {true, {End::event, deadline, 0.0}};
            if (first == up) {
                t += up;
                y = 0.0;
                return {false, {End::none, 0.0, 0.0}};
            }
            t += claim;
            y += m.c * claim - rng.exponential(m.mu);
            until_insp -= claim;
        }
    };
    if (y >= b) return {End::exit, 0.0, 0.0};
    if (y < 0.0) {
        const Below res = below(0.0);
        if (res.ended) return res.out;
    }
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        const double claim = rng.exponential(m.eta);
        const double up = (b - y) / m.c;
        if (up <= claim) return {End::exit, t + up, 0.0};
        t += claim;
        y += m.c * claim - rng.exponential(m.mu);
        if (y < 0.0) {
            const Below res = below(t);
            if (res.ended) return res.out;
        }
    }
}

PathOutcome cl_classical_exit(Rng& rng, const CramerLundberg& m, const SimConfig& cfg,
                              double a_low) {
    const double b = *cfg.upper_barrier;
    double t = 0.0, y = cfg.x0;
    if (y >= b) return {End::exit, 0.0, 0.0};
    for (;;) {
        if (t >= cfg.horizon) return {End::horizon, t, 0.0};
        const double claim = rng.exponential(m.eta);
        const double up = (b - y) / m.c;
        if (up <= claim) return {End::exit, t + up, 0.0};
        t += claim;
        y += m.c * claim - rng.exponential(m.mu);
        if (y < a_low) return {End::event, t, y};
    }
}

// --- replication runner ---------------------------------------------------------

template <std::size_t K>
struct StreamAcc {
    std::array<double, K> sum{};
    std::array<double, K> sumsq{};
    std::int64_t n = 0;
    std::int64_t truncated = 0;
    std::vector<std::int64_t> hist;
    std::int64_t hist_below = 0, hist_above = 0, hist_events = 0;
    std::vector<double> event_times;
};

template <std::size_t K>
struct RunOutput {
    std::array<MCEstimate, K> est{};
    Histogram hist;
    std::vector<double> event_times;
};

template <std::size_t K, class PathFn, class EvalFn>
RunOutput<K> run_streams(const SimConfig& cfg, PathFn path, EvalFn eval, const Histogram* hist_spec,
                         bool collect_times) {
    if (cfg.replications < 1) throw std::invalid_argument("simulator: replications must be >= 1");
    if (cfg.stream_count < 1) throw std::invalid_argument("simulator: stream_count must be >= 1");
    const int streams = cfg.stream_count;
    std::vector<StreamAcc<K>> acc(streams);
    const std::int64_t base = cfg.replications / streams;
    const std::int64_t rem = cfg.replications % streams;

    auto run_one = [&](int k) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(k));
        StreamAcc<K>& A = acc[k];
        if (hist_spec) A.hist.assign(hist_spec->bins, 0);
        A.n = base + (k < rem ? 1 : 0);
        for (std::int64_t i = 0; i < A.n; ++i) {
            const PathOutcome o = path(rng);
            const std::array<double, K> v = eval(o);
            for (std::size_t j = 0; j < K; ++j) {
                A.sum[j] += v[j];
                A.sumsq[j] += v[j] * v[j];
            }
            // resolved-after-horizon outcomes are truncation bias too: the
            // estimand stops at T_max, the paired formulas do not
            if (o.end == End::horizon || (o.end != End::none && o.time >= cfg.horizon))
                ++A.truncated;
            const bool counted = o.end == End::event && o.time < cfg.horizon;
            if (hist_spec && counted) {
                ++A.hist_events;
                if (o.value < hist_spec->lo)
                    ++A.hist_below;
                else if (o.value >= hist_spec->hi)
                    ++A.hist_above;
                else
                    ++A.hist[static_cast<int>((o.value - hist_spec->lo) /
                                              (hist_spec->hi - hist_spec->lo) * hist_spec->bins)];
            }
            if (collect_times && counted) A.event_times.push_back(o.time);
        }
    };

    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < streams; ++k) run_one(k);
    } else {
        for (int k = 0; k < streams; ++k) run_one(k);
    }

    // reduction in stream-index order: independent of thread scheduling
    RunOutput<K> out;
    std::array<double, K> sum{}, sumsq{};
    std::int64_t n = 0, truncated = 0;
    if (hist_spec) {
        out.hist = *hist_spec;
        out.hist.counts.assign(hist_spec->bins, 0);
    }
    for (int k = 0; k < streams; ++k) {
        for (std::size_t j = 0; j < K; ++j) {
            sum[j] += acc[k].sum[j];
            sumsq[j] += acc[k].sumsq[j];
        }
        n += acc[k].n;
        truncated += acc[k].truncated;
        if (hist_spec) {
            for (int i = 0; i < hist_spec->bins; ++i) out.hist.counts[i] += acc[k].hist[i];
            out.hist.below += acc[k].hist_below;
            out.hist.above += acc[k].hist_above;
            out.hist.events += acc[k].hist_events;
        }
        if (collect_times)
            out.event_times.insert(out.event_times.end(), acc[k].event_times.begin(),
                                   acc[k].event_times.end());
    }
    for (std::size_t j = 0; j < K; ++j) {
        const double mean = sum[j] / static_cast<double>(n);
        double var = 0.0;
        if (n > 1) var = std::max(0.0, (sumsq[j] - n * mean * mean) / static_cast<double>(n - 1));
        out.est[j] = MCEstimate{mean, std::sqrt(var / static_cast<double>(n)), n,
                                static_cast<double>(truncated) / static_cast<double>(n), cfg.seed};
    }
    return out;
}

// Closed-form Lambda_p(y, r) for the Brownian model via tilted Gaussian
// partial moments; used for the per-path Lemma functionals, where quadrature
// per path would be both slow and circular.
class BrownianLambda {
public:
    BrownianLambda(const LevyModel& model, double p, double r)
        : eval_(model, p),
          r_(r),
          c_(model.as_brownian().c),
          sigma2_(model.as_brownian().sigma * model.as_brownian().sigma),
          sd_(model.as_brownian().sigma * std::sqrt(r)) {}

    double operator()(double y) const {
        const double lo = std::max(0.0, -y);
        const auto rep = eval_.exponential_sum();
        if (rep.double_root) {
            const auto [m1, m2] = moments(rep.dr_root, lo);
            return std::exp(rep.dr_root * y) *
                   (rep.dr_lin * m2 + (rep.dr_lin * y + rep.dr_const) * m1) / r_;
        }
        const auto mp = moments(rep.root_pos, lo);
        const auto mn = moments(rep.root_neg, lo);
        return (rep.coef_pos * std::exp(rep.root_pos * y) * mp.first +
                rep.coef_neg * std::exp(rep.root_neg * y) * mn.first) /
               r_;
    }

private:
    // (int_lo^inf z e^{rho z} N(cr, sigma^2 r) dz, same with z^2)
    std::pair<double, double> moments(double rho, double lo) const {
        const double mean = c_ * r_ + rho * sigma2_ * r_;
        const double d = (lo - mean) / sd_;
        const double tail = 0.5 * std::erfc(d / std::sqrt(2.0));
        const double pdf = std::exp(-0.5 * d * d) / std::sqrt(2.0 * M_PI);
        const double tilt = std::exp(r_ * (c_ * rho + 0.5 * sigma2_ * rho * rho));
        const double m1 = mean * tail + sd_ * pdf;
        const double m2 = (mean * mean + sd_ * sd_) * tail + sd_ * (lo + mean) * pdf;
        return {tilt * m1, tilt * m2};
    }

    ScaleEvaluator eval_;
    double r_, c_, sigma2_, sd_;
};

}  // namespace

HybridEstimates simulate_hybrid(const SimConfig& cfg, double q, std::vector<double>* ruin_times) {
    const double esc = escape_level(cfg.model, std::max(cfg.x0, cfg.recovery_barrier));
    auto eval = [&](const PathOutcome& o) -> std::array<double, 2> {
        const bool ruined = o.end == End::event && o.time < cfg.horizon;
        if (!ruined) return {0.0, 0.0};
        return {1.0, std::exp(-q * (o.time - cfg.grace))};
    };
    RunOutput<2> out;
    if (cfg.model.is_brownian()) {
        const Brownian m = cfg.model.as_brownian();
        out = run_streams<2>(cfg, [&, m](Rng& rng) { return brownian_hybrid(rng, m, cfg, esc); },
                             eval, nullptr, ruin_times != nullptr);
    } else {
        const CramerLundberg m = cfg.model.as_cramer_lundberg();
        out = run_streams<2>(cfg, [&, m](Rng& rng) { return cl_hybrid(rng, m, cfg, esc); }, eval,
                             nullptr, ruin_times != nullptr);
    }
    if (ruin_times) *ruin_times = std::move(out.event_times);
    return {out.est[0], out.est[1]};
}

TwoSidedEstimates simulate_two_sided(const SimConfig& cfg, double q) {
    if (!cfg.upper_barrier) throw std::invalid_argument("simulate_two_sided: upper_barrier required");
    if (cfg.x0 > *cfg.upper_barrier)
        throw std::invalid_argument("simulate_two_sided: x0 must be <= b");
    auto eval = [&](const PathOutcome& o) -> std::array<double, 3> {
        const bool ruined = o.end == End::event && o.time < cfg.horizon;
        const bool exited = o.end == End::exit && o.time < cfg.horizon;
        return {exited ? 1.0 : 0.0, exited ? std::exp(-q * o.time) : 0.0,
                ruined ? std::exp(-q * (o.time - cfg.grace)) : 0.0};
    };
    RunOutput<3> out;
    if (cfg.model.is_brownian()) {
        const Brownian m = cfg.model.as_brownian();
        out = run_streams<3>(cfg, [&, m](Rng& rng) { return brownian_hybrid(rng, m, cfg, kInf); },
                             eval, nullptr, false);
    } else {
        const CramerLundberg m = cfg.model.as_cramer_lundberg();
        out = run_streams<3>(cfg, [&, m](Rng& rng) { return cl_hybrid(rng, m, cfg, kInf); }, eval,
                             nullptr, false);
    }
    return {out.est[0], out.est[1], out.est[2]};
}

T0Estimates simulate_T0_functionals(const SimConfig& cfg, double q, double p, double z) {
    if (!cfg.upper_barrier)
        throw std::invalid_argument("simulate_T0_functionals: upper_barrier required");
    const ScaleEvaluator wp(cfg.model, p);

    std::function<double(double)> lam_plain, lam_q;
    if (cfg.model.is_brownian()) {
        lam_plain = BrownianLambda(cfg.model, 0.0, cfg.grace);
        lam_q = BrownianLambda(cfg.model, q, cfg.grace);
    } else {
        // per-path quadrature; exact but slow, not used by the acceptance pairings
        const LevyModel model = cfg.model;
        const double r = cfg.grace;
        lam_plain = [model, r](double y) { return lambda_r(model, 0.0, y, r); };
        lam_q = [model, r, q](double y) { return lambda_r(model, q, y, r); };
    }

    auto eval = [&](const PathOutcome& o) -> std::array<double, 5> {
        const bool detected = o.end == End::event && o.time < cfg.horizon;
        const bool exited = o.end == End::exit && o.time < cfg.horizon;
        if (exited) return {0.0, 0.0, 0.0, 0.0, std::exp(-q * o.time)};
        if (!detected) return {0.0, 0.0, 0.0, 0.0, 0.0};
        const double disc = std::exp(-q * o.time);
        return {disc * wp.W(o.value + z), disc * lam_plain(o.value), disc * lam_q(o.value), 1.0,
                0.0};
    };
    const Histogram spec;
    RunOutput<5> out;
    if (cfg.model.is_brownian()) {
        const Brownian m = cfg.model.as_brownian();
        out = run_streams<5>(cfg, [&, m](Rng& rng) { return brownian_t0(rng, m, cfg); }, eval, &spec,
                             false);
    } else {
        const CramerLundberg m = cfg.model.as_cramer_lundberg();
        out = run_streams<5>(cfg, [&, m](Rng& rng) { return cl_t0(rng, m, cfg); }, eval, &spec, false);
    }
    return {out.est[0], out.est[1], out.est[2], out.est[3], out.est[4], std::move(out.hist)};
}

MCEstimate simulate_classical_parisian(const SimConfig& cfg) {
    const double esc = escape_level(cfg.model, std::max(cfg.x0, 0.0));
    auto eval = [&](const PathOutcome& o) -> std::array<double, 1> {
        return {o.end == End::event && o.time < cfg.horizon ? 1.0 : 0.0};
    };
    if (cfg.model.is_brownian()) {
        const Brownian m = cfg.model.as_brownian();
        return run_streams<1>(cfg, [&, m](Rng& rng) { return brownian_parisian(rng, m, cfg, esc); },
                              eval, nullptr, false)
            .est[0];
    }
    const CramerLundberg m = cfg.model.as_cramer_lundberg();
    return run_streams<1>(cfg, [&, m](Rng& rng) { return cl_parisian(rng, m, cfg, esc); }, eval,
                          nullptr, false)
        .est[0];
}

MCEstimate simulate_mixed_exit(const SimConfig& cfg, double p) {
    if (!cfg.upper_barrier) throw std::invalid_argument("simulate_mixed_exit: upper_barrier required");
    auto eval = [&](const PathOutcome& o) -> std::array<double, 1> {
        const bool exited = o.end == End::exit && o.time < cfg.horizon;
        return {exited ? std::exp(-p * o.time) : 0.0};
    };
    if (cfg.model.is_brownian()) {
        const Brownian m = cfg.model.as_brownian();
        return run_streams<1>(cfg, [&, m](Rng& rng) { return brownian_mixed(rng, m, cfg); }, eval,
                              nullptr, false)
            .est[0];
    }
    const CramerLundberg m = cfg.model.as_cramer_lundberg();
    return run_streams<1>(cfg, [&, m](Rng& rng) { return cl_mixed(rng, m, cfg); }, eval, nullptr,
                          false)
        .est[0];
}

MCEstimate simulate_classical_exit(const SimConfig& cfg, double p, double q, double a_low,
                                   double z) {
    if (!cfg.upper_barrier)
        throw std::invalid_argument("simulate_classical_exit: upper_barrier required");
    if (cfg.model.is_brownian())
        throw std::invalid_argument("simulate_classical_exit: Cramer-Lundberg only");
    const ScaleEvaluator wp(cfg.model, p);
    auto eval = [&](const PathOutcome& o) -> std::array<double, 1> {
        const bool hit = o.end == End::event && o.time < cfg.horizon;
        return {hit ? std::exp(-q * o.time) * wp.W(o.value + z) : 0.0};
    };
    const CramerLundberg m = cfg.model.as_cramer_lundberg();
    return run_streams<1>(
               cfg, [&, m, a_low](Rng& rng) { return cl_classical_exit(rng, m, cfg, a_low); }, eval,
               nullptr, false)
        .est[0];
}

}  // namespace parisian
