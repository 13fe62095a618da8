#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "parisian/cli_support.hpp"
#include "parisian/compare.hpp"
#include "parisian/hybrid_identities.hpp"
#include "parisian/quadrature.hpp"
#include "parisian/simulator.hpp"

using namespace parisian;

namespace {

struct ModelOpts {
    std::string kind = "brownian";
    double c = 1.0;
    double sigma = 1.0;
    double eta = 1.0;
    double mu = 1.0;
};

void add_model_options(CLI::App* cmd, ModelOpts& m) {
    cmd->add_option("--model", m.kind, "brownian | cl")->check(CLI::IsMember({"brownian", "cl"}));
    cmd->add_option("--c", m.c, "drift (brownian) or premium rate (cl)");
    cmd->add_option("--sigma", m.sigma, "volatility (brownian)");
    cmd->add_option("--eta", m.eta, "claim arrival rate (cl)");
    cmd->add_option("--mu", m.mu, "claim size parameter (cl)");
}

LevyModel build_model(const ModelOpts& m) {
    if (m.kind == "brownian") return LevyModel::brownian(m.c, m.sigma);
    return LevyModel::cramer_lundberg(m.c, m.eta, m.mu);
}

std::vector<double> grid_or_die(const std::string& text, const char* flag) {
    try {
        return parse_grid(text).values();
    } catch (const GridParseError& e) {
        throw CLI::ValidationError(std::string(flag) + ": " + e.what());
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PARISIAN_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

struct Sink {
    std::string path;
    std::ofstream file;
    std::ostream& out() {
        if (!path.empty() && !file.is_open()) {
            file.open(path);
            if (!file) throw CLI::ValidationError("--output: cannot open '" + path + "'");
        }
        return path.empty() ? std::cout : file;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parisian ruin under a hybrid observation scheme: formulas and Monte Carlo"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags override it");

    ModelOpts model_scale, model_delayed, model_ruin, model_exit, model_gs, model_lemma, model_mc,
        model_cmp;
    Sink sink;
    app.add_option("--output", sink.path, "write CSV here instead of stdout");

    // ---- scale ----
    auto* scale = app.add_subcommand("scale", "evaluate W, Z, Z(.,theta) or scriptW on a grid");
    add_model_options(scale, model_scale);
    std::string scale_fn = "W", scale_x = "0:2:0.5";
    double scale_q = 0.0, scale_theta = 0.0, scale_s = 0.0, scale_a = 0.0;
    scale->add_option("--fn", scale_fn)->check(CLI::IsMember({"W", "Z", "Ztheta", "scriptW"}));
    scale->add_option("--x", scale_x, "grid start:stop:step or a single value");
    scale->add_option("--q", scale_q);
    scale->add_option("--theta", scale_theta);
    scale->add_option("--s", scale_s, "second index shift for scriptW");
    scale->add_option("--a", scale_a, "lower subscript for scriptW");

    // ---- delayed ----
    auto* delayed = app.add_subcommand("delayed", "evaluate delayed scale functions");
    add_model_options(delayed, model_delayed);
    std::string delayed_fn = "lambda_r", delayed_x = "0:2:0.5";
    double delayed_p = 0.0, delayed_s = 0.0, delayed_r = 1.0;
    delayed->add_option("--fn", delayed_fn)->check(CLI::IsMember({"lambda_r", "lambda_rs"}));
    delayed->add_option("--x", delayed_x);
    delayed->add_option("--p", delayed_p);
    delayed->add_option("--s", delayed_s);
    delayed->add_option("--r", delayed_r);

    // ---- ruin ----
    auto* ruin = app.add_subcommand("ruin", "hybrid Parisian ruin probability");
    add_model_options(ruin, model_ruin);
    std::string ruin_x = "0:2:0.5";
    double ruin_r = 1.0, ruin_lambda = 1.0;
    ruin->add_option("--x", ruin_x);
    ruin->add_option("--r", ruin_r);
    ruin->add_option("--lambda", ruin_lambda);

    // ---- exit ----
    auto* exit_cmd = app.add_subcommand("exit", "two-sided exit identities");
    add_model_options(exit_cmd, model_exit);
    std::string exit_identity = "th2", exit_x = "0:1:0.5";
    double exit_b = 2.0, exit_r = 1.0, exit_lambda = 1.0, exit_q = 0.0, exit_p = 0.0;
    exit_cmd->add_option("--identity", exit_identity)
        ->check(CLI::IsMember({"th1", "th2", "th3", "mixed", "poisson"}));
    exit_cmd->add_option("--x", exit_x);
    exit_cmd->add_option("--b", exit_b);
    exit_cmd->add_option("--r", exit_r);
    exit_cmd->add_option("--lambda", exit_lambda);
    exit_cmd->add_option("--q", exit_q);
    exit_cmd->add_option("--p", exit_p);

    // ---- gerber-shiu ----
    auto* gs = app.add_subcommand("gerber-shiu", "Gerber-Shiu density at Poisson-observed ruin");
    add_model_options(gs, model_gs);
    std::string gs_y = "-3:0:0.25";
    double gs_x = 1.0, gs_bar = 2.0, gs_q = 0.0, gs_lambda = 1.0;
    bool gs_unbounded = false;
    gs->add_option("--y", gs_y);
    gs->add_option("--x", gs_x);
    gs->add_option("--a-bar", gs_bar, "upper barrier");
    gs->add_flag("--unbounded", gs_unbounded, "use the a -> infinity variant");
    gs->add_option("--q", gs_q);
    gs->add_option("--lambda", gs_lambda);

    // ---- lemma ----
    auto* lemma = app.add_subcommand("lemma", "closed forms of the technical lemmas");
    add_model_options(lemma, model_lemma);
    std::string lemma_which = "w";
    double lw_p = 1.0, lw_q = 0.5, lw_lambda = 1.0, lw_x = 1.0, lw_b = 2.0, lw_z = 1.0, lw_r = 1.0,
           lw_a = 0.0;
    lemma->add_option("--which", lemma_which)->check(CLI::IsMember({"w", "lambda", "classical"}));
    lemma->add_option("--p", lw_p);
    lemma->add_option("--q", lw_q);
    lemma->add_option("--lambda", lw_lambda);
    lemma->add_option("--x", lw_x);
    lemma->add_option("--b", lw_b);
    lemma->add_option("--z", lw_z);
    lemma->add_option("--r", lw_r);
    lemma->add_option("--a-low", lw_a);

    // ---- mc ----
    auto* mc = app.add_subcommand("mc", "run the Monte Carlo simulator");
    add_model_options(mc, model_mc);
    std::string mc_scheme = "hybrid";
    double mc_x = 0.0, mc_a = 0.0, mc_b = 2.0, mc_r = 1.0, mc_lambda = 1.0, mc_q = 0.0, mc_p = 0.0,
           mc_z = 1.0, mc_horizon = 200.0, mc_alow = 0.0;
    std::int64_t mc_n = 100000;
    std::uint64_t mc_seed = default_seed();
    int mc_streams = 64;
    bool mc_serial = false, mc_with_b = false;
    mc->add_option("--scheme", mc_scheme)
        ->check(CLI::IsMember({"hybrid", "two-sided", "t0", "classical", "mixed", "classical-exit"}));
    mc->add_option("--x", mc_x);
    mc->add_option("--a", mc_a, "recovery barrier");
    mc->add_option("--b", mc_b)->each([&](const std::string&) { mc_with_b = true; });
    mc->add_option("--r", mc_r);
    mc->add_option("--lambda", mc_lambda);
    mc->add_option("--q", mc_q);
    mc->add_option("--p", mc_p);
    mc->add_option("--z", mc_z);
    mc->add_option("--a-low", mc_alow);
    mc->add_option("--n", mc_n);
    mc->add_option("--seed", mc_seed);
    mc->add_option("--streams", mc_streams);
    mc->add_option("--horizon", mc_horizon);
    mc->add_flag("--serial", mc_serial, "disable the OpenMP runner");

    // ---- compare ----
    auto* cmp = app.add_subcommand("compare", "formula vs Monte Carlo, one CSV row per identity");
    add_model_options(cmp, model_cmp);
    std::vector<std::string> cmp_identities;
    double cmp_x = 1.0, cmp_b = 2.0, cmp_r = 1.0, cmp_lambda = 1.0, cmp_q = 0.0, cmp_p = 0.0,
           cmp_z = 1.0, cmp_alow = 0.0, cmp_horizon = 200.0;
    std::int64_t cmp_n = 1'000'000;
    std::uint64_t cmp_seed = default_seed();
    int cmp_streams = 64;
    cmp->add_option("--identity", cmp_identities, "one or more identities to check")->required();
    cmp->add_option("--x", cmp_x);
    cmp->add_option("--b", cmp_b);
    cmp->add_option("--r", cmp_r);
    cmp->add_option("--lambda", cmp_lambda);
    cmp->add_option("--q", cmp_q);
    cmp->add_option("--p", cmp_p);
    cmp->add_option("--z", cmp_z);
    cmp->add_option("--a-low", cmp_alow);
    cmp->add_option("--n", cmp_n);
    cmp->add_option("--seed", cmp_seed);
    cmp->add_option("--streams", cmp_streams);
    cmp->add_option("--horizon", cmp_horizon);

    try {
        app.parse(argc, argv);

        if (scale->parsed()) {
            const auto model = build_model(model_scale);
            const auto grid = grid_or_die(scale_x, "--x");
            auto& out = sink.out();
            out << csv_line({"x", "value"});
            const ScaleEvaluator base(model, scale_q);
            const ScaleEvaluator shifted(model, scale_q + scale_s);
            for (double x : grid) {
                double v;
                if (scale_fn == "W")
                    v = base.W(x);
                else if (scale_fn == "Z")
                    v = base.Z(x);
                else if (scale_fn == "Ztheta")
                    v = base.Z_theta(x, scale_theta);
                else
                    v = script_W(base, shifted, scale_a, x);
                out << csv_line({format_number(x), format_number(v)});
            }
        } else if (delayed->parsed()) {
            const auto model = build_model(model_delayed);
            const auto grid = grid_or_die(delayed_x, "--x");
            auto& out = sink.out();
            out << csv_line({"x", "value"});
            for (double x : grid) {
                const double v = delayed_fn == "lambda_r"
                                     ? lambda_r(model, delayed_p, x, delayed_r)
                                     : lambda_rs(model, {delayed_p, delayed_r, delayed_s, x});
                out << csv_line({format_number(x), format_number(v)});
            }
        } else if (ruin->parsed()) {
            const auto model = build_model(model_ruin);
            const auto grid = grid_or_die(ruin_x, "--x");
            auto& out = sink.out();
            out << csv_line({"x", "r", "lambda", "ruin_probability"});
            for (double x : grid)
                out << csv_line({format_number(x), format_number(ruin_r), format_number(ruin_lambda),
                                 format_number(ruin_probability(model, x, ruin_r, ruin_lambda))});
        } else if (exit_cmd->parsed()) {
            const auto model = build_model(model_exit);
            const auto grid = grid_or_die(exit_x, "--x");
            auto& out = sink.out();
            out << csv_line({"identity", "x", "value"});
            for (double x : grid) {
                double v;
                if (exit_identity == "th1")
                    v = ruin_before_exit_laplace(model, {x, exit_b, exit_r, exit_lambda, exit_q});
                else if (exit_identity == "th2")
                    v = exit_before_ruin_laplace(model, {x, exit_b, exit_r, exit_lambda, exit_q});
                else if (exit_identity == "th3")
                    v = ruin_laplace(model, {x, exit_b, exit_r, exit_lambda, exit_q});
                else if (exit_identity == "mixed")
                    v = mixed_exit_laplace(model, exit_p, x, exit_b, exit_r, exit_lambda);
                else
                    v = poisson_exit_laplace(model, exit_q, x, exit_b, exit_lambda);
                out << csv_line({exit_identity, format_number(x), format_number(v)});
            }
        } else if (gs->parsed()) {
            const auto model = build_model(model_gs);
            const auto grid = grid_or_die(gs_y, "--y");
            auto& out = sink.out();
            out << csv_line({"y", "density"});
            const double bar = gs_unbounded ? std::numeric_limits<double>::infinity() : gs_bar;
            for (double y : grid)
                out << csv_line({format_number(y),
                                 format_number(gerber_shiu_density(model, gs_q, gs_lambda, gs_x, bar, y))});
        } else if (lemma->parsed()) {
            const auto model = build_model(model_lemma);
            auto& out = sink.out();
            if (lemma_which == "w") {
                out << csv_line({"which", "value"});
                out << csv_line({"lemma_w", format_number(lemma_W_at_T0(model, lw_p, lw_q, lw_lambda,
                                                                        lw_x, lw_b, lw_z))});
            } else if (lemma_which == "lambda") {
                const auto v = lemma_Lambda_at_T0(model, lw_q, lw_lambda, lw_x, lw_b, lw_r);
                out << csv_line({"which", "value"});
                out << csv_line({"lemma_lambda", format_number(v.plain)});
                out << csv_line({"lemma_lambda_q", format_number(v.q_indexed)});
            } else {
                out << csv_line({"which", "value"});
                out << csv_line({"classical_exit",
                                 format_number(classical_exit_identity(model, lw_p, lw_q, lw_a, lw_x,
                                                                       lw_b, lw_z))});
            }
        } else if (mc->parsed()) {
            const auto model = build_model(model_mc);
            SimConfig cfg{model};
            cfg.x0 = mc_x;
            cfg.recovery_barrier = mc_a;
            cfg.grace = mc_r;
            cfg.inspection_rate = mc_lambda;
            if (mc_with_b || mc_scheme == "two-sided" || mc_scheme == "t0" || mc_scheme == "mixed" ||
                mc_scheme == "classical-exit")
                cfg.upper_barrier = mc_b;
            cfg.horizon = mc_horizon;
            cfg.replications = mc_n;
            cfg.seed = mc_seed;
            cfg.stream_count = mc_streams;
            cfg.parallel = !mc_serial;

            auto& out = sink.out();
            out << csv_line({"scheme", "functional", "mean", "std_error", "n", "truncated_fraction",
                             "seed"});
            auto emit = [&](const std::string& name, const MCEstimate& e) {
                out << csv_line({mc_scheme, name, format_number(e.mean), format_number(e.std_error),
                                 std::to_string(e.n), format_number(e.truncated_fraction),
                                 std::to_string(e.seed)});
            };
            if (mc_scheme == "hybrid") {
                const auto est = simulate_hybrid(cfg, mc_q);
                emit("probability", est.probability);
                emit("laplace", est.laplace);
            } else if (mc_scheme == "two-sided") {
                const auto est = simulate_two_sided(cfg, mc_q);
                emit("exit_probability", est.exit_probability);
                emit("exit_laplace", est.exit_laplace);
                emit("ruin_laplace", est.ruin_laplace);
            } else if (mc_scheme == "t0") {
                const auto est = simulate_T0_functionals(cfg, mc_q, mc_p, mc_z);
                emit("lemma_w", est.lemma_w);
                emit("lemma_lambda", est.lemma_lambda_plain);
                emit("lemma_lambda_q", est.lemma_lambda_q);
                emit("ruin_mass", est.ruin_mass);
                emit("exit_laplace", est.exit_laplace);
            } else if (mc_scheme == "classical") {
                emit("probability", simulate_classical_parisian(cfg));
            } else if (mc_scheme == "mixed") {
                emit("exit_laplace", simulate_mixed_exit(cfg, mc_p));
            } else {
                emit("classical_exit", simulate_classical_exit(cfg, mc_p, mc_q, mc_alow, mc_z));
            }
        } else if (cmp->parsed()) {
            const auto model = build_model(model_cmp);
            std::vector<ComparisonRow> rows;
            for (const auto& id : cmp_identities) {
                ComparisonCase c{id,    model,  cmp_x,    cmp_b,    cmp_r,       cmp_lambda,
                                 cmp_q, cmp_p,  cmp_z,    cmp_alow, cmp_n,       cmp_seed,
                                 cmp_streams,   cmp_horizon};
                rows.push_back(run_comparison(c));
            }
            sink.out() << comparison_csv(rows);
            for (const auto& r : rows)
                if (!r.pass) return 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
