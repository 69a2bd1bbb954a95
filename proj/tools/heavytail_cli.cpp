// heavytail: evaluate concentration bounds for sums of integer-valued random
// variables with power-majorized tails, check the interval lemmas they rest
// on, and verify them against Monte Carlo tail estimates.
//
// Commands: bound, expectation, verify-membership, lemma-grid, simulate,
// full-report. Exit codes: 0 = all checks pass or are inconclusive,
// 1 = usage/config error, 2 = a lemma dominance failure or an empirical
// violation of a non-vacuous preasymptotic bound.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heavytail/bounds.hpp"
#include "heavytail/distribution.hpp"
#include "heavytail/errors.hpp"
#include "heavytail/exact_engine.hpp"
#include "heavytail/format.hpp"
#include "heavytail/lemma_grid.hpp"
#include "heavytail/montecarlo.hpp"
#include "heavytail/tail_spec.hpp"

namespace {

using nlohmann::json;
using namespace heavytail;

json g_config; // loaded from --config, empty object otherwise

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("config file not found: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        // e.what() carries the byte offset of the failure
        throw InvalidInput("malformed JSON config " + path + ": " + e.what());
    }
}

// Flags override config-file values; config overrides defaults.
template <typename T>
T resolve(const CLI::Option* opt, T cli_value, const char* key, T fallback) {
    if (opt != nullptr && opt->count() > 0) return cli_value;
    if (g_config.contains(key)) {
        try {
            return g_config.at(key).get<T>();
        } catch (const json::exception& e) {
            throw InvalidInput(std::string("config field \"") + key + "\": " + e.what());
        }
    }
    return fallback;
}

// Distribution specs in the config may be JSON objects or shorthand strings.
std::string resolve_dist(const CLI::Option* opt, const std::string& cli_value) {
    if (opt != nullptr && opt->count() > 0) return cli_value;
    if (g_config.contains("dist")) {
        const json& d = g_config.at("dist");
        return d.is_string() ? d.get<std::string>() : d.dump();
    }
    return cli_value;
}

template <typename T>
std::vector<T> resolve_list(const CLI::Option* opt, const std::vector<T>& cli_value,
                            const char* key) {
    if (opt != nullptr && opt->count() > 0) return cli_value;
    if (g_config.contains(key)) {
        try {
            return g_config.at(key).get<std::vector<T>>();
        } catch (const json::exception& e) {
            throw InvalidInput(std::string("config field \"") + key + "\": " + e.what());
        }
    }
    return cli_value;
}

// Seed precedence: --seed flag, then HEAVYTAIL_SEED, then config, then 42.
std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t cli_value) {
    if (opt != nullptr && opt->count() > 0) return cli_value;
    if (const char* env = std::getenv("HEAVYTAIL_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw InvalidInput("HEAVYTAIL_SEED is not an unsigned integer");
        }
    }
    if (g_config.contains("seed")) return g_config.at("seed").get<std::uint64_t>();
    return 42;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open output file: " + path);
    return out;
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&tt));
    return buf;
}

struct BoundArgs {
    std::string kind = "thm1";
    double v = 1.0;
    double w = 0.0; // 0 = defaults to v
    double alpha = 0.0;
    double alpha_r = 0.0;
    double alpha_l = 0.0;
    long long n = 0;
    double eps = 0.0;
};

TailClassSpec spec_from_args(const BoundArgs& a, bool need_left) {
    const double ar = a.alpha_r > 0.0 ? a.alpha_r : a.alpha;
    if (!(ar > 0.0)) throw InvalidInput("bound: provide --alpha or --alpha-r");
    if (need_left || a.alpha_l > 0.0 || a.w > 0.0) {
        const double al = a.alpha_l > 0.0 ? a.alpha_l : (a.alpha > 0.0 ? a.alpha : ar);
        const double w = a.w > 0.0 ? a.w : a.v;
        return TailClassSpec::two_sided(ar, a.v, al, w);
    }
    return TailClassSpec::right_only(ar, a.v);
}

int cmd_bound(const BoundArgs& a) {
    BoundEvaluation eval;
    if (a.kind == "thm1") {
        eval = thm1_bound(spec_from_args(a, false), a.n, a.eps);
    } else if (a.kind == "thm2") {
        eval = thm2_bound(spec_from_args(a, true), a.n, a.eps);
    } else if (a.kind == "thm3") {
        eval = thm3_bound(spec_from_args(a, true), a.n, a.eps);
    } else if (a.kind == "thm4") {
        eval = thm4_bound(spec_from_args(a, true), a.n, a.eps);
    } else if (a.kind == "pre") {
        const TailClassSpec spec = spec_from_args(a, false);
        const double alpha = spec.regime() == Regime::SubLinear ? spec.alpha_r()
                                                                : spec.min_alpha();
        const TailClassSpec specs[] = {spec};
        eval = preasymptotic_bound(specs, a.n, a.eps, mu_schedule(a.n, a.eps, alpha));
    } else {
        throw InvalidInput("bound: unknown --kind " + a.kind +
                           " (thm1|thm2|thm3|thm4|pre)");
    }
    std::cout << eval.to_json().dump() << '\n';
    return 0;
}

int cmd_expectation(const std::string& dist_text) {
    const auto dist = IntegerDistribution::parse(dist_text);
    const auto e = dist.expectation_tail_sum();
    if (e)
        std::cout << fmt_double(*e) << '\n';
    else
        std::cout << "divergent\n";
    return 0;
}

int cmd_verify_membership(const std::string& dist_text, const std::string& spec_text,
                          long long k_max) {
    const auto dist = IntegerDistribution::parse(dist_text);
    TailClassSpec spec = dist.certified();
    if (!spec_text.empty()) {
        try {
            spec = TailClassSpec::from_json(json::parse(spec_text));
        } catch (const json::parse_error& e) {
            throw InvalidInput(std::string("malformed --spec JSON: ") + e.what());
        }
    }
    const MembershipReport report = verify_membership(dist, spec, k_max);
    json j = report.to_json();
    j["dist"] = dist.id();
    j["spec"] = spec.to_json();
    std::cout << j.dump() << '\n';
    return 0;
}

json lemma_rows_json(const std::vector<LemmaGridRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"lemma_id", r.lemma_id},
                       {"alpha", r.alpha},
                       {"n", r.n},
                       {"epsilon", r.epsilon},
                       {"exact", r.exact},
                       {"bound", r.bound},
                       {"margin", r.margin},
                       {"pass", r.pass}});
    }
    return arr;
}

int cmd_lemma_grid(const std::vector<double>& alphas, const std::vector<long long>& ns,
                   const std::vector<double>& epsilons, const std::string& out_path,
                   const std::string& format) {
    std::vector<IntegerDistribution> dists;
    if (alphas.empty()) {
        dists = default_lemma_distributions();
    } else {
        for (double a : alphas) {
            dists.push_back(IntegerDistribution::exact_tail_pareto(a, 1.0));
            dists.push_back(IntegerDistribution::two_sided(
                IntegerDistribution::exact_tail_pareto(a, 1.0),
                IntegerDistribution::exact_tail_pareto(a, 1.0), 0.5));
        }
    }
    const auto n_list = ns.empty() ? default_grid_n() : ns;
    const auto eps_list = epsilons.empty() ? default_grid_epsilon() : epsilons;
    if (n_list.empty() || eps_list.empty())
        throw InvalidInput("lemma-grid: grid lists must be non-empty");

    const auto rows = run_lemma_grid(dists, n_list, eps_list);
    long long failures = 0;
    for (const auto& r : rows)
        if (!r.pass) ++failures;
    const bool as_json = format == "json";
    if (!as_json && format != "csv")
        throw InvalidInput("lemma-grid: --format must be csv or json");
    if (out_path.empty()) {
        if (as_json)
            std::cout << lemma_rows_json(rows).dump() << '\n';
        else
            write_lemma_grid_csv(std::cout, rows);
    } else {
        auto out = open_output(out_path);
        if (as_json)
            out << lemma_rows_json(rows).dump() << '\n';
        else
            write_lemma_grid_csv(out, rows);
    }
    std::cerr << "lemma-grid: " << rows.size() << " checks, " << failures
              << " failures\n";
    return failures == 0 ? 0 : 2;
}

struct SimulateArgs {
    std::string dist_text;
    long long n = 0;
    double eps = 0.0;
    std::string side = "right";
    long long trials = 10000;
    std::uint64_t seed = 42;
    int workers = 1;
    std::vector<std::string> bounds; // empty = per-side default
    std::string out_path;
    std::string format = "csv";
};

int cmd_simulate(const SimulateArgs& a) {
    ExperimentPlan plan;
    plan.dists.push_back(IntegerDistribution::parse(a.dist_text));
    plan.n = a.n;
    plan.trials = a.trials;
    plan.epsilon = a.eps;
    plan.side = side_from_string(a.side);
    plan.seed = a.seed;
    plan.workers = a.workers;

    const TailClassSpec agg = plan.aggregated_spec();
    std::vector<std::string> kinds = a.bounds;
    if (kinds.empty()) {
        switch (plan.side) {
            case Side::Right:
                kinds = agg.alpha_r() <= 1.0 ? std::vector<std::string>{"thm1", "pre"}
                                             : std::vector<std::string>{};
                break;
            case Side::Left: kinds = {"thm2"}; break;
            case Side::CenteredRight: kinds = {"thm3", "pre"}; break;
            case Side::CenteredLeft: kinds = {"thm4"}; break;
            case Side::CenteredAbs: kinds = {"union34"}; break;
        }
    }

    const EmpiricalTailEstimate est = run_experiment(plan);
    std::ostringstream csv;
    write_report_header(csv);
    json comparisons = json::array();
    int exit_code = 0;
    for (const auto& kind : kinds) {
        Verdict verdict;
        double value;
        std::string label = kind;
        if (kind == "thm1") {
            const auto b = thm1_bound(agg, plan.n, plan.epsilon);
            verdict = compare(est, b);
            value = b.value;
        } else if (kind == "thm2") {
            const auto b = thm2_bound(agg, plan.n, plan.epsilon);
            verdict = compare(est, b);
            value = b.value;
        } else if (kind == "thm3") {
            const auto b = thm3_bound(agg, plan.n, plan.epsilon);
            verdict = compare(est, b);
            value = b.value;
        } else if (kind == "thm4") {
            const auto b = thm4_bound(agg, plan.n, plan.epsilon);
            verdict = compare(est, b);
            value = b.value;
        } else if (kind == "union34") {
            const auto b3 = thm3_bound(agg, plan.n, plan.epsilon);
            const auto b4 = thm4_bound(agg, plan.n, plan.epsilon);
            verdict = compare_sum(est, b3, b4);
            value = std::min(1.0, b3.value + b4.value);
            label = "thm3+thm4";
        } else if (kind == "pre") {
            const double alpha = agg.regime() == Regime::SubLinear ? agg.alpha_r()
                                                                   : agg.min_alpha();
            const TailClassSpec specs[] = {agg};
            const auto b = preasymptotic_bound(specs, plan.n, plan.epsilon,
                                               mu_schedule(plan.n, plan.epsilon, alpha));
            verdict = compare(est, b);
            value = b.value;
            // the red-flag case: empirical tail provably above the finite-n bound
            if (verdict == Verdict::BoundViolated && !b.vacuous) exit_code = 2;
        } else {
            throw InvalidInput("simulate: unknown bound kind " + kind);
        }
        write_report_row(csv, plan.dists.front().id(), plan.n, plan.epsilon, est, label,
                         value, verdict);
        comparisons.push_back(
            {{"bound_kind", label}, {"bound_value", value}, {"verdict", to_string(verdict)}});
    }
    if (kinds.empty()) {
        write_report_row(csv, plan.dists.front().id(), plan.n, plan.epsilon, est, "none",
                         0.0, Verdict::Inconclusive);
    }
    std::string body;
    if (a.format == "json") {
        json j;
        j["dist"] = plan.dists.front().id();
        j["n"] = plan.n;
        j["epsilon"] = plan.epsilon;
        j["estimate"] = est.to_json();
        j["comparisons"] = comparisons;
        body = j.dump() + "\n";
    } else if (a.format == "csv") {
        body = csv.str();
    } else {
        throw InvalidInput("simulate: --format must be csv or json");
    }
    if (a.out_path.empty()) {
        std::cout << body;
    } else {
        auto out = open_output(a.out_path);
        out << body;
    }
    return exit_code;
}

int cmd_full_report(const std::string& out_dir, std::uint64_t seed, long long trials,
                    int workers) {
    const std::string dir = out_dir.empty() ? "." : out_dir;

    // 1. bound evaluations on a reference spec set
    json bounds_json = json::array();
    const auto spec1 = TailClassSpec::right_only(1.0, 1.0);
    const auto spec2 = TailClassSpec::two_sided(2.0, 1.0, 2.0, 1.0);
    bounds_json.push_back(thm1_bound(spec1, 10000, 0.5).to_json());
    bounds_json.push_back(thm3_bound(spec2, 10000, 0.25).to_json());
    bounds_json.push_back(thm4_bound(spec2, 10000, 0.25).to_json());
    {
        const TailClassSpec specs[] = {spec1};
        bounds_json.push_back(
            preasymptotic_bound(specs, 10000, 0.5, mu_schedule(10000, 0.5, 1.0)).to_json());
    }
    {
        auto out = open_output(dir + "/bounds.json");
        out << bounds_json.dump(2) << '\n';
    }

    // 2. lemma dominance grid
    const auto rows = run_lemma_grid(default_lemma_distributions(), default_grid_n(),
                                     default_grid_epsilon());
    long long lemma_failures = 0;
    for (const auto& r : rows)
        if (!r.pass) ++lemma_failures;
    {
        auto out = open_output(dir + "/lemmas.csv");
        write_lemma_grid_csv(out, rows);
    }

    // 3. simulations against bounds
    struct SimSpec {
        std::string dist;
        long long n;
        double eps;
        std::string side;
    };
    const SimSpec sims[] = {
        {"pareto:0.8:1.0", 1000, 0.4, "right"},
        {"sym_pareto:2.5:1.0", 1000, 0.3, "centered-abs"},
        {"geometric:0.5", 1000, 0.3, "centered-right"},
    };
    long long violations = 0;
    std::ostringstream sim_csv;
    write_report_header(sim_csv);
    for (const auto& s : sims) {
        ExperimentPlan plan;
        plan.dists.push_back(IntegerDistribution::parse(s.dist));
        plan.n = s.n;
        plan.trials = trials;
        plan.epsilon = s.eps;
        plan.side = side_from_string(s.side);
        plan.seed = seed;
        plan.workers = workers;
        const auto agg = plan.aggregated_spec();
        const auto est = run_experiment(plan);
        if (plan.side == Side::CenteredAbs) {
            const auto b3 = thm3_bound(agg, plan.n, plan.epsilon);
            const auto b4 = thm4_bound(agg, plan.n, plan.epsilon);
            const auto verdict = compare_sum(est, b3, b4);
            write_report_row(sim_csv, plan.dists.front().id(), plan.n, plan.epsilon, est,
                             "thm3+thm4", std::min(1.0, b3.value + b4.value), verdict);
        } else {
            const double alpha = agg.regime() == Regime::SubLinear ? agg.alpha_r()
                                                                   : agg.min_alpha();
            const TailClassSpec specs[] = {agg};
            const auto b = preasymptotic_bound(specs, plan.n, plan.epsilon,
                                               mu_schedule(plan.n, plan.epsilon, alpha));
            const auto verdict = compare(est, b);
            if (verdict == Verdict::BoundViolated && !b.vacuous) ++violations;
            write_report_row(sim_csv, plan.dists.front().id(), plan.n, plan.epsilon, est,
                             "pre", b.value, verdict);
        }
    }
    {
        auto out = open_output(dir + "/simulations.csv");
        out << sim_csv.str();
    }

    // 4. summary (generated_at is excluded from stability comparisons)
    json summary;
    summary["generated_at"] = iso8601_now();
    summary["seed"] = seed;
    summary["trials"] = trials;
    summary["lemma_checks"] = rows.size();
    summary["lemma_failures"] = lemma_failures;
    summary["simulation_violations"] = violations;
    summary["ok"] = lemma_failures == 0 && violations == 0;
    {
        auto out = open_output(dir + "/summary.json");
        out << summary.dump(2) << '\n';
    }
    std::cerr << "full-report: wrote bounds.json, lemmas.csv, simulations.csv, "
                 "summary.json to "
              << dir << '\n';
    return (lemma_failures == 0 && violations == 0) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"concentration bounds for sums of power-majorized integer laws"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override it)");

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate a theorem or preasymptotic bound");
    BoundArgs ba;
    auto* b_kind = bound->add_option("--kind", ba.kind, "thm1|thm2|thm3|thm4|pre");
    auto* b_v = bound->add_option("--v", ba.v, "right-tail constant V");
    auto* b_w = bound->add_option("--w", ba.w, "left-tail constant W (defaults to V)");
    auto* b_alpha = bound->add_option("--alpha", ba.alpha, "tail exponent (both sides)");
    auto* b_ar = bound->add_option("--alpha-r", ba.alpha_r, "right tail exponent");
    auto* b_al = bound->add_option("--alpha-l", ba.alpha_l, "left tail exponent");
    auto* b_n = bound->add_option("--n", ba.n, "number of summands");
    auto* b_eps = bound->add_option("--eps", ba.eps, "epsilon");

    // expectation
    auto* expectation = app.add_subcommand("expectation", "tail-sum expectation");
    std::string e_dist;
    auto* e_dist_opt = expectation->add_option("--dist", e_dist, "distribution spec");

    // verify-membership
    auto* membership =
        app.add_subcommand("verify-membership", "check tail majorization on 1..k_max");
    std::string m_dist, m_spec;
    long long m_kmax = 10000;
    auto* m_dist_opt = membership->add_option("--dist", m_dist, "distribution spec");
    auto* m_spec_opt = membership->add_option(
        "--spec", m_spec, "tail spec JSON (default: the certified spec)");
    auto* m_kmax_opt = membership->add_option("--kmax", m_kmax, "largest k checked");

    // lemma-grid
    auto* grid = app.add_subcommand("lemma-grid", "interval lemma dominance grid");
    std::string g_grid = "default", g_out, g_format = "csv";
    std::vector<double> g_alphas, g_eps;
    std::vector<long long> g_ns;
    grid->add_option("--grid", g_grid, "grid name (default)");
    auto* g_out_opt = grid->add_option("--out", g_out, "output path (default stdout)");
    auto* g_alpha_opt = grid->add_option("--alpha-list", g_alphas, "pareto exponents to check");
    auto* g_n_opt = grid->add_option("--n-list", g_ns, "values of n");
    auto* g_eps_opt = grid->add_option("--eps-list", g_eps, "values of epsilon");
    auto* g_fmt_opt = grid->add_option("--format", g_format, "csv|json");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo tail estimate vs bounds");
    SimulateArgs sa;
    auto* s_dist = simulate->add_option("--dist", sa.dist_text, "distribution spec");
    auto* s_n = simulate->add_option("--n", sa.n, "number of summands");
    auto* s_eps = simulate->add_option("--eps", sa.eps, "epsilon");
    auto* s_side = simulate->add_option(
        "--side", sa.side, "right|left|centered-right|centered-left|centered-abs");
    auto* s_trials = simulate->add_option("--trials", sa.trials, "Monte Carlo trials");
    std::uint64_t s_seed_val = 42;
    auto* s_seed = simulate->add_option("--seed", s_seed_val, "RNG seed");
    auto* s_workers = simulate->add_option("--workers", sa.workers, "worker threads");
    simulate->add_option("--bound", sa.bounds, "bounds to compare (thm1..4, pre, union34)");
    auto* s_out = simulate->add_option("--out", sa.out_path, "output path");
    auto* s_fmt = simulate->add_option("--format", sa.format, "csv|json");

    // full-report
    auto* full = app.add_subcommand("full-report", "bounds + lemma grid + simulations");
    std::string f_dir;
    long long f_trials = 2000;
    int f_workers = 2;
    std::uint64_t f_seed_val = 42;
    auto* f_dir_opt = full->add_option("--out-dir", f_dir, "output directory");
    auto* f_trials_opt = full->add_option("--trials", f_trials, "trials per simulation");
    auto* f_seed = full->add_option("--seed", f_seed_val, "RNG seed");
    auto* f_workers_opt = full->add_option("--workers", f_workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (!config_path.empty()) g_config = load_config(config_path);
        if (bound->parsed()) {
            ba.kind = resolve(b_kind, ba.kind, "kind", std::string("thm1"));
            ba.v = resolve(b_v, ba.v, "v", 1.0);
            ba.w = resolve(b_w, ba.w, "w", 0.0);
            ba.alpha = resolve(b_alpha, ba.alpha, "alpha", 0.0);
            ba.alpha_r = resolve(b_ar, ba.alpha_r, "alpha_r", 0.0);
            ba.alpha_l = resolve(b_al, ba.alpha_l, "alpha_l", 0.0);
            ba.n = resolve(b_n, ba.n, "n", 0LL);
            ba.eps = resolve(b_eps, ba.eps, "eps", 0.0);
            return cmd_bound(ba);
        }
        if (expectation->parsed()) {
            e_dist = resolve_dist(e_dist_opt, e_dist);
            if (e_dist.empty()) throw InvalidInput("expectation: --dist required");
            return cmd_expectation(e_dist);
        }
        if (membership->parsed()) {
            m_dist = resolve_dist(m_dist_opt, m_dist);
            m_spec = resolve(m_spec_opt, m_spec, "spec", std::string());
            m_kmax = resolve(m_kmax_opt, m_kmax, "kmax", 10000LL);
            if (m_dist.empty()) throw InvalidInput("verify-membership: --dist required");
            return cmd_verify_membership(m_dist, m_spec, m_kmax);
        }
        if (grid->parsed()) {
            if (g_grid != "default")
                throw InvalidInput("lemma-grid: unknown grid \"" + g_grid + "\"");
            g_out = resolve(g_out_opt, g_out, "out", std::string());
            g_format = resolve(g_fmt_opt, g_format, "format", std::string("csv"));
            g_alphas = resolve_list(g_alpha_opt, g_alphas, "alpha_list");
            g_ns = resolve_list(g_n_opt, g_ns, "n_list");
            g_eps = resolve_list(g_eps_opt, g_eps, "eps_list");
            return cmd_lemma_grid(g_alphas, g_ns, g_eps, g_out, g_format);
        }
        if (simulate->parsed()) {
            sa.dist_text = resolve_dist(s_dist, sa.dist_text);
            sa.n = resolve(s_n, sa.n, "n", 0LL);
            sa.eps = resolve(s_eps, sa.eps, "eps", 0.0);
            sa.side = resolve(s_side, sa.side, "side", std::string("right"));
            sa.trials = resolve(s_trials, sa.trials, "trials", 10000LL);
            sa.seed = resolve_seed(s_seed, s_seed_val);
            sa.workers = resolve(s_workers, sa.workers, "workers", 1);
            sa.out_path = resolve(s_out, sa.out_path, "out", std::string());
            sa.format = resolve(s_fmt, sa.format, "format", std::string("csv"));
            if (sa.dist_text.empty()) throw InvalidInput("simulate: --dist required");
            return cmd_simulate(sa);
        }
        if (full->parsed()) {
            f_dir = resolve(f_dir_opt, f_dir, "out_dir", std::string("."));
            f_trials = resolve(f_trials_opt, f_trials, "trials", 2000LL);
            f_workers = resolve(f_workers_opt, f_workers, "workers", 2);
            return cmd_full_report(f_dir, resolve_seed(f_seed, f_seed_val), f_trials,
                                   f_workers);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
