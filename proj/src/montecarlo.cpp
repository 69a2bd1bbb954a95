#include "heavytail/montecarlo.hpp"

#include <cmath>
#include <thread>

#include "heavytail/errors.hpp"
#include "heavytail/format.hpp"
#include "heavytail/stats.hpp"

namespace heavytail {

std::string to_string(Side side) {
    switch (side) {
        case Side::Right: return "right";
        case Side::Left: return "left";
        case Side::CenteredRight: return "centered-right";
        case Side::CenteredLeft: return "centered-left";
        case Side::CenteredAbs: return "centered-abs";
    }
    return "?";
}

Side side_from_string(const std::string& s) {
    if (s == "right") return Side::Right;
    if (s == "left") return Side::Left;
    if (s == "centered-right") return Side::CenteredRight;
    if (s == "centered-left") return Side::CenteredLeft;
    if (s == "centered-abs") return Side::CenteredAbs;
    throw InvalidInput("unknown side: " + s);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::BoundHolds: return "bound_holds";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::BoundViolated: return "bound_violated";
    }
    return "?";
}

TailClassSpec ExperimentPlan::aggregated_spec() const {
    if (dists.empty()) throw InvalidInput("ExperimentPlan: no distributions");
    std::vector<TailClassSpec> specs;
    specs.reserve(dists.size());
    for (const auto& d : dists) specs.push_back(d.certified());
    return aggregate_sequence(specs);
}

double ExperimentPlan::threshold() const {
    const TailClassSpec agg = aggregated_spec();
    const double nd = static_cast<double>(n);
    switch (side) {
        case Side::Right:
            return std::pow(nd, 1.0 / agg.alpha_r() + epsilon);
        case Side::Left:
            return -std::pow(nd, 1.0 / agg.alpha_l() + epsilon);
        default: {
            const double alpha = agg.min_alpha();
            if (alpha <= 1.0)
                throw InvalidInput("centered sides require the concentrated regime");
            const double x = std::pow(nd, std::max(1.0 / alpha, 0.5) + epsilon);
            return side == Side::CenteredLeft ? -x : x;
        }
    }
}

namespace {

bool is_centered(Side s) {
    return s == Side::CenteredRight || s == Side::CenteredLeft || s == Side::CenteredAbs;
}

void validate_plan(const ExperimentPlan& plan) {
    if (plan.dists.empty()) throw InvalidInput("ExperimentPlan: no distributions");
    if (plan.n < 1) throw InvalidInput("ExperimentPlan: n must be >= 1");
    if (plan.trials < 100) throw InvalidInput("ExperimentPlan: trials must be >= 100");
    if (plan.workers < 1) throw InvalidInput("ExperimentPlan: workers must be >= 1");
}

double centered_mean(const ExperimentPlan& plan) {
    // E S_n computed analytically, never estimated
    double mean = 0.0;
    const long long d_count = static_cast<long long>(plan.dists.size());
    for (long long d = 0; d < d_count; ++d) {
        const auto e = plan.dists[d].expectation_tail_sum();
        if (!e)
            throw InvalidInput("centered side requires a finite mean for every summand: " +
                               plan.dists[d].id() + " diverges");
        const long long count = plan.n / d_count + (d < plan.n % d_count ? 1 : 0);
        mean += *e * static_cast<double>(count);
    }
    return mean;
}

double trial_sum(const ExperimentPlan& plan, long long t) {
    RngStream rng(plan.seed, static_cast<std::uint64_t>(t));
    const std::size_t d_count = plan.dists.size();
    double s = 0.0;
    for (long long i = 0; i < plan.n; ++i)
        s += static_cast<double>(plan.dists[i % d_count].sample(rng));
    return s;
}

// Runs fn(t) for t in [0, trials) on plan.workers threads. The partition has
// no effect on results: trial t is a pure function of (seed, t).
template <typename Fn>
void parallel_trials(const ExperimentPlan& plan, Fn&& fn) {
    const int workers = plan.workers;
    if (workers == 1) {
        for (long long t = 0; t < plan.trials; ++t) fn(t);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            for (long long t = w; t < plan.trials; t += workers) fn(t);
        });
    }
    for (auto& th : threads) th.join();
}

} // namespace

EmpiricalTailEstimate run_experiment(const ExperimentPlan& plan) {
    validate_plan(plan);
    const double thr = plan.threshold();
    const bool centered = is_centered(plan.side);
    const double mean = centered ? centered_mean(plan) : 0.0;

    std::vector<long long> hits_per_worker(plan.workers, 0);
    parallel_trials(plan, [&](long long t) {
        const double s = trial_sum(plan, t);
        bool hit = false;
        switch (plan.side) {
            case Side::Right: hit = s >= thr; break;
            case Side::Left: hit = s <= thr; break;
            case Side::CenteredRight: hit = s - mean >= thr; break;
            case Side::CenteredLeft: hit = s - mean <= thr; break;
            case Side::CenteredAbs: hit = std::fabs(s - mean) >= thr; break;
        }
        if (hit) ++hits_per_worker[t % plan.workers];
    });
    long long hits = 0;
    for (long long h : hits_per_worker) hits += h;

    EmpiricalTailEstimate est;
    est.hits = hits;
    est.trials = plan.trials;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(plan.trials);
    const BinomialInterval ci = clopper_pearson(hits, plan.trials, 0.01);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    est.threshold_x = thr;
    est.side = plan.side;
    if (centered) est.mean_used = mean;
    est.seed = plan.seed;
    return est;
}

std::vector<double> centered_abs_samples(const ExperimentPlan& plan) {
    validate_plan(plan);
    const double mean = centered_mean(plan);
    std::vector<double> out(static_cast<std::size_t>(plan.trials));
    parallel_trials(plan, [&](long long t) {
        out[static_cast<std::size_t>(t)] = std::fabs(trial_sum(plan, t) - mean);
    });
    return out;
}

nlohmann::json EmpiricalTailEstimate::to_json() const {
    nlohmann::json j;
    j["hits"] = hits;
    j["trials"] = trials;
    j["p_hat"] = p_hat;
    j["ci_low"] = ci_low;
    j["ci_high"] = ci_high;
    j["x"] = threshold_x;
    j["side"] = to_string(side);
    j["seed"] = seed;
    if (mean_used) j["mean_used"] = *mean_used;
    return j;
}

namespace {

bool side_matches_kind(Side side, BoundKind kind) {
    switch (kind) {
        case BoundKind::Thm1Right: return side == Side::Right;
        case BoundKind::Thm2Left: return side == Side::Left;
        case BoundKind::Thm3RightCentered: return side == Side::CenteredRight;
        case BoundKind::Thm4LeftCentered: return side == Side::CenteredLeft;
        case BoundKind::PreAsymptotic:
            return side == Side::Right || side == Side::CenteredRight;
    }
    return false;
}

void check_threshold(double est_x, double bound_x) {
    if (std::fabs(est_x - bound_x) > 1e-9 * std::max(1.0, std::fabs(bound_x)))
        throw InvalidInput("compare: estimate and bound disagree on threshold");
}

Verdict verdict_against(const EmpiricalTailEstimate& est, double value) {
    if (est.ci_high <= value) return Verdict::BoundHolds;
    if (est.ci_low > value) return Verdict::BoundViolated;
    return Verdict::Inconclusive;
}

} // namespace

Verdict compare(const EmpiricalTailEstimate& estimate, const BoundEvaluation& bound) {
    if (!side_matches_kind(estimate.side, bound.kind))
        throw InvalidInput("compare: estimate side incompatible with bound kind " +
                           to_string(bound.kind));
    check_threshold(estimate.threshold_x, bound.threshold_x);
    return verdict_against(estimate, bound.value);
}

Verdict compare_sum(const EmpiricalTailEstimate& estimate,
                    const BoundEvaluation& right_bound,
                    const BoundEvaluation& left_bound) {
    if (estimate.side != Side::CenteredAbs)
        throw InvalidInput("compare_sum: estimate side must be centered-abs");
    check_threshold(estimate.threshold_x, right_bound.threshold_x);
    check_threshold(-estimate.threshold_x, left_bound.threshold_x);
    const double value = std::min(1.0, right_bound.value + left_bound.value);
    return verdict_against(estimate, value);
}

void write_report_header(std::ostream& out) {
    out << "dist_id,n,epsilon,side,trials,seed,x,hits,p_hat,ci_low,ci_high,"
           "bound_kind,bound_value,verdict\n";
}

void write_report_row(std::ostream& out, const std::string& dist_id,
                      long long n, double epsilon,
                      const EmpiricalTailEstimate& estimate,
                      const std::string& bound_kind, double bound_value,
                      Verdict verdict) {
    out << dist_id << ',' << n << ',' << fmt_double(epsilon) << ','
        << to_string(estimate.side) << ',' << estimate.trials << ',' << estimate.seed
        << ',' << fmt_double(estimate.threshold_x) << ',' << estimate.hits << ','
        << fmt_double(estimate.p_hat) << ',' << fmt_double(estimate.ci_low) << ','
        << fmt_double(estimate.ci_high) << ',' << bound_kind << ','
        << fmt_double(bound_value) << ',' << to_string(verdict) << '\n';
}

} // namespace heavytail
