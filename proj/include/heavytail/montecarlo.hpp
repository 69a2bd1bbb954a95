#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "heavytail/bounds.hpp"
#include "heavytail/distribution.hpp"

namespace heavytail {

enum class Side { Right, Left, CenteredRight, CenteredLeft, CenteredAbs };

std::string to_string(Side side);
Side side_from_string(const std::string& s);

// A Monte Carlo estimate of one tail probability of S_n. Distributions are
// cycled across the n summands; with a single entry the sum is i.i.d.
// Centered sides subtract the analytic E S_n (tail-sum formula) and require
// a finite mean for every summand.
struct ExperimentPlan {
    std::vector<IntegerDistribution> dists;
    long long n = 0;
    long long trials = 0;
    double epsilon = 0.0;
    Side side = Side::Right;
    std::uint64_t seed = 0;
    int workers = 1;

    // min alpha / max constant over the cycled distributions' certificates.
    TailClassSpec aggregated_spec() const;
    // Signed event threshold per the relevant theorem.
    double threshold() const;
};

struct EmpiricalTailEstimate {
    long long hits = 0;
    long long trials = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;  // exact binomial two-sided 99% interval
    double ci_high = 1.0;
    double threshold_x = 0.0;
    Side side = Side::Right;
    std::optional<double> mean_used; // E S_n when centered
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
};

// Deterministic function of (plan, seed), independent of plan.workers:
// trial t always uses RNG substream (seed, t).
EmpiricalTailEstimate run_experiment(const ExperimentPlan& plan);

// Per-trial |S_n - E S_n| values (same substream contract); for growth-rate
// diagnostics such as empirical percentiles.
std::vector<double> centered_abs_samples(const ExperimentPlan& plan);

enum class Verdict { BoundHolds, Inconclusive, BoundViolated };

std::string to_string(Verdict v);

// BoundHolds when ci_high <= bound value, BoundViolated when ci_low > value,
// Inconclusive when the interval straddles it. Throws InvalidInput when the
// estimate and bound disagree on threshold or side.
Verdict compare(const EmpiricalTailEstimate& estimate, const BoundEvaluation& bound);

// Same, against the sum of two one-sided bounds (union bound for CenteredAbs).
Verdict compare_sum(const EmpiricalTailEstimate& estimate,
                    const BoundEvaluation& right_bound,
                    const BoundEvaluation& left_bound);

// Report row: (dist_id, n, epsilon, side, trials, seed, x, hits, p_hat,
// ci_low, ci_high, bound_kind, bound_value, verdict).
void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const std::string& dist_id,
                      long long n, double epsilon,
                      const EmpiricalTailEstimate& estimate,
                      const std::string& bound_kind, double bound_value,
                      Verdict verdict);

} // namespace heavytail
