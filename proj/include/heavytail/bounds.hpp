#pragma once

#include <map>
#include <span>
#include <string>

#include <json.hpp>

#include "heavytail/exact_engine.hpp"
#include "heavytail/tail_spec.hpp"

namespace heavytail {

enum class BoundKind {
    Thm1Right,        // P[S_n >= n^(1/alpha_r + eps)] <= (V + e^2V) n^(-alpha_r eps)
    Thm2Left,         // mirror with (W, alpha_l)
    Thm3RightCentered, // P[S_n - E S_n >= x] <= V n^(1-max(1,a/2)-a eps) + e^2V n^(-a eps)
    Thm4LeftCentered,  // mirror with W
    PreAsymptotic,    // n V x^-a + exp(-mu x + n T + V e^(mu x) n x^-a)
};

std::string to_string(BoundKind kind);

struct BoundEvaluation {
    BoundKind kind = BoundKind::Thm1Right;
    double threshold_x = 0.0; // signed: negative for left-sided events
    double raw_value = 0.0;   // unclamped
    double value = 0.0;       // clamp(raw_value, 0, 1)
    bool vacuous = false;     // raw_value >= 1
    // Additive decomposition; entries sum to raw_value.
    std::map<std::string, double> terms;
    // Non-additive diagnostics (t0/tau, n*T, mu*x, ...); informational only.
    std::map<std::string, double> diagnostics;

    nlohmann::json to_json() const;
};

BoundEvaluation thm1_bound(const TailClassSpec& spec, long long n, double epsilon);
BoundEvaluation thm2_bound(const TailClassSpec& spec, long long n, double epsilon);
BoundEvaluation thm3_bound(const TailClassSpec& spec, long long n, double epsilon);
BoundEvaluation thm4_bound(const TailClassSpec& spec, long long n, double epsilon);

// Finite-n bound the theorems are derived from, valid for every n with an
// admissible schedule (mu < 1): the aggregated sequence spec picks the regime
// and the explicit-constant remainder term (T0 or tau).
BoundEvaluation preasymptotic_bound(std::span<const TailClassSpec> dist_specs,
                                    long long n, double epsilon,
                                    const MuSchedule& schedule);

} // namespace heavytail
