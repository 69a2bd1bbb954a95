#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "heavytail/rng.hpp"
#include "heavytail/tail_spec.hpp"

namespace heavytail {

// Exactly computable integer-valued laws with certified tail majorization.
//
// ExactTailPareto(alpha, v): defined by its right tail, P[X >= k] =
// min(1, v * k^-alpha) for integer k >= 1; support {0, 1, 2, ...} with
// P[X = 0] = 1 - min(1, v). For v <= 1 the tail EQUALS the certificate
// majorant v * k^-alpha at every k >= 1, so the power-law bounds are
// maximally stressed.
//
// Geometric(p): P[X = k] = (1-p)^(k-1) * p on {1, 2, ...}.
//
// PointMass(c): P[X = c] = 1.
//
// TwoSidedMixture(right, left, p_right): draws from `right` with probability
// p_right, otherwise draws from `left` and negates the value. Components may
// themselves be mixtures.
class IntegerDistribution {
public:
    struct ExactTailPareto {
        double alpha;
        double v;
    };
    struct Geometric {
        double p;
    };
    struct PointMass {
        long long c;
    };
    struct TwoSidedMixture {
        std::shared_ptr<const IntegerDistribution> right;
        std::shared_ptr<const IntegerDistribution> left;
        double p_right;
    };
    using Kind = std::variant<ExactTailPareto, Geometric, PointMass, TwoSidedMixture>;

    static IntegerDistribution exact_tail_pareto(double alpha, double v);
    static IntegerDistribution geometric(double p);
    static IntegerDistribution point_mass(long long c);
    static IntegerDistribution two_sided(IntegerDistribution right,
                                         IntegerDistribution left,
                                         double p_right);

    const Kind& kind() const { return kind_; }

    // Exact probabilities. Integer arguments are passed as double so very
    // large support points (heavy tails reach beyond 2^62) stay addressable;
    // every argument is treated as an exact integer.
    double pmf(double k) const;
    double tail_plus(double k) const;  // P[X >= k], k >= 1
    double tail_minus(double k) const; // P[X <= -k], k >= 1
    double upper_cdf(double k) const;  // P[X >= k], any integer k

    // Generalized tails-sum expectation: sum_j F+(j) - sum_j F-(j), each
    // series summed until its analytic remainder bound drops below 1e-10.
    // nullopt means the certified min exponent is <= 1 and the series
    // diverges (Divergent is a value, not an error).
    std::optional<double> expectation_tail_sum() const;

    // sum_{k <= 0} k pmf(k) and sum_{k >= 1} k pmf(k), via tail sums.
    // Require a finite-mean law on the corresponding side.
    double partial_mean_nonpos() const;
    double partial_mean_pos() const;

    // Analytic upper bound on sum_{j > j0} tail(j) for the given side,
    // used as remainder control for the series above.
    double tail_sum_remainder(bool right_side, double j0) const;

    // Inverse transform through the exact tails: the unique k with
    // upper_cdf(k) >= u > upper_cdf(k+1). Values are saturated at +-2^62
    // (only astronomically rare heavy-tail draws reach that; no threshold
    // used anywhere in this library comes close).
    long long invert_upper_cdf(double u) const;
    long long sample(RngStream& rng) const { return invert_upper_cdf(rng.next_unit()); }

    // sum_{lo <= k <= hi} e^(mu k) pmf(k) for any real mu and integer-valued
    // double bounds (+-infinity allowed where the series converges). Exact up
    // to double rounding; huge ranges use a summation-by-parts +
    // Euler-Maclaurin hybrid.
    double exp_weighted_pmf_sum(double mu, double lo, double hi) const;

    const TailClassSpec& certified() const { return certified_; }

    bool has_positive_support() const; // P[X >= 1] > 0
    bool has_negative_support() const; // P[X <= -1] > 0

    std::string id() const;
    nlohmann::json to_json() const;
    static IntegerDistribution from_json(const nlohmann::json& j);
    // Accepts either a JSON object or a shorthand string such as
    // "pareto:0.8:1.0", "geometric:0.5", "point:7",
    // "two_sided:0.5:pareto:2.5:1.0:pareto:2.5:1.0" (symmetric forms only;
    // use JSON for general nesting).
    static IntegerDistribution parse(const std::string& text);

private:
    IntegerDistribution(Kind kind, TailClassSpec certified);

    Kind kind_;
    TailClassSpec certified_;
};

} // namespace heavytail
