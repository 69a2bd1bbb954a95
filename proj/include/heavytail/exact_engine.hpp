#pragma once

#include <functional>

#include "heavytail/distribution.hpp"
#include "heavytail/tail_spec.hpp"

namespace heavytail {

// The (x, mu, M) triple derived from (n, epsilon, alpha):
//   x  = n^(1/alpha + eps)              for alpha <= 1,
//        n^(max(1/alpha, 1/2) + eps)    for alpha > 1,
//   mu = (1/x) * ln(x^alpha / n),
//   M  = 2*alpha / mu.
// mu > 0 holds for every n >= 2 because x^alpha = n^(1+...) > n.
struct MuSchedule {
    long long n = 0;
    double epsilon = 0.0;
    double alpha = 0.0;
    double x = 0.0;
    double mu = 0.0;
    double m_split = 0.0;
};

MuSchedule mu_schedule(long long n, double epsilon, double alpha);

struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_diff = 0.0;
};

// Checks the discrete summation-by-parts identity on [a, b] for f >= 0:
//   sum_{d=a}^{b} f(d) P[X=d]
//     = f(a) P[X>=a] - f(b) P[X>=b+1] + sum_{d=a+1}^{b} (f(d)-f(d-1)) P[X>=d].
// Both sides are evaluated by direct summation; intended for desk-scale b-a.
IdentityReport summation_by_parts_check(const IntegerDistribution& dist,
                                        const std::function<double(long long)>& f,
                                        long long a, long long b);

// Truncated MGF R(mu, x) = sum_{k <= floor(x)} e^(mu k) P[X = k].
// Requires mu > 0 and mu * x <= 700 (UnsupportedScale beyond).
double truncated_mgf(const IntegerDistribution& dist, double mu, double x);

// Exact interval sums of the truncated MGF split at 0 and M = 2*alpha/mu,
// next to the explicit-constant lemma bounds for each segment:
//   i1 over (-inf, 0],  i2 over [1, floor(M)],  i3 over [ceil(M), floor(x)]
// (when M is an integer it belongs to segment 2 only). The b-fields carry
// every big-O constant from the proofs, so i_j <= b_j must hold whenever the
// schedule is admissible; a failure is either a library bug or a genuine
// counterexample.
struct IntervalDecomposition {
    double i1 = 0.0, i2 = 0.0, i3 = 0.0;
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    Regime regime = Regime::SubLinear;
};

IntervalDecomposition interval_decomposition(const IntegerDistribution& dist,
                                             const MuSchedule& schedule,
                                             const TailClassSpec& spec);

// Explicit-constant remainder terms, materialized from the proof lines.
//
// SubLinear (0 < alpha <= 1, constants V):
//   T0(alpha, mu) = 2 mu + V e^(2 alpha) i0_term + V e^(3 alpha) (2 alpha)^-alpha mu^alpha
//   with i0_term = (2 alpha)^(1-alpha)/(1-alpha) mu^alpha   for alpha < 1,
//                  mu (ln 2 - ln mu)                         for alpha = 1.
double t0_term(double alpha, double mu, double v_const);

// Concentrated (alpha > 1, constants V and W):
//   tau(alpha, mu) = W (mu^2 + mu^(alpha+1) + mu^alpha/(alpha-1) + sigma(alpha, mu))
//                  + 2 V mu^2 + V e^(2 alpha) mu^2 (1 + int_1^M t^(1-alpha) dt)
//                  + V e^(3 alpha) (2 alpha)^-alpha mu^alpha,   M = 2 alpha / mu.
double tau_term(double alpha, double mu, double v_const, double w_const);

// sigma(alpha, mu) = mu^2 int_1^{1/mu} t^(1-alpha) dt, with the logarithmic
// branch exactly at alpha = 2.
double sigma_term(double alpha, double mu);

namespace detail {

// sum_{k=a}^{b} e^(mu k) k^-alpha for integer-valued doubles 1 <= a <= b.
// Direct Kahan summation for small ranges, Euler-Maclaurin with direct
// head/tail blocks for huge ones.
double exp_power_sum(double mu, double alpha, double a, double b);
// Euler-Maclaurin path regardless of range length (exposed for tests).
double exp_power_sum_em(double mu, double alpha, double a, double b);

} // namespace detail

} // namespace heavytail
