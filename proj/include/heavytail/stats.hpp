#pragma once

namespace heavytail {

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double x, double a, double b);

// Inverse of I_x(a, b) in x, by bisection (monotone, always converges).
double inverse_incomplete_beta(double p, double a, double b);

// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x)/Gamma(s).
double regularized_gamma_q(double s, double x);

// Survival function of the chi-square distribution with df degrees of freedom.
double chi_square_sf(double x, double df);

struct BinomialInterval {
    double low = 0.0;
    double high = 1.0;
};

// Exact (Clopper-Pearson) two-sided confidence interval for a binomial
// proportion at confidence 1 - delta. Valid for extreme proportions where
// normal approximations are not.
BinomialInterval clopper_pearson(long long hits, long long trials, double delta);

} // namespace heavytail
