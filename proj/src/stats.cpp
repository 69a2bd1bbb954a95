#include "heavytail/stats.hpp"

#include <cmath>

#include "heavytail/errors.hpp"

namespace heavytail {

namespace {

constexpr double kEps = 3e-16;
constexpr double kTiny = 1e-300;

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 400; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double gamma_p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n <= 1000; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

double gamma_q_cf(double s, double x) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

} // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw InvalidInput("regularized_incomplete_beta: a, b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double inverse_incomplete_beta(double p, double a, double b) {
    if (!(p >= 0.0) || !(p <= 1.0))
        throw InvalidInput("inverse_incomplete_beta: p must be in [0,1]");
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    // bisect until lo and hi are adjacent doubles; monotone, so this always
    // lands on the best representable quantile (even subnormal ones)
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 2100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (regularized_incomplete_beta(mid, a, b) < p)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double regularized_gamma_q(double s, double x) {
    if (!(s > 0.0) || x < 0.0)
        throw InvalidInput("regularized_gamma_q: require s > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return gamma_q_cf(s, x);
}

double chi_square_sf(double x, double df) {
    if (!(df > 0.0)) throw InvalidInput("chi_square_sf: df must be positive");
    if (x <= 0.0) return 1.0;
    return regularized_gamma_q(df / 2.0, x / 2.0);
}

BinomialInterval clopper_pearson(long long hits, long long trials, double delta) {
    if (trials < 1 || hits < 0 || hits > trials)
        throw InvalidInput("clopper_pearson: require 0 <= hits <= trials");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw InvalidInput("clopper_pearson: delta must be in (0,1)");
    const double h = static_cast<double>(hits);
    const double n = static_cast<double>(trials);
    BinomialInterval ci;
    ci.low = hits == 0 ? 0.0 : inverse_incomplete_beta(delta / 2.0, h, n - h + 1.0);
    ci.high =
        hits == trials ? 1.0 : inverse_incomplete_beta(1.0 - delta / 2.0, h + 1.0, n - h);
    return ci;
}

} // namespace heavytail
