#include "heavytail/exact_engine.hpp"

#include <cmath>
#include <limits>

#include "heavytail/errors.hpp"

namespace heavytail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integral bound of Lemma Ii2's I0 term, mu * int_1^M t^-alpha dt evaluated
// through the proof's closed form with M = 2 alpha / mu:
//   (2 alpha)^(1-alpha)/(1-alpha) mu^alpha   for 0 < alpha < 1,
//   mu (ln 2 - ln mu)                        for alpha = 1.
double i0_bound(double alpha, double mu) {
    if (alpha == 1.0) return mu * (std::log(2.0) - std::log(mu));
    return std::pow(2.0 * alpha, 1.0 - alpha) / (1.0 - alpha) * std::pow(mu, alpha);
}

// Ji2's integral part: int_1^M t^(1-alpha) dt, logarithmic branch at alpha = 2.
double j2_integral(double alpha, double m_split) {
    if (alpha == 2.0) return std::log(m_split);
    return (std::pow(m_split, 2.0 - alpha) - 1.0) / (2.0 - alpha);
}

double j0_bound(double alpha, double mu, double v) {
    const double m_split = 2.0 * alpha / mu;
    return 2.0 * v * mu * mu +
           v * std::exp(2.0 * alpha) * mu * mu * (1.0 + j2_integral(alpha, m_split));
}

// Shared first term of Lemmas Ii3/Ji3: V e^(3 alpha) (2 alpha)^-alpha mu^alpha.
double i3_head(double alpha, double mu, double v) {
    return v * std::exp(3.0 * alpha) * std::pow(2.0 * alpha, -alpha) * std::pow(mu, alpha);
}

} // namespace

double sigma_term(double alpha, double mu) {
    if (!(alpha > 1.0)) throw WrongRegime("sigma_term: alpha must be > 1");
    if (!(mu > 0.0) || !(mu < 1.0)) throw InvalidSchedule("sigma_term: mu must be in (0,1)");
    if (alpha == 2.0) return -mu * mu * std::log(mu);
    if (alpha < 2.0) return (std::pow(mu, alpha) - mu * mu) / (2.0 - alpha);
    return (mu * mu - std::pow(mu, alpha)) / (alpha - 2.0);
}

double t0_term(double alpha, double mu, double v_const) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw WrongRegime("t0_term: alpha must be in (0,1]");
    if (!(mu > 0.0) || !(mu < 1.0)) throw InvalidSchedule("t0_term: mu must be in (0,1)");
    return 2.0 * mu + v_const * std::exp(2.0 * alpha) * i0_bound(alpha, mu) +
           i3_head(alpha, mu, v_const);
}

double tau_term(double alpha, double mu, double v_const, double w_const) {
    if (!(alpha > 1.0)) throw WrongRegime("tau_term: alpha must be > 1");
    if (!(mu > 0.0) || !(mu < 1.0)) throw InvalidSchedule("tau_term: mu must be in (0,1)");
    const double w_part = w_const * (mu * mu + std::pow(mu, alpha + 1.0) +
                                     std::pow(mu, alpha) / (alpha - 1.0) +
                                     sigma_term(alpha, mu));
    return w_part + j0_bound(alpha, mu, v_const) + i3_head(alpha, mu, v_const);
}

MuSchedule mu_schedule(long long n, double epsilon, double alpha) {
    if (n < 2) throw InvalidInput("mu_schedule: n must be >= 2");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InvalidInput("mu_schedule: epsilon must be positive");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw InvalidInput("mu_schedule: alpha must be positive");

    const double exponent =
        alpha <= 1.0 ? 1.0 / alpha + epsilon : std::max(1.0 / alpha, 0.5) + epsilon;
    const double nd = static_cast<double>(n);
    const double x = std::pow(nd, exponent);
    if (!std::isfinite(x)) throw UnsupportedScale("mu_schedule: x overflows");
    // mu x = ln(x^alpha / n) = (alpha * exponent - 1) ln n, computed in that
    // algebraic form so the W2/P4 identities hold to machine precision.
    const double mu_x = (alpha * exponent - 1.0) * std::log(nd);
    MuSchedule s;
    s.n = n;
    s.epsilon = epsilon;
    s.alpha = alpha;
    s.x = x;
    s.mu = mu_x / x;
    s.m_split = 2.0 * alpha / s.mu;
    return s;
}

IdentityReport summation_by_parts_check(const IntegerDistribution& dist,
                                        const std::function<double(long long)>& f,
                                        long long a, long long b) {
    if (a < 0 || b < a)
        throw InvalidInput("summation_by_parts_check: require 0 <= a <= b");
    double lhs = 0.0;
    for (long long d = a; d <= b; ++d) {
        const double fd = f(d);
        if (fd < 0.0)
            throw InvalidInput("summation_by_parts_check: f must be nonnegative");
        lhs += fd * dist.pmf(static_cast<double>(d));
    }
    // the proof's form: f(a) P[X>=a] - f(b) P[X>=b+1] + sum (f(d)-f(d-1)) P[X>=d]
    double rhs = f(a) * dist.upper_cdf(static_cast<double>(a)) -
                 f(b) * dist.upper_cdf(static_cast<double>(b) + 1.0);
    for (long long d = a + 1; d <= b; ++d)
        rhs += (f(d) - f(d - 1)) * dist.upper_cdf(static_cast<double>(d));
    return {lhs, rhs, std::fabs(lhs - rhs)};
}

double truncated_mgf(const IntegerDistribution& dist, double mu, double x) {
    if (!(mu > 0.0)) throw InvalidInput("truncated_mgf: mu must be positive");
    if (!(x >= 0.0)) throw InvalidInput("truncated_mgf: x must be >= 0");
    if (mu * x > 700.0)
        throw UnsupportedScale("truncated_mgf: mu*x > 700 exceeds double range");
    return dist.exp_weighted_pmf_sum(mu, -kInf, std::floor(x));
}

IntervalDecomposition interval_decomposition(const IntegerDistribution& dist,
                                             const MuSchedule& schedule,
                                             const TailClassSpec& spec) {
    const double mu = schedule.mu;
    const double x = schedule.x;
    const double m_split = schedule.m_split;
    if (!(mu > 0.0) || mu >= 1.0)
        throw InvalidSchedule("interval_decomposition: mu must be in (0,1)");
    if (m_split >= x)
        throw InvalidSchedule("interval_decomposition: M >= x, split degenerates");
    if (mu * x > 700.0)
        throw UnsupportedScale("interval_decomposition: mu*x > 700");

    const Regime regime = spec.regime();
    const double alpha =
        regime == Regime::SubLinear ? spec.alpha_r() : spec.min_alpha();
    if (regime == Regime::SubLinear && spec.alpha_r() > 1.0)
        throw WrongRegime("interval_decomposition: sublinear regime needs alpha_r <= 1");
    if (regime == Regime::Concentrated && !spec.has_left())
        throw WrongRegime("interval_decomposition: concentrated regime needs both tails");
    if (std::fabs(schedule.alpha - alpha) > 1e-9 * alpha)
        throw InvalidInput("interval_decomposition: schedule alpha does not match spec");

    IntervalDecomposition out;
    out.regime = regime;

    const double seg2_end = std::floor(m_split);
    const double seg3_start =
        std::ceil(m_split) == seg2_end ? seg2_end + 1.0 : std::ceil(m_split);
    const double seg3_end = std::floor(x);

    out.i1 = dist.exp_weighted_pmf_sum(mu, -kInf, 0.0);
    out.i2 = seg2_end >= 1.0 ? dist.exp_weighted_pmf_sum(mu, 1.0, seg2_end) : 0.0;
    out.i3 = seg3_start <= seg3_end
                 ? dist.exp_weighted_pmf_sum(mu, seg3_start, seg3_end)
                 : 0.0;

    const double prob_ge1 = dist.tail_plus(1.0);
    const double prob_le0 = 1.0 - prob_ge1;
    const double v = spec.v_const();
    out.b3 = i3_head(alpha, mu, v) + v * std::exp(mu * x) * std::pow(x, -alpha);
    if (regime == Regime::SubLinear) {
        out.b1 = prob_le0;
        out.b2 = prob_ge1 + 2.0 * mu + v * std::exp(2.0 * alpha) * i0_bound(alpha, mu);
    } else {
        const double w = spec.w_const();
        out.b1 = prob_le0 + mu * dist.partial_mean_nonpos() +
                 w * (mu * mu + std::pow(mu, alpha + 1.0) +
                      std::pow(mu, alpha) / (alpha - 1.0) + sigma_term(alpha, mu));
        out.b2 = prob_ge1 + mu * dist.partial_mean_pos() + j0_bound(alpha, mu, v);
    }
    return out;
}

namespace detail {

namespace {

// Adaptive Simpson for int e^(mu t) t^-alpha dt on [t_lo, t_hi], integrated
// in s = ln t where the integrand is exp(mu e^s + (1-alpha) s).
double adaptive_simpson(double mu, double alpha, double s0, double s2,
                        double h0, double h1, double h2, double whole,
                        int depth) {
    auto h = [&](double s) { return std::exp(mu * std::exp(s) + (1.0 - alpha) * s); };
    const double sm = 0.5 * (s0 + s2);
    const double sl = 0.5 * (s0 + sm), sr = 0.5 * (sm + s2);
    const double hl = h(sl), hr = h(sr);
    const double left = (sm - s0) / 6.0 * (h0 + 4.0 * hl + h1);
    const double right = (s2 - sm) / 6.0 * (h1 + 4.0 * hr + h2);
    const double both = left + right;
    if (depth <= 0 ||
        std::fabs(both - whole) <= 15.0 * (1e-14 * std::fabs(both) + 1e-300))
        return both + (both - whole) / 15.0;
    return adaptive_simpson(mu, alpha, s0, sm, h0, hl, h1, left, depth - 1) +
           adaptive_simpson(mu, alpha, sm, s2, h1, hr, h2, right, depth - 1);
}

double integral_exp_power(double mu, double alpha, double t_lo, double t_hi) {
    auto h = [&](double s) { return std::exp(mu * std::exp(s) + (1.0 - alpha) * s); };
    const double s_lo = std::log(t_lo), s_hi = std::log(t_hi);
    const int panels = std::max(1, static_cast<int>(std::ceil(s_hi - s_lo)));
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = s_lo + (s_hi - s_lo) * i / panels;
        const double b = s_lo + (s_hi - s_lo) * (i + 1) / panels;
        const double m = 0.5 * (a + b);
        const double ha = h(a), hm = h(m), hb = h(b);
        const double whole = (b - a) / 6.0 * (ha + 4.0 * hm + hb);
        total += adaptive_simpson(mu, alpha, a, b, ha, hm, hb, whole, 48);
    }
    return total;
}

double direct_sum(double mu, double alpha, double a, double b) {
    double sum = 0.0, comp = 0.0; // Kahan
    for (double k = a; k <= b; k += 1.0) {
        const double term = std::exp(mu * k - alpha * std::log(k));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

double exp_power_sum_em(double mu, double alpha, double a, double b) {
    // Euler-Maclaurin through the B4 term:
    //   sum_{k=a}^{b} f(k) = int_a^b f + (f(a)+f(b))/2
    //                        + (f'(b)-f'(a))/12 - (f'''(b)-f'''(a))/720 + ...
    auto f = [&](double t) { return std::exp(mu * t - alpha * std::log(t)); };
    auto f1 = [&](double t) { return f(t) * (mu - alpha / t); };
    auto f3 = [&](double t) {
        const double g = mu - alpha / t;
        return f(t) * (g * g * g + 3.0 * g * alpha / (t * t) - 2.0 * alpha / (t * t * t));
    };
    double sum = integral_exp_power(mu, alpha, a, b);
    sum += 0.5 * (f(a) + f(b));
    sum += (f1(b) - f1(a)) / 12.0;
    sum -= (f3(b) - f3(a)) / 720.0;
    return sum;
}

double exp_power_sum(double mu, double alpha, double a, double b) {
    if (!(a >= 1.0) || !(b >= a))
        throw InvalidInput("exp_power_sum: require 1 <= a <= b");
    constexpr double kDirectLimit = 4e6;
    constexpr double kBlock = 1e5;
    if (b - a + 1.0 <= kDirectLimit) return direct_sum(mu, alpha, a, b);
    // direct head and tail blocks, Euler-Maclaurin on the smooth middle
    const double head_end = a + kBlock - 1.0;
    const double tail_start = b - kBlock + 1.0;
    return direct_sum(mu, alpha, a, head_end) +
           exp_power_sum_em(mu, alpha, head_end + 1.0, tail_start - 1.0) +
           direct_sum(mu, alpha, tail_start, b);
}

} // namespace detail

} // namespace heavytail
