#include "heavytail/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "heavytail/errors.hpp"
#include "heavytail/exact_engine.hpp"
#include "heavytail/format.hpp"

namespace heavytail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Sample saturation: draws beyond +-2^62 are astronomically rare and no
// threshold in this library is anywhere near that scale.
constexpr double kSat = 4611686018427387904.0; // 2^62

using Pareto = IntegerDistribution::ExactTailPareto;
using Geo = IntegerDistribution::Geometric;
using Point = IntegerDistribution::PointMass;
using Mixture = IntegerDistribution::TwoSidedMixture;

// Largest k >= 1 whose Pareto tail is capped at 1, i.e. v k^-alpha >= 1.
long long pareto_cap(const Pareto& d) {
    if (d.v <= 1.0) return 0;
    long long kc = static_cast<long long>(std::floor(std::pow(d.v, 1.0 / d.alpha)));
    // guard against floating error in the floor
    while (d.v * std::pow(static_cast<double>(kc + 1), -d.alpha) >= 1.0) ++kc;
    while (kc >= 1 && d.v * std::pow(static_cast<double>(kc), -d.alpha) < 1.0) --kc;
    return std::max<long long>(kc, 0);
}

double pareto_tail(const Pareto& d, double k) {
    return std::min(1.0, d.v * std::pow(k, -d.alpha));
}

// Riemann zeta for s > 1, Euler-Maclaurin at N = 32; absolute error far
// below double rounding for s in the range this library uses.
double zeta(double s) {
    const double n = 32.0;
    double sum = 0.0;
    for (int j = 1; j < 32; ++j) sum += std::pow(static_cast<double>(j), -s);
    sum += std::pow(n, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(n, -s);
    sum += s * std::pow(n, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(n, -s - 3.0) / 720.0;
    sum += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(n, -s - 5.0) / 30240.0;
    return sum;
}

double partial_power_sum(double s, long long k_max) {
    double sum = 0.0;
    for (long long j = 1; j <= k_max; ++j) sum += std::pow(static_cast<double>(j), -s);
    return sum;
}

} // namespace

IntegerDistribution::IntegerDistribution(Kind kind, TailClassSpec certified)
    : kind_(std::move(kind)), certified_(std::move(certified)) {}

IntegerDistribution IntegerDistribution::exact_tail_pareto(double alpha, double v) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw InvalidInput("exact_tail_pareto: alpha must be positive");
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidInput("exact_tail_pareto: v must be positive");
    // The right tail equals v k^-alpha wherever it is below 1, so (alpha, v)
    // is an exact certificate. The left tail is identically zero; certify it
    // with the same constants.
    return IntegerDistribution(Pareto{alpha, v},
                               TailClassSpec::two_sided(alpha, v, alpha, v));
}

IntegerDistribution IntegerDistribution::geometric(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw InvalidInput("geometric: p must be in (0,1)");
    // Certify alpha = 2: V = max_k (1-p)^(k-1) k^2, a finite unimodal max.
    const double lq = std::log1p(-p);
    const long long peak = static_cast<long long>(std::ceil(1.0 - 2.0 / lq));
    const long long limit = std::max<long long>(3 * peak + 10, 50);
    double v = 0.0;
    for (long long k = 1; k <= limit; ++k) {
        const double kd = static_cast<double>(k);
        v = std::max(v, std::exp((kd - 1.0) * lq) * kd * kd);
    }
    return IntegerDistribution(Geo{p}, TailClassSpec::two_sided(2.0, v, 2.0, v));
}

IntegerDistribution IntegerDistribution::point_mass(long long c) {
    const double cd = static_cast<double>(c);
    const double v = c >= 1 ? cd * cd * cd : 1.0;
    const double w = c <= -1 ? -cd * cd * cd : 1.0;
    return IntegerDistribution(Point{c}, TailClassSpec::two_sided(3.0, v, 3.0, w));
}

IntegerDistribution IntegerDistribution::two_sided(IntegerDistribution right,
                                                   IntegerDistribution left,
                                                   double p_right) {
    if (!(p_right >= 0.0) || !(p_right <= 1.0))
        throw InvalidInput("two_sided: p_right must be in [0,1]");
    auto r = std::make_shared<const IntegerDistribution>(std::move(right));
    auto l = std::make_shared<const IntegerDistribution>(std::move(left));
    const double p = p_right;

    // tail_plus(Y) = p tail_plus(R) + (1-p) tail_minus(L): collect the
    // majorants of the contributing parts; a sum of power majorants is
    // majorized by (sum of constants) * k^(-min alpha).
    std::vector<std::pair<double, double>> rc, lc; // (alpha, coefficient)
    if (p > 0.0 && r->has_positive_support())
        rc.emplace_back(r->certified().alpha_r(), p * r->certified().v_const());
    if (p < 1.0 && l->has_negative_support())
        rc.emplace_back(l->certified().alpha_l(), (1.0 - p) * l->certified().w_const());
    if (p > 0.0 && r->has_negative_support())
        lc.emplace_back(r->certified().alpha_l(), p * r->certified().w_const());
    if (p < 1.0 && l->has_positive_support())
        lc.emplace_back(l->certified().alpha_r(), (1.0 - p) * l->certified().v_const());

    auto fold = [](const std::vector<std::pair<double, double>>& parts,
                   double fallback_alpha) {
        if (parts.empty()) // tail identically zero: any majorant is valid
            return std::pair<double, double>(fallback_alpha, 1.0);
        double alpha = parts.front().first, coeff = 0.0;
        for (const auto& [a, c] : parts) {
            alpha = std::min(alpha, a);
            coeff += c;
        }
        return std::pair<double, double>(alpha, coeff);
    };
    const double fallback_r = lc.empty() ? 3.0 : fold(lc, 3.0).first;
    const double fallback_l = rc.empty() ? 3.0 : fold(rc, 3.0).first;
    auto [ar, v] = fold(rc, fallback_r);
    auto [al, w] = fold(lc, fallback_l);
    return IntegerDistribution(Mixture{std::move(r), std::move(l), p},
                               TailClassSpec::two_sided(ar, v, al, w));
}

bool IntegerDistribution::has_positive_support() const {
    return std::visit(
        [](const auto& d) -> bool {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) return true;
            else if constexpr (std::is_same_v<T, Geo>) return true;
            else if constexpr (std::is_same_v<T, Point>) return d.c >= 1;
            else
                return (d.p_right > 0.0 && d.right->has_positive_support()) ||
                       (d.p_right < 1.0 && d.left->has_negative_support());
        },
        kind_);
}

bool IntegerDistribution::has_negative_support() const {
    return std::visit(
        [](const auto& d) -> bool {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) return false;
            else if constexpr (std::is_same_v<T, Geo>) return false;
            else if constexpr (std::is_same_v<T, Point>) return d.c <= -1;
            else
                return (d.p_right > 0.0 && d.right->has_negative_support()) ||
                       (d.p_right < 1.0 && d.left->has_positive_support());
        },
        kind_);
}

double IntegerDistribution::pmf(double k) const {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) {
                if (k < 0.0) return 0.0;
                if (k == 0.0) return 1.0 - std::min(1.0, d.v);
                const long long kc = pareto_cap(d);
                if (k <= static_cast<double>(kc + 1)) // cap region: exact difference
                    return pareto_tail(d, k) - pareto_tail(d, k + 1.0);
                // pure power region: factored form avoids cancellation
                return d.v * std::pow(k, -d.alpha) * (-std::expm1(-d.alpha * std::log1p(1.0 / k)));
            } else if constexpr (std::is_same_v<T, Geo>) {
                if (k < 1.0) return 0.0;
                return std::exp((k - 1.0) * std::log1p(-d.p)) * d.p;
            } else if constexpr (std::is_same_v<T, Point>) {
                return k == static_cast<double>(d.c) ? 1.0 : 0.0;
            } else {
                double out = 0.0;
                if (d.p_right > 0.0) out += d.p_right * d.right->pmf(k);
                if (d.p_right < 1.0) out += (1.0 - d.p_right) * d.left->pmf(-k);
                return out;
            }
        },
        kind_);
}

double IntegerDistribution::tail_plus(double k) const {
    if (!(k >= 1.0)) throw InvalidInput("tail_plus: k must be >= 1");
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) {
                return pareto_tail(d, k);
            } else if constexpr (std::is_same_v<T, Geo>) {
                return std::exp((k - 1.0) * std::log1p(-d.p));
            } else if constexpr (std::is_same_v<T, Point>) {
                return k <= static_cast<double>(d.c) ? 1.0 : 0.0;
            } else {
                double out = 0.0;
                if (d.p_right > 0.0) out += d.p_right * d.right->tail_plus(k);
                if (d.p_right < 1.0) out += (1.0 - d.p_right) * d.left->tail_minus(k);
                return out;
            }
        },
        kind_);
}

double IntegerDistribution::tail_minus(double k) const {
    if (!(k >= 1.0)) throw InvalidInput("tail_minus: k must be >= 1");
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, Geo>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, Point>) {
                return static_cast<double>(d.c) <= -k ? 1.0 : 0.0;
            } else {
                double out = 0.0;
                if (d.p_right > 0.0) out += d.p_right * d.right->tail_minus(k);
                if (d.p_right < 1.0) out += (1.0 - d.p_right) * d.left->tail_plus(k);
                return out;
            }
        },
        kind_);
}

double IntegerDistribution::upper_cdf(double k) const {
    if (k >= 1.0) return tail_plus(k);
    // P[X >= k] = 1 - P[X <= k-1]; for k <= 0, P[X <= k-1] = tail_minus(1-k).
    return 1.0 - tail_minus(1.0 - k);
}

namespace {

// sum_{j >= 1} tail(j) on one side; closed forms per kind. Must only be
// called when that side's series converges.
double tail_series_sum(const IntegerDistribution& dist, bool right_side);

double tail_series_sum_impl(const Pareto& d, bool right_side) {
    if (!right_side) return 0.0;
    if (d.alpha <= 1.0)
        throw InvalidInput("tail series diverges: pareto exponent <= 1");
    if (d.v <= 1.0) return d.v * zeta(d.alpha);
    const long long kc = pareto_cap(d);
    return static_cast<double>(kc) + d.v * (zeta(d.alpha) - partial_power_sum(d.alpha, kc));
}

double tail_series_sum(const IntegerDistribution& dist, bool right_side) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) {
                return tail_series_sum_impl(d, right_side);
            } else if constexpr (std::is_same_v<T, Geo>) {
                return right_side ? 1.0 / d.p : 0.0;
            } else if constexpr (std::is_same_v<T, Point>) {
                const long long c = right_side ? d.c : -d.c;
                return c >= 1 ? static_cast<double>(c) : 0.0;
            } else {
                double out = 0.0;
                if (d.p_right > 0.0)
                    out += d.p_right * tail_series_sum(*d.right, right_side);
                if (d.p_right < 1.0)
                    out += (1.0 - d.p_right) * tail_series_sum(*d.left, !right_side);
                return out;
            }
        },
        dist.kind());
}

} // namespace

std::optional<double> IntegerDistribution::expectation_tail_sum() const {
    if (certified_.min_alpha() <= 1.0) return std::nullopt; // Divergent
    return tail_series_sum(*this, true) - tail_series_sum(*this, false);
}

double IntegerDistribution::partial_mean_pos() const {
    return tail_series_sum(*this, true);
}

double IntegerDistribution::partial_mean_nonpos() const {
    return -tail_series_sum(*this, false);
}

namespace {

// Generic inversion: max k with upper_cdf(k) >= u, by doubling bracket and
// binary search. Used as the fallback when a closed-form guess misses.
double invert_by_search(const IntegerDistribution& dist, double u) {
    double lo = 0.0;
    double step = 1.0;
    while (dist.upper_cdf(lo) < u) {
        lo -= step;
        step *= 2.0;
        if (lo <= -kSat) { lo = -kSat; break; }
    }
    double hi = std::max(lo, 1.0);
    step = 1.0;
    while (dist.upper_cdf(hi + 1.0) >= u) {
        hi += step;
        step *= 2.0;
        if (hi >= kSat) { hi = kSat; break; }
    }
    while (hi > lo) {
        const double mid = std::floor((lo + hi + 1.0) / 2.0);
        if (dist.upper_cdf(mid) >= u)
            lo = mid;
        else
            hi = mid - 1.0;
    }
    return lo;
}

// Nudge a closed-form guess onto the defining predicate
// upper_cdf(k) >= u > upper_cdf(k+1); falls back to the search if it is far off.
double refine_guess(const IntegerDistribution& dist, double u, double guess) {
    guess = std::floor(std::clamp(guess, -kSat, kSat));
    int steps = 0;
    while (dist.upper_cdf(guess) < u) {
        guess -= 1.0;
        if (++steps > 64) return invert_by_search(dist, u);
    }
    while (guess < kSat && dist.upper_cdf(guess + 1.0) >= u) {
        guess += 1.0;
        if (++steps > 64) return invert_by_search(dist, u);
    }
    return guess;
}

double invert_impl(const IntegerDistribution& dist, double u);

double invert_mixture(const IntegerDistribution& dist, const Mixture& d, double u) {
    const double p = d.p_right;
    const double g1 = dist.upper_cdf(1.0);
    if (u <= g1) {
        // positive branch: p tail_plus(R,k) + (1-p) tail_minus(L,k) >= u
        if (p > 0.0 && !(p < 1.0 && d.left->has_negative_support())) {
            return refine_guess(dist, u, invert_impl(*d.right, std::min(u / p, 1.0)));
        }
        return refine_guess(dist, u, invert_by_search(dist, u));
    }
    if (u <= dist.upper_cdf(0.0)) return 0.0;
    // negative branch: smallest j = 1-k with P[Y <= -j] <= 1-u
    const double w = 1.0 - u;
    if (p < 1.0 && !(p > 0.0 && d.right->has_negative_support())) {
        const double w2 = std::min(w / (1.0 - p), 1.0);
        const double j = invert_impl(*d.left, w2) + 1.0;
        return refine_guess(dist, u, 1.0 - j);
    }
    return refine_guess(dist, u, invert_by_search(dist, u));
}

double invert_impl(const IntegerDistribution& dist, double u) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) {
                if (u > std::min(1.0, d.v)) return 0.0;
                const double guess = std::exp((std::log(d.v) - std::log(u)) / d.alpha);
                return refine_guess(dist, u, guess);
            } else if constexpr (std::is_same_v<T, Geo>) {
                const double guess = 1.0 + std::floor(std::log(u) / std::log1p(-d.p));
                return refine_guess(dist, u, std::max(guess, 1.0));
            } else if constexpr (std::is_same_v<T, Point>) {
                return static_cast<double>(d.c);
            } else {
                return invert_mixture(dist, d, u);
            }
        },
        dist.kind());
}

} // namespace

long long IntegerDistribution::invert_upper_cdf(double u) const {
    if (!(u > 0.0) || !(u <= 1.0))
        throw InvalidInput("invert_upper_cdf: u must be in (0,1]");
    return static_cast<long long>(invert_impl(*this, u));
}

namespace {

// sum_{k=a}^{b} e^(mu k) r^(k-1) p for the geometric law, closed form.
double geometric_weighted_sum(const Geo& d, double mu, double a, double b) {
    const double lr = mu + std::log1p(-d.p); // log of the term ratio
    if (b == kInf) {
        if (lr >= 0.0)
            throw UnsupportedScale("geometric weighted sum diverges");
        // p/(1-p) * r^a / (1 - r)
        return d.p / (1.0 - d.p) * std::exp(a * lr) / (-std::expm1(lr));
    }
    const double m = b - a + 1.0;
    if (lr == 0.0) return d.p / (1.0 - d.p) * m;
    // p/(1-p) * (r^a - r^(b+1)) / (1 - r), in expm1 form for stability
    return d.p / (1.0 - d.p) * std::exp(a * lr) * std::expm1(m * lr) / std::expm1(lr);
}

double pareto_weighted_sum(const Pareto& d, double mu, double lo, double hi) {
    double total = 0.0;
    if (d.v < 1.0 && lo <= 0.0 && hi >= 0.0) total += 1.0 - d.v; // atom at 0
    const long long kc = pareto_cap(d);
    // cap boundary: the only term below the pure power region
    if (kc >= 1 && lo <= static_cast<double>(kc) && static_cast<double>(kc) <= hi) {
        const double kcd = static_cast<double>(kc);
        total += std::exp(mu * kcd) * (1.0 - pareto_tail(d, kcd + 1.0));
    }
    const double pure_start = kc >= 1 ? static_cast<double>(kc + 1) : 1.0;
    double a = std::max(lo, pure_start);
    double b = hi;
    if (b == kInf) {
        if (mu > 0.0) throw UnsupportedScale("pareto weighted sum diverges");
        if (mu == 0.0) // telescopes exactly: sum of t(k)-t(k+1) over [a, inf)
            return total + d.v * std::pow(a, -d.alpha);
        // choose b so the remainder e^(mu(b+1)) tail(b+1) is below 1e-18
        b = std::max(a, std::ceil(46.0 / -mu));
        while (std::exp(mu * (b + 1.0)) * pareto_tail(d, b + 1.0) > 1e-18) b *= 2.0;
    }
    if (a > b) return total;
    // summation by parts over the pure power tail t(k) = v k^-alpha:
    //   sum e^(mu k) (t(k)-t(k+1))
    //     = e^(mu a) t(a) - e^(mu b) t(b+1) + (1-e^-mu) sum_{a+1}^{b} e^(mu k) t(k)
    const double t_a = d.v * std::pow(a, -d.alpha);
    const double t_b1 = d.v * std::pow(b + 1.0, -d.alpha);
    double s = std::exp(mu * a) * t_a - std::exp(mu * b) * t_b1;
    if (b >= a + 1.0)
        s += (-std::expm1(-mu)) * d.v * detail::exp_power_sum(mu, d.alpha, a + 1.0, b);
    return total + s;
}

} // namespace

double IntegerDistribution::exp_weighted_pmf_sum(double mu, double lo, double hi) const {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi)
        throw InvalidInput("exp_weighted_pmf_sum: bad range");
    lo = lo == -kInf ? lo : std::floor(lo);
    hi = hi == kInf ? hi : std::floor(hi);
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) {
                return pareto_weighted_sum(d, mu, lo, hi);
            } else if constexpr (std::is_same_v<T, Geo>) {
                const double a = std::max(lo, 1.0);
                if (a > hi) return 0.0;
                return geometric_weighted_sum(d, mu, a, hi);
            } else if constexpr (std::is_same_v<T, Point>) {
                const double cd = static_cast<double>(d.c);
                if (cd < lo || cd > hi) return 0.0;
                if (mu * cd > 709.0)
                    throw UnsupportedScale("exp_weighted_pmf_sum: e^(mu c) overflows");
                return std::exp(mu * cd);
            } else {
                double out = 0.0;
                if (d.p_right > 0.0)
                    out += d.p_right * d.right->exp_weighted_pmf_sum(mu, lo, hi);
                if (d.p_right < 1.0)
                    out += (1.0 - d.p_right) * d.left->exp_weighted_pmf_sum(-mu, -hi, -lo);
                return out;
            }
        },
        kind_);
}

std::string IntegerDistribution::id() const {
    return std::visit(
        [&](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pareto>) {
                return "pareto(a=" + fmt_double(d.alpha) + ",v=" + fmt_double(d.v) + ")";
            } else if constexpr (std::is_same_v<T, Geo>) {
                return "geometric(p=" + fmt_double(d.p) + ")";
            } else if constexpr (std::is_same_v<T, Point>) {
                return "point(" + std::to_string(d.c) + ")";
            } else {
                return "two_sided(" + d.right->id() + "," + d.left->id() +
                       ",p=" + fmt_double(d.p_right) + ")";
            }
        },
        kind_);
}

nlohmann::json IntegerDistribution::to_json() const {
    return std::visit(
        [&](const auto& d) -> nlohmann::json {
            using T = std::decay_t<decltype(d)>;
            nlohmann::json j;
            if constexpr (std::is_same_v<T, Pareto>) {
                j["kind"] = "exact_tail_pareto";
                j["alpha"] = d.alpha;
                j["v"] = d.v;
            } else if constexpr (std::is_same_v<T, Geo>) {
                j["kind"] = "geometric";
                j["p"] = d.p;
            } else if constexpr (std::is_same_v<T, Point>) {
                j["kind"] = "point_mass";
                j["c"] = d.c;
            } else {
                j["kind"] = "two_sided";
                j["right"] = d.right->to_json();
                j["left"] = d.left->to_json();
                j["p_right"] = d.p_right;
            }
            return j;
        },
        kind_);
}

IntegerDistribution IntegerDistribution::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw InvalidInput("distribution JSON: object with \"kind\" required");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "exact_tail_pareto" || kind == "pareto")
        return exact_tail_pareto(j.at("alpha").get<double>(), j.at("v").get<double>());
    if (kind == "geometric")
        return geometric(j.at("p").get<double>());
    if (kind == "point_mass" || kind == "point")
        return point_mass(j.at("c").get<long long>());
    if (kind == "two_sided")
        return two_sided(from_json(j.at("right")), from_json(j.at("left")),
                         j.at("p_right").get<double>());
    throw InvalidInput("distribution JSON: unknown kind \"" + kind + "\"");
}

IntegerDistribution IntegerDistribution::parse(const std::string& text) {
    auto trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
    if (!trimmed.empty() && trimmed.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(trimmed);
        } catch (const nlohmann::json::parse_error& e) {
            throw InvalidInput(std::string("distribution JSON: ") + e.what());
        }
        return from_json(j);
    }
    std::vector<std::string> parts;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw InvalidInput("empty distribution spec");
    try {
        const std::string& kind = parts[0];
        if ((kind == "pareto" || kind == "exact_tail_pareto") && parts.size() == 3)
            return exact_tail_pareto(std::stod(parts[1]), std::stod(parts[2]));
        if (kind == "geometric" && parts.size() == 2)
            return geometric(std::stod(parts[1]));
        if ((kind == "point" || kind == "point_mass") && parts.size() == 2)
            return point_mass(std::stoll(parts[1]));
        if (kind == "sym_pareto" && parts.size() == 3) {
            auto alpha = std::stod(parts[1]);
            auto v = std::stod(parts[2]);
            return two_sided(exact_tail_pareto(alpha, v), exact_tail_pareto(alpha, v), 0.5);
        }
    } catch (const std::logic_error&) {
        throw InvalidInput("malformed distribution spec: " + text);
    }
    throw InvalidInput("unknown distribution spec: " + text +
                       " (expected pareto:a:v, geometric:p, point:c, sym_pareto:a:v or JSON)");
}

} // namespace heavytail
