#include "heavytail/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "heavytail/errors.hpp"

namespace heavytail {

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::Thm1Right: return "thm1";
        case BoundKind::Thm2Left: return "thm2";
        case BoundKind::Thm3RightCentered: return "thm3";
        case BoundKind::Thm4LeftCentered: return "thm4";
        case BoundKind::PreAsymptotic: return "pre";
    }
    return "?";
}

nlohmann::json BoundEvaluation::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["x"] = threshold_x;
    j["value"] = value;
    j["raw"] = raw_value;
    j["terms"] = terms;
    j["vacuous"] = vacuous;
    if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
    return j;
}

namespace {

void validate_n_eps(long long n, double epsilon) {
    if (n < 2) throw InvalidInput("bound: n must be >= 2");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InvalidInput("bound: epsilon must be positive");
}

BoundEvaluation finish(BoundKind kind, double threshold_x,
                       std::map<std::string, double> terms,
                       std::map<std::string, double> diagnostics = {}) {
    BoundEvaluation out;
    out.kind = kind;
    out.threshold_x = threshold_x;
    double raw = 0.0;
    for (const auto& [name, v] : terms) raw += v;
    out.raw_value = raw;
    out.value = std::clamp(raw, 0.0, 1.0);
    out.vacuous = raw >= 1.0;
    out.terms = std::move(terms);
    out.diagnostics = std::move(diagnostics);
    return out;
}

// (C + e^2C) n^(-a eps) in {union, mgf} parts; shared by thm1/thm2.
BoundEvaluation sublinear_bound(BoundKind kind, double c_const, double alpha,
                                long long n, double epsilon, double threshold_x) {
    const double factor = std::pow(static_cast<double>(n), -alpha * epsilon);
    return finish(kind, threshold_x,
                  {{"union", c_const * factor},
                   {"mgf", std::exp(2.0 * c_const) * factor}});
}

// C n^(1-max(1,a/2)-a eps) + e^2C n^(-a eps); shared by thm3/thm4.
BoundEvaluation concentrated_bound(BoundKind kind, double c_const, double alpha,
                                   long long n, double epsilon, double threshold_x) {
    const double nd = static_cast<double>(n);
    return finish(kind, threshold_x,
                  {{"union", c_const * std::pow(nd, 1.0 - std::max(1.0, alpha / 2.0) -
                                                        alpha * epsilon)},
                   {"mgf", std::exp(2.0 * c_const) * std::pow(nd, -alpha * epsilon)}});
}

} // namespace

BoundEvaluation thm1_bound(const TailClassSpec& spec, long long n, double epsilon) {
    validate_n_eps(n, epsilon);
    if (spec.alpha_r() > 1.0)
        throw WrongRegime("thm1_bound: requires 0 < alpha_r <= 1");
    const double x = std::pow(static_cast<double>(n), 1.0 / spec.alpha_r() + epsilon);
    return sublinear_bound(BoundKind::Thm1Right, spec.v_const(), spec.alpha_r(), n,
                           epsilon, x);
}

BoundEvaluation thm2_bound(const TailClassSpec& spec, long long n, double epsilon) {
    validate_n_eps(n, epsilon);
    if (!spec.has_left())
        throw InvalidInput("thm2_bound: spec has no left tail fields");
    if (spec.alpha_l() > 1.0)
        throw WrongRegime("thm2_bound: requires 0 < alpha_l <= 1");
    const double x = std::pow(static_cast<double>(n), 1.0 / spec.alpha_l() + epsilon);
    return sublinear_bound(BoundKind::Thm2Left, spec.w_const(), spec.alpha_l(), n,
                           epsilon, -x);
}

BoundEvaluation thm3_bound(const TailClassSpec& spec, long long n, double epsilon) {
    validate_n_eps(n, epsilon);
    if (!spec.has_left())
        throw InvalidInput("thm3_bound: both tail fields required");
    const double alpha = spec.min_alpha();
    if (alpha <= 1.0) throw WrongRegime("thm3_bound: requires min alpha > 1");
    const double x =
        std::pow(static_cast<double>(n), std::max(1.0 / alpha, 0.5) + epsilon);
    return concentrated_bound(BoundKind::Thm3RightCentered, spec.v_const(), alpha, n,
                              epsilon, x);
}

BoundEvaluation thm4_bound(const TailClassSpec& spec, long long n, double epsilon) {
    validate_n_eps(n, epsilon);
    if (!spec.has_left())
        throw InvalidInput("thm4_bound: both tail fields required");
    const double alpha = spec.min_alpha();
    if (alpha <= 1.0) throw WrongRegime("thm4_bound: requires min alpha > 1");
    const double x =
        std::pow(static_cast<double>(n), std::max(1.0 / alpha, 0.5) + epsilon);
    return concentrated_bound(BoundKind::Thm4LeftCentered, spec.w_const(), alpha, n,
                              epsilon, -x);
}

BoundEvaluation preasymptotic_bound(std::span<const TailClassSpec> dist_specs,
                                    long long n, double epsilon,
                                    const MuSchedule& schedule) {
    validate_n_eps(n, epsilon);
    const TailClassSpec agg = aggregate_sequence(dist_specs);
    const Regime regime = agg.regime();
    const double alpha =
        regime == Regime::SubLinear ? agg.alpha_r() : agg.min_alpha();
    if (regime == Regime::SubLinear && agg.alpha_r() > 1.0)
        throw WrongRegime("preasymptotic_bound: sublinear regime needs alpha_r <= 1");
    if (schedule.n != n || std::fabs(schedule.epsilon - epsilon) > 1e-12 ||
        std::fabs(schedule.alpha - alpha) > 1e-9 * alpha)
        throw WrongRegime("preasymptotic_bound: schedule does not match (n, eps, regime)");
    const double mu = schedule.mu;
    const double x = schedule.x;
    if (!(mu > 0.0) || mu >= 1.0)
        throw InvalidSchedule("preasymptotic_bound: mu must be in (0,1)");

    const double v = agg.v_const();
    const double t_term = regime == Regime::SubLinear
                              ? t0_term(alpha, mu, v)
                              : tau_term(alpha, mu, v, agg.w_const());
    const double nd = static_cast<double>(n);
    const double union_term = nd * v * std::pow(x, -alpha);
    const double we_term = v * std::exp(mu * x) * nd * std::pow(x, -alpha);
    const double mu_x = mu * x;
    const double exponent = -mu_x + nd * t_term + we_term;
    return finish(BoundKind::PreAsymptotic, x,
                  {{"union", union_term}, {"mgf", std::exp(exponent)}},
                  {{regime == Regime::SubLinear ? "t0" : "tau", t_term},
                   {"n_t", nd * t_term},
                   {"mu_x", mu_x},
                   {"exp_argument", exponent}});
}

} // namespace heavytail
