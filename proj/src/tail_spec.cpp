#include "heavytail/tail_spec.hpp"

#include <algorithm>
#include <cmath>

#include "heavytail/distribution.hpp"
#include "heavytail/errors.hpp"

namespace heavytail {

std::string to_string(Regime r) {
    return r == Regime::SubLinear ? "sublinear" : "concentrated";
}

TailClassSpec::TailClassSpec(double alpha_r, double v_const,
                             std::optional<double> alpha_l,
                             std::optional<double> w_const)
    : alpha_r_(alpha_r), v_const_(v_const), alpha_l_(alpha_l), w_const_(w_const) {
    if (!(alpha_r > 0.0) || !std::isfinite(alpha_r))
        throw InvalidInput("TailClassSpec: alpha_r must be positive and finite");
    if (!(v_const > 0.0) || !std::isfinite(v_const))
        throw InvalidInput("TailClassSpec: v_const must be positive and finite");
    if (alpha_l_.has_value() != w_const_.has_value())
        throw InvalidInput("TailClassSpec: alpha_l and w_const must be present together");
    if (alpha_l_) {
        if (!(*alpha_l_ > 0.0) || !std::isfinite(*alpha_l_))
            throw InvalidInput("TailClassSpec: alpha_l must be positive and finite");
        if (!(*w_const_ > 0.0) || !std::isfinite(*w_const_))
            throw InvalidInput("TailClassSpec: w_const must be positive and finite");
    }
}

TailClassSpec TailClassSpec::right_only(double alpha_r, double v_const) {
    return TailClassSpec(alpha_r, v_const, std::nullopt, std::nullopt);
}

TailClassSpec TailClassSpec::two_sided(double alpha_r, double v_const,
                                       double alpha_l, double w_const) {
    return TailClassSpec(alpha_r, v_const, alpha_l, w_const);
}

double TailClassSpec::alpha_l() const {
    if (!alpha_l_) throw InvalidInput("TailClassSpec: left tail fields are absent");
    return *alpha_l_;
}

double TailClassSpec::w_const() const {
    if (!w_const_) throw InvalidInput("TailClassSpec: left tail fields are absent");
    return *w_const_;
}

double TailClassSpec::min_alpha() const {
    return alpha_l_ ? std::min(alpha_r_, *alpha_l_) : alpha_r_;
}

nlohmann::json TailClassSpec::to_json() const {
    nlohmann::json j;
    j["alpha_r"] = alpha_r_;
    j["v"] = v_const_;
    if (alpha_l_) {
        j["alpha_l"] = *alpha_l_;
        j["w"] = *w_const_;
    }
    return j;
}

TailClassSpec TailClassSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("alpha_r") || !j.contains("v"))
        throw InvalidInput("TailClassSpec: JSON object with alpha_r and v required");
    if (j.contains("alpha_l") || j.contains("w")) {
        if (!j.contains("alpha_l") || !j.contains("w"))
            throw InvalidInput("TailClassSpec: alpha_l and w must appear together");
        return two_sided(j.at("alpha_r").get<double>(), j.at("v").get<double>(),
                         j.at("alpha_l").get<double>(), j.at("w").get<double>());
    }
    return right_only(j.at("alpha_r").get<double>(), j.at("v").get<double>());
}

TailClassSpec aggregate_sequence(std::span<const TailClassSpec> specs) {
    if (specs.empty())
        throw InvalidInput("aggregate_sequence: empty list");
    const bool left = specs.front().has_left();
    double alpha_r = specs.front().alpha_r();
    double v = specs.front().v_const();
    double alpha_l = left ? specs.front().alpha_l() : 0.0;
    double w = left ? specs.front().w_const() : 0.0;
    for (const auto& s : specs.subspan(1)) {
        if (s.has_left() != left)
            throw InvalidInput("aggregate_sequence: mixed presence of left-tail fields");
        alpha_r = std::min(alpha_r, s.alpha_r());
        v = std::max(v, s.v_const());
        if (left) {
            alpha_l = std::min(alpha_l, s.alpha_l());
            w = std::max(w, s.w_const());
        }
    }
    return left ? TailClassSpec::two_sided(alpha_r, v, alpha_l, w)
                : TailClassSpec::right_only(alpha_r, v);
}

namespace {

const char* side_name(TailSide s) {
    switch (s) {
        case TailSide::Right: return "right";
        case TailSide::Left: return "left";
        default: return "none";
    }
}

} // namespace

nlohmann::json MembershipReport::to_json() const {
    nlohmann::json j;
    j["k_max"] = k_max;
    j["passed"] = passed;
    j["worst_margin"] = worst_margin;
    j["worst_k"] = worst_k;
    j["worst_side"] = side_name(worst_side);
    j["violations"] = violation_count;
    if (!passed) {
        j["first_violation_k"] = first_violation_k;
        j["first_violation_side"] = side_name(first_violation_side);
    }
    return j;
}

MembershipReport verify_membership(const IntegerDistribution& dist,
                                   const TailClassSpec& spec,
                                   long long k_max) {
    if (k_max < 1)
        throw InvalidInput("verify_membership: k_max must be >= 1");
    MembershipReport report;
    report.k_max = k_max;
    report.worst_margin = std::numeric_limits<double>::infinity();

    auto check = [&](long long k, TailSide side, double tail, double majorant) {
        const double margin = majorant - tail;
        if (margin < report.worst_margin) {
            report.worst_margin = margin;
            report.worst_k = k;
            report.worst_side = side;
        }
        // rounding guard so mathematically-tight certificates (tail equals
        // majorant) do not flag spurious violations
        if (margin < -1e-12 * std::max(1.0, tail)) {
            ++report.violation_count;
            if (report.first_violation_k == 0) {
                report.first_violation_k = k;
                report.first_violation_side = side;
            }
        }
    };

    for (long long k = 1; k <= k_max; ++k) {
        const double kd = static_cast<double>(k);
        check(k, TailSide::Right, dist.tail_plus(kd),
              spec.v_const() * std::pow(kd, -spec.alpha_r()));
        if (spec.has_left()) {
            check(k, TailSide::Left, dist.tail_minus(kd),
                  spec.w_const() * std::pow(kd, -spec.alpha_l()));
        }
    }
    report.passed = report.violation_count == 0;
    return report;
}

} // namespace heavytail
