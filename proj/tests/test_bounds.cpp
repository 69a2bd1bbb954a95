#include <doctest.h>

#include <cmath>
#include <vector>

#include "heavytail/bounds.hpp"
#include "heavytail/errors.hpp"

using namespace heavytail;

namespace {

double sum_terms(const BoundEvaluation& b) {
    double s = 0.0;
    for (const auto& [k, v] : b.terms) s += v;
    return s;
}

} // namespace

TEST_CASE("thm1 golden value") {
    auto b = thm1_bound(TailClassSpec::right_only(1.0, 1.0), 10000, 0.5);
    const double golden = (1.0 + std::exp(2.0)) * 1e-2;
    CHECK(std::fabs(b.raw_value - golden) <= 1e-12 * golden);
    CHECK(b.value == b.raw_value);
    CHECK_FALSE(b.vacuous);
    CHECK(b.threshold_x == doctest::Approx(1e6).epsilon(1e-12));
    CHECK(b.terms.at("union") == doctest::Approx(0.01).epsilon(1e-13));
    CHECK(b.terms.at("mgf") == doctest::Approx(std::exp(2.0) * 1e-2).epsilon(1e-13));
}

TEST_CASE("thm1 vacuous at small n") {
    auto b = thm1_bound(TailClassSpec::right_only(0.8, 1.0), 100, 0.1);
    // (1+e^2) * 100^(-0.08) = (1+e^2) * 10^(-0.16), far above 1
    const double expected = (1.0 + std::exp(2.0)) * std::pow(100.0, -0.08);
    CHECK(b.raw_value == doctest::Approx(expected).epsilon(1e-13));
    CHECK(b.raw_value > 1.0);
    CHECK(b.vacuous);
    CHECK(b.value == 1.0);
}

TEST_CASE("thm1 approaches V + e^2V as epsilon -> 0+, always vacuous") {
    auto spec = TailClassSpec::right_only(1.0, 1.0);
    auto b = thm1_bound(spec, 10000, 1e-12);
    CHECK(b.raw_value == doctest::Approx(1.0 + std::exp(2.0)).epsilon(1e-9));
    CHECK(b.vacuous);
    CHECK(b.value == 1.0);
}

TEST_CASE("thm2 mirrors thm1") {
    auto sym = TailClassSpec::two_sided(0.9, 1.3, 0.9, 1.3);
    auto b1 = thm1_bound(sym, 5000, 0.2);
    auto b2 = thm2_bound(sym, 5000, 0.2);
    CHECK(b1.raw_value == doctest::Approx(b2.raw_value).epsilon(1e-14));
    CHECK(b2.threshold_x == doctest::Approx(-b1.threshold_x).epsilon(1e-14));

    auto b = thm2_bound(TailClassSpec::two_sided(2.0, 1.0, 0.9, 0.5), 100000, 0.2);
    const double expected = (0.5 + std::exp(1.0)) * std::pow(10.0, -0.9);
    CHECK(b.raw_value == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(thm2_bound(TailClassSpec::right_only(0.9, 1.0), 100, 0.1),
                    InvalidInput);
    CHECK_THROWS_AS(thm2_bound(TailClassSpec::two_sided(1.0, 1.0, 1.5, 1.0), 100, 0.1),
                    WrongRegime);
}

TEST_CASE("thm3 goldens") {
    auto spec2 = TailClassSpec::two_sided(2.0, 1.0, 2.0, 1.0);
    auto b = thm3_bound(spec2, 10000, 0.25);
    const double golden = (1.0 + std::exp(2.0)) * 1e-2;
    CHECK(std::fabs(b.raw_value - golden) <= 1e-12 * golden);
    CHECK(b.threshold_x == doctest::Approx(1000.0).epsilon(1e-13));

    auto spec3 = TailClassSpec::two_sided(3.0, 1.0, 3.0, 1.0);
    auto b3 = thm3_bound(spec3, 1000000, 0.1);
    const double expected =
        std::pow(10.0, 6.0 * (1.0 - 1.5 - 0.3)) + std::exp(2.0) * std::pow(10.0, -1.8);
    CHECK(b3.raw_value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(b3.threshold_x == doctest::Approx(std::pow(10.0, 6.0 * 0.6)).epsilon(1e-12));
}

TEST_CASE("thm3/thm4 regime errors") {
    CHECK_THROWS_AS(thm3_bound(TailClassSpec::right_only(2.0, 1.0), 100, 0.1),
                    InvalidInput);
    CHECK_THROWS_AS(thm3_bound(TailClassSpec::two_sided(0.8, 1.0, 2.0, 1.0), 100, 0.1),
                    WrongRegime);
    CHECK_THROWS_AS(thm1_bound(TailClassSpec::right_only(2.0, 1.0), 100, 0.1),
                    WrongRegime);
    CHECK_THROWS_AS(thm1_bound(TailClassSpec::right_only(1.0, 1.0), 1, 0.1), InvalidInput);
}

TEST_CASE("exponent continuity at alpha = 2") {
    // max(1, a/2) and max(1/a, 1/2) agree from both sides at a = 2
    auto lo = TailClassSpec::two_sided(2.0 - 1e-9, 1.0, 2.0 - 1e-9, 1.0);
    auto hi = TailClassSpec::two_sided(2.0 + 1e-9, 1.0, 2.0 + 1e-9, 1.0);
    auto at = TailClassSpec::two_sided(2.0, 1.0, 2.0, 1.0);
    auto b_lo = thm3_bound(lo, 10000, 0.25);
    auto b_hi = thm3_bound(hi, 10000, 0.25);
    auto b_at = thm3_bound(at, 10000, 0.25);
    CHECK(b_lo.raw_value == doctest::Approx(b_at.raw_value).epsilon(1e-6));
    CHECK(b_hi.raw_value == doctest::Approx(b_at.raw_value).epsilon(1e-6));
    CHECK(b_lo.threshold_x == doctest::Approx(b_at.threshold_x).epsilon(1e-6));
    CHECK(b_hi.threshold_x == doctest::Approx(b_at.threshold_x).epsilon(1e-6));
}

TEST_CASE("thm4 uses W and a negative threshold") {
    auto spec = TailClassSpec::two_sided(2.5, 1.0, 2.5, 0.3);
    auto b3 = thm3_bound(spec, 10000, 0.3);
    auto b4 = thm4_bound(spec, 10000, 0.3);
    CHECK(b4.threshold_x == doctest::Approx(-b3.threshold_x).epsilon(1e-14));
    // same exponents, constants swapped: V = 1 vs W = 0.3
    CHECK(b4.raw_value < b3.raw_value);
    const double a = 2.5, eps = 0.3, n = 10000.0;
    const double expected = 0.3 * std::pow(n, 1.0 - 1.25 - a * eps) +
                            std::exp(0.6) * std::pow(n, -a * eps);
    CHECK(b4.raw_value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("terms sum to raw value") {
    std::vector<BoundEvaluation> evals;
    evals.push_back(thm1_bound(TailClassSpec::right_only(0.7, 1.2), 1000, 0.3));
    evals.push_back(thm3_bound(TailClassSpec::two_sided(2.2, 0.8, 2.8, 1.1), 5000, 0.2));
    {
        const TailClassSpec specs[] = {TailClassSpec::right_only(1.0, 1.0)};
        evals.push_back(preasymptotic_bound(specs, 10000, 0.5, mu_schedule(10000, 0.5, 1.0)));
    }
    for (const auto& b : evals) {
        CHECK(std::fabs(sum_terms(b) - b.raw_value) <= 1e-12 * std::max(1.0, b.raw_value));
        CHECK(b.value == std::clamp(b.raw_value, 0.0, 1.0));
        CHECK(b.vacuous == (b.raw_value >= 1.0));
    }
}

TEST_CASE("bounds strictly decrease in n and epsilon") {
    auto spec1 = TailClassSpec::right_only(0.8, 1.0);
    auto spec3 = TailClassSpec::two_sided(2.5, 1.0, 2.5, 1.0);
    double prev1 = 1e300, prev3 = 1e300;
    for (long long n : {100LL, 1000LL, 10000LL, 100000LL}) {
        auto b1 = thm1_bound(spec1, n, 0.3);
        auto b3 = thm3_bound(spec3, n, 0.3);
        CHECK(b1.raw_value < prev1);
        CHECK(b3.raw_value < prev3);
        prev1 = b1.raw_value;
        prev3 = b3.raw_value;
    }
    prev1 = prev3 = 1e300;
    for (double eps : {0.1, 0.2, 0.4, 0.8}) {
        auto b1 = thm1_bound(spec1, 1000, eps);
        auto b3 = thm3_bound(spec3, 1000, eps);
        CHECK(b1.raw_value < prev1);
        CHECK(b3.raw_value < prev3);
        prev1 = b1.raw_value;
        prev3 = b3.raw_value;
    }
}

TEST_CASE("W2 identity to machine precision") {
    // V e^(mu x) n x^-a - mu x = V - a eps ln n for the alpha <= 1 schedule
    for (double v : {0.5, 1.0, 2.0})
        for (double a : {0.5, 0.8, 1.0})
            for (long long n : {100LL, 10000LL, 1000000LL})
                for (double eps : {0.1, 0.3, 0.5}) {
                    auto s = mu_schedule(n, eps, a);
                    const double lhs = v * std::exp(s.mu * s.x) *
                                           static_cast<double>(n) * std::pow(s.x, -a) -
                                       s.mu * s.x;
                    const double rhs = v - a * eps * std::log(static_cast<double>(n));
                    CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(rhs)));
                }
}

TEST_CASE("P4 inequality, equality iff alpha <= 2") {
    for (double a : {1.5, 2.0, 2.5, 3.0})
        for (long long n : {100LL, 10000LL, 1000000LL})
            for (double eps : {0.1, 0.3, 0.5}) {
                auto s = mu_schedule(n, eps, a);
                const double lhs = std::exp(s.mu * s.x) * static_cast<double>(n) *
                                       std::pow(s.x, -a) -
                                   s.mu * s.x;
                const double rhs = 1.0 - a * eps * std::log(static_cast<double>(n));
                CHECK(lhs <= rhs + 1e-9 * std::max(1.0, std::fabs(rhs)));
                if (a <= 2.0)
                    CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(rhs)));
                else
                    CHECK(lhs < rhs - 1e-9);
            }
}

TEST_CASE("preasymptotic raw dominates its union term") {
    const TailClassSpec specs[] = {TailClassSpec::right_only(0.8, 1.0)};
    auto b = preasymptotic_bound(specs, 1000, 0.4, mu_schedule(1000, 0.4, 0.8));
    CHECK(b.raw_value >= b.terms.at("union"));
    CHECK(b.terms.at("mgf") > 0.0);
}

TEST_CASE("preasymptotic vs theorem bound consistency") {
    // pre <= thm * e^(n T): union terms agree exactly, the mgf term differs
    // by e^(n T) e^-V at most
    {
        const TailClassSpec spec = TailClassSpec::right_only(1.0, 1.0);
        const TailClassSpec specs[] = {spec};
        for (long long n : {1000LL, 10000LL, 100000LL}) {
            auto pre = preasymptotic_bound(specs, n, 0.5, mu_schedule(n, 0.5, 1.0));
            auto thm = thm1_bound(spec, n, 0.5);
            CHECK(pre.terms.at("union") ==
                  doctest::Approx(thm.terms.at("union")).epsilon(1e-12));
            const double slack = std::exp(pre.diagnostics.at("n_t"));
            CHECK(pre.raw_value <= thm.raw_value * slack * (1.0 + 1e-12));
        }
    }
    {
        const TailClassSpec spec = TailClassSpec::two_sided(2.5, 1.0, 2.5, 1.0);
        const TailClassSpec specs[] = {spec};
        for (long long n : {10000LL, 100000LL}) {
            auto pre = preasymptotic_bound(specs, n, 0.3, mu_schedule(n, 0.3, 2.5));
            auto thm = thm3_bound(spec, n, 0.3);
            CHECK(pre.terms.at("union") ==
                  doctest::Approx(thm.terms.at("union")).epsilon(1e-12));
            const double slack = std::exp(pre.diagnostics.at("n_t"));
            CHECK(pre.raw_value <= thm.raw_value * slack * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("vanishing remainder terms decrease toward zero") {
    for (double a : {0.5, 0.8, 1.0}) {
        double prev = 1e300;
        for (long long n = 1000; n <= 10000000; n *= 10) {
            auto s = mu_schedule(n, 0.3, a);
            const double nt = static_cast<double>(n) * t0_term(a, s.mu, 1.0);
            CHECK(nt > 0.0);
            CHECK(nt < prev);
            prev = nt;
        }
    }
    for (double a : {1.5, 2.0, 2.5, 3.0}) {
        double prev = 1e300;
        for (long long n = 1000; n <= 10000000; n *= 10) {
            auto s = mu_schedule(n, 0.3, a);
            const double nt = static_cast<double>(n) * tau_term(a, s.mu, 1.0, 1.0);
            CHECK(nt > 0.0);
            CHECK(nt < prev);
            prev = nt;
        }
    }
}

TEST_CASE("preasymptotic regime checks") {
    const TailClassSpec specs[] = {TailClassSpec::right_only(1.0, 1.0)};
    // schedule built for the wrong alpha
    CHECK_THROWS_AS(preasymptotic_bound(specs, 10000, 0.5, mu_schedule(10000, 0.5, 2.0)),
                    WrongRegime);
    // schedule built for the wrong n
    CHECK_THROWS_AS(preasymptotic_bound(specs, 10000, 0.5, mu_schedule(1000, 0.5, 1.0)),
                    WrongRegime);
    // aggregated sublinear regime driven by the left tail is rejected
    const TailClassSpec mixed[] = {TailClassSpec::two_sided(2.0, 1.0, 0.8, 1.0)};
    CHECK_THROWS_AS(preasymptotic_bound(mixed, 10000, 0.5, mu_schedule(10000, 0.5, 0.8)),
                    WrongRegime);
}

TEST_CASE("bound JSON shape") {
    auto b = thm1_bound(TailClassSpec::right_only(1.0, 1.0), 10000, 0.5);
    auto j = b.to_json();
    CHECK(j.at("kind") == "thm1");
    CHECK(j.at("value").get<double>() == b.value);
    CHECK(j.at("raw").get<double>() == b.raw_value);
    CHECK(j.at("x").get<double>() == b.threshold_x);
    CHECK(j.at("vacuous").get<bool>() == false);
    CHECK(j.at("terms").contains("union"));
    CHECK(j.at("terms").contains("mgf"));
}
