#include "heavytail/lemma_grid.hpp"

#include <cmath>

#include "heavytail/exact_engine.hpp"
#include "heavytail/format.hpp"

namespace heavytail {

std::vector<IntegerDistribution> default_lemma_distributions() {
    std::vector<IntegerDistribution> out;
    for (double a : {0.5, 0.8, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        out.push_back(IntegerDistribution::exact_tail_pareto(a, 1.0));
        out.push_back(IntegerDistribution::two_sided(
            IntegerDistribution::exact_tail_pareto(a, 1.0),
            IntegerDistribution::exact_tail_pareto(a, 1.0), 0.5));
    }
    out.push_back(IntegerDistribution::geometric(0.5));
    out.push_back(IntegerDistribution::point_mass(0));
    out.push_back(IntegerDistribution::point_mass(3));
    out.push_back(IntegerDistribution::point_mass(-2));
    return out;
}

std::vector<long long> default_grid_n() { return {100, 1000, 10000}; }

std::vector<double> default_grid_epsilon() { return {0.1, 0.3, 0.5}; }

std::vector<LemmaGridRow> run_lemma_grid(std::span<const IntegerDistribution> dists,
                                         std::span<const long long> ns,
                                         std::span<const double> epsilons) {
    constexpr double kTol = 1e-10;
    std::vector<LemmaGridRow> rows;
    for (const auto& dist : dists) {
        const TailClassSpec& spec = dist.certified();
        const Regime regime = spec.regime();
        const double alpha =
            regime == Regime::SubLinear ? spec.alpha_r() : spec.min_alpha();
        const char* prefix = regime == Regime::SubLinear ? "I" : "J";
        for (long long n : ns) {
            for (double eps : epsilons) {
                const MuSchedule sched = mu_schedule(n, eps, alpha);
                if (!(sched.mu < 1.0) || !(sched.m_split < sched.x)) continue;
                const IntervalDecomposition d = interval_decomposition(dist, sched, spec);
                const double exact[3] = {d.i1, d.i2, d.i3};
                const double bound[3] = {d.b1, d.b2, d.b3};
                for (int seg = 0; seg < 3; ++seg) {
                    LemmaGridRow row;
                    row.lemma_id =
                        std::string(prefix) + std::to_string(seg + 1) + ":" + dist.id();
                    row.alpha = alpha;
                    row.n = n;
                    row.epsilon = eps;
                    row.exact = exact[seg];
                    row.bound = bound[seg];
                    row.margin = bound[seg] - exact[seg];
                    row.pass = row.margin >= -kTol;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

void write_lemma_grid_csv(std::ostream& out, std::span<const LemmaGridRow> rows) {
    out << "lemma_id,alpha,n,epsilon,exact,bound,margin,pass\n";
    for (const auto& r : rows) {
        out << r.lemma_id << ',' << fmt_double(r.alpha) << ',' << r.n << ','
            << fmt_double(r.epsilon) << ',' << fmt_double(r.exact) << ','
            << fmt_double(r.bound) << ',' << fmt_double(r.margin) << ','
            << (r.pass ? "true" : "false") << '\n';
    }
}

} // namespace heavytail
