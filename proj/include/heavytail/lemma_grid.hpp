#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "heavytail/distribution.hpp"

namespace heavytail {

// One interval-lemma check: exact segment sum vs explicit-constant bound.
struct LemmaGridRow {
    std::string lemma_id; // e.g. "I2:pareto(a=0.8,v=1)"
    double alpha = 0.0;
    long long n = 0;
    double epsilon = 0.0;
    double exact = 0.0;
    double bound = 0.0;
    double margin = 0.0; // bound - exact
    bool pass = false;   // margin >= -1e-10
};

// Distributions the grid (and the test suites) exercise by default:
// exact-tail Paretos across alpha in {0.5, 0.8, 1, 1.5, 2, 2.5, 3}, their
// symmetric two-sided mixtures, Geometric(0.5) and point masses.
std::vector<IntegerDistribution> default_lemma_distributions();

std::vector<long long> default_grid_n();      // {100, 1000, 10000}
std::vector<double> default_grid_epsilon();   // {0.1, 0.3, 0.5}

// Runs every admissible cell (mu < 1 and M < x; the rest are skipped) and
// returns one row per segment lemma.
std::vector<LemmaGridRow> run_lemma_grid(std::span<const IntegerDistribution> dists,
                                         std::span<const long long> ns,
                                         std::span<const double> epsilons);

// Columns: lemma_id, alpha, n, epsilon, exact, bound, margin, pass.
void write_lemma_grid_csv(std::ostream& out, std::span<const LemmaGridRow> rows);

} // namespace heavytail
