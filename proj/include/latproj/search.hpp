#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latproj/lattice.hpp"
#include "latproj/lifting.hpp"

namespace latproj {
namespace search {

struct SearchResult {
    std::vector<Int> v;  // canonical: 0 <= v1 <= v2 <= ..., gcd 1
    Int norm2;
    Rat r_sq;
    double r = 0.0;
    Rat delta_sq;
    double delta = 0.0;
    std::size_t rank = 0;
};

struct SearchOptions {
    std::size_t top = 0;            // 0 = all
    std::uint64_t budget = 5'000'000;  // max enumerated candidates before budget_error
    int threads = 0;                // 0 = from LATPROJ_THREADS or hardware
};

// All primitive vectors up to signed permutation with norm^2 in
// [norm2_min, norm2_max], ranked by center density of the projection lattice
// (ties broken by lexicographic vector order).
std::vector<SearchResult> search_densest(int ambient_dim, const Int& norm2_min,
                                         const Int& norm2_max, const SearchOptions& opt = {});

// Count of canonical candidates in the window without evaluating them.
std::uint64_t estimate_candidates(int ambient_dim, const Int& norm2_min, const Int& norm2_max);

struct Table1Row {
    std::vector<Int> v;
    Int norm2_expected;
    double r_expected = 0.0;
    double delta_expected = 0.0;
    Int norm2;
    double r = 0.0;
    double delta = 0.0;
    bool pass = false;
};

struct Table1Report {
    std::vector<Table1Row> rows;
    bool all_pass = false;
};

// Recompute the 13 published dense projection vectors and compare against the
// published 6-digit values (tolerance 5e-6).
Table1Report verify_table1();

// ||A (Q1 - alpha A*) A||_F^2, exact; zero iff the second condition holds
// with this alpha.
Rat perturbation_objective(const RationalMatrix& gstar_square, const RationalMatrix& p,
                           const Rat& alpha);

// admissible alpha grid: {k/g : |k/g| <= alpha_max}, g = gcd of the nonzero
// entries of A*
std::vector<Rat> alpha_grid(const RationalMatrix& astar, long alpha_max);

Rat best_alpha_objective(const RationalMatrix& gstar_square, const RationalMatrix& p,
                         const std::vector<Rat>& grid, Rat* alpha_out = nullptr);

struct PerturbationCandidate {
    RationalMatrix p;  // n x (n+1), superdiagonal ones, zeros above
    Rat alpha;
    Rat objective;
    std::uint64_t evaluations = 0;
    std::uint64_t restarts = 0;
    std::uint64_t seed = 0;
};

struct OptimizeOptions {
    long entry_bound = 2;
    long alpha_max = 4;
    std::uint64_t seed = 7;
    int restarts = 32;
    int threads = 0;
};

// Structured-perturbation optimizer for a lower-triangular dual generator
// (P_{i,i+1} = 1 and zeros above force det H_w = 1). Exhaustive scan for
// n <= 3, single-entry coordinate descent with random restarts above.
PerturbationCandidate optimize_perturbation(const RationalMatrix& gstar_square,
                                            const OptimizeOptions& opt = {});

int thread_count(int requested);

}  // namespace search
}  // namespace latproj
