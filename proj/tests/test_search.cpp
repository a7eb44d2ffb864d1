#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latproj/catalog.hpp"
#include "latproj/search.hpp"
#include "oracle.hpp"

using namespace latproj;
using namespace latproj::search;

TEST_CASE("canonical enumeration and budget") {
    // 0 <= v1 <= v2, gcd 1, norm^2 in [1,5]: (0,1), (1,1), (1,2)
    CHECK(estimate_candidates(2, 1, 5) == 3);
    SearchOptions opt;
    opt.budget = 10;
    CHECK_THROWS_AS(search_densest(4, 1, 5000, opt), budget_error);
    CHECK_THROWS_AS(search_densest(7, 1, 5, {}), argument_error);
}

TEST_CASE("every primitive plane vector projects at half density") {
    auto res = search_densest(2, 1, 50);
    CHECK(!res.empty());
    for (const auto& r : res) CHECK(r.delta_sq == make_rat(1, 4));
}

TEST_CASE("window around the densest published norm") {
    auto res = search_densest(4, 74035, 74035);
    REQUIRE(!res.empty());
    const SearchResult& top = res.front();
    CHECK(top.rank == 1);
    CHECK(top.norm2 == 74035);
    std::vector<long> expect = {1, 29, 37, 268};
    REQUIRE(top.v.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(top.v[i] == expect[i]);
    CHECK(std::abs(top.delta - 0.173511) < 5e-6);
    // at fixed norm the density ranking is the shortest-distance ranking
    for (std::size_t i = 1; i < res.size(); ++i) CHECK(res[i].r_sq <= res[i - 1].r_sq);
}

TEST_CASE("window around the last published norm") {
    auto res = search_densest(4, 89420, 89430);
    bool found = false;
    for (const auto& r : res) {
        if (r.v == std::vector<Int>{Int(1), Int(8), Int(64), Int(292)}) {
            found = true;
            CHECK(std::abs(r.delta - 0.164452) < 5e-6);
        }
    }
    CHECK(found);
}

TEST_CASE("production pipeline agrees with the box oracle on a small window") {
    // full agreement below norm^2 = 200 in ambient 4 keeps this suite quick;
    // the acceptance run covers the full range up to 2000
    auto res = search_densest(4, 1, 200);
    for (const auto& r : res) {
        Lattice l = project_orthogonal(r.v);
        CHECK(r.r_sq == oracle::min_norm_reduced_box(l.gram_matrix()));
    }
}

TEST_CASE("verify_table1") {
    auto rep = verify_table1();
    CHECK(rep.rows.size() == 13);
    CHECK(rep.all_pass);
    for (const auto& row : rep.rows) {
        CHECK(row.pass);
        CHECK(row.norm2 == row.norm2_expected);
    }
}

TEST_CASE("perturbation objective") {
    auto star = catalog::dn_star_perturbation(3);
    RationalMatrix gsq = star.gstar.submatrix(0, 0, 3, 3);
    CHECK(perturbation_objective(gsq, star.p, Rat(1)) == 0);
    CHECK(perturbation_objective(gsq, star.p, Rat(0)) > 0);

    auto odd = catalog::dn_odd_perturbation(5);
    CHECK(perturbation_objective(odd.gstar.submatrix(0, 0, 5, 5), odd.p, Rat(0)) == 0);

    // zero objective iff cond2 passes with that alpha
    auto e8 = catalog::e8_liftings();
    auto grid = alpha_grid(gram(e8.rep1), 4);
    Rat alpha;
    Rat best = best_alpha_objective(e8.rep1, e8.p1, grid, &alpha);
    CHECK(best > 0);
    CHECK_FALSE(check_cond2(e8.rep1_p1()).pass);
}

TEST_CASE("alpha grid respects the gcd relaxation") {
    auto e8 = catalog::e8_liftings();
    auto grid = alpha_grid(gram(e8.rep1), 4);
    // gcd of the nonzero entries of 4x(the unimodular gram) is 4
    CHECK(grid.front() == -4);
    CHECK(grid.back() == 4);
    CHECK(grid.size() == 33);  // k/4 for k = -16..16

    // grid search never beats the real-relaxation optimum: reconstruct the
    // quadratic objective from three probes and compare minima exactly
    Rat f0 = perturbation_objective(e8.rep1, e8.p1, Rat(0));
    Rat f1 = perturbation_objective(e8.rep1, e8.p1, Rat(1));
    Rat fm = perturbation_objective(e8.rep1, e8.p1, Rat(-1));
    Rat quad = (f1 + fm - 2 * f0) / 2;
    Rat lin = (f1 - fm) / 2;
    REQUIRE(quad > 0);
    Rat alpha_cont = -lin / (2 * quad);
    Rat continuous_min = perturbation_objective(e8.rep1, e8.p1, alpha_cont);
    Rat grid_best = best_alpha_objective(e8.rep1, e8.p1, grid, nullptr);
    CHECK(grid_best >= continuous_min);
}

TEST_CASE("optimize_perturbation") {
    SUBCASE("one-dimensional target reaches zero") {
        RationalMatrix g1(1, 1);
        g1(0, 0) = 1;
        auto cand = optimize_perturbation(g1, {.entry_bound = 1, .alpha_max = 2});
        CHECK(cand.objective == 0);
        CHECK(cand.p(0, 1) == 1);
    }
    SUBCASE("structured candidates always certify") {
        auto e8 = catalog::e8_liftings();
        OptimizeOptions opt;
        opt.entry_bound = 1;
        opt.restarts = 4;
        auto cand = optimize_perturbation(e8.rep2, opt);
        // structural constraints
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(cand.p(i, i + 1) == 1);
            for (std::size_t j = i + 2; j < 9; ++j) CHECK(cand.p(i, j) == 0);
        }
        RationalMatrix gs(8, 9);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) gs(i, j) = e8.rep2(i, j);
        auto c1 = check_cond1(make_lifting(gs, cand.p));
        CHECK(c1.pass);
        CHECK(c1.det_value == 1);
    }
    SUBCASE("triangular representation of the dual bcc target: exhaustive optimum") {
        // lower-triangular basis generating the same lattice as the
        // 3-dimensional dual construction
        auto star = catalog::dn_star_perturbation(3);
        RationalMatrix gsq = star.gstar.submatrix(0, 0, 3, 3);
        RationalMatrix lower = hnf_rows(gsq);  // row-HNF of an integer basis is triangular
        // hnf_rows yields an upper-triangular-style form; flip to lower by
        // reversing coordinate and row order
        std::size_t n = 3;
        RationalMatrix rev(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rev(i, j) = lower(n - 1 - i, n - 1 - j);
        auto cand = optimize_perturbation(rev, {.entry_bound = 2, .alpha_max = 4});
        // the structured space cannot reach zero here: solving Q1 = alpha*A*
        // under the superdiagonal-ones shape forces half-integer entries for
        // every admissible alpha, on every triangular basis of this lattice.
        // 13/8 is the exhaustive-scan optimum at entry bound 2, frozen.
        CHECK(cand.objective == make_rat(13, 8));
        CHECK(perturbation_objective(rev, cand.p, cand.alpha) == cand.objective);
    }
    SUBCASE("local search reaches at least the published perturbation's value") {
        auto e8 = catalog::e8_liftings();
        auto grid = alpha_grid(gram(e8.rep1), 4);
        // P1 lies inside the bound-1 scan space
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 9; ++j) CHECK(abs(e8.p1(i, j)) <= 1);
        Rat published = best_alpha_objective(e8.rep1, e8.p1, grid, nullptr);
        OptimizeOptions opt;
        opt.entry_bound = 1;
        opt.seed = 7;
        opt.restarts = 8;
        auto cand = optimize_perturbation(e8.rep1, opt);
        CHECK(cand.objective <= published);
        // deterministic given the seed
        auto again = optimize_perturbation(e8.rep1, opt);
        CHECK(again.objective == cand.objective);
        CHECK(again.p == cand.p);
    }
    CHECK_THROWS_AS(optimize_perturbation(RationalMatrix::from_rows({{1, 1}, {0, 1}})),
                    argument_error);
}
